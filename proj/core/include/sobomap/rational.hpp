#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sobomap {

// Exact rational on int64, always normalized (den > 0, gcd(num,den) = 1).
// Grid coordinates are small multiples of eta = 1/(2n); overflow is not a
// concern at the scales the cubication code touches.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    double to_double() const { return double(num) / double(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
inline Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
inline Rat operator-(Rat a) { return Rat(-a.num, a.den); }
inline Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
inline Rat operator/(Rat a, Rat b) {
    if (b.num == 0) throw std::domain_error("Rat: division by zero");
    return Rat(a.num * b.den, a.den * b.num);
}
inline bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(Rat a, Rat b) { return !(a == b); }
inline bool operator<(Rat a, Rat b) { return a.num * b.den < b.num * a.den; }
inline bool operator<=(Rat a, Rat b) { return a.num * b.den <= b.num * a.den; }
inline bool operator>(Rat a, Rat b) { return b < a; }
inline bool operator>=(Rat a, Rat b) { return b <= a; }
inline Rat rat_abs(Rat a) { return a.num < 0 ? -a : a; }
inline Rat rat_min(Rat a, Rat b) { return a < b ? a : b; }
inline Rat rat_max(Rat a, Rat b) { return a < b ? b : a; }

using RatVec = std::vector<Rat>;

}  // namespace sobomap
