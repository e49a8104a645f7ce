#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sobomap {

// Fixed-capacity vector for points in R^m and target values in R^nu.
// Dimensions stay small (m <= 5, nu <= 4 in practice); capacity 8 covers both.
struct Vec {
    static constexpr int kCap = 8;
    std::array<double, kCap> a{};
    int n = 0;

    Vec() = default;
    explicit Vec(int dim) : n(dim) { assert(dim >= 0 && dim <= kCap); }
    Vec(std::initializer_list<double> xs) : n(int(xs.size())) {
        assert(n <= kCap);
        int i = 0;
        for (double x : xs) a[i++] = x;
    }

    double& operator[](int i) { return a[i]; }
    double operator[](int i) const { return a[i]; }
    int dim() const { return n; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < n; ++i) a[i] += o.a[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < n; ++i) a[i] -= o.a[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < n; ++i) a[i] *= s;
        return *this;
    }
};

inline Vec operator+(Vec x, const Vec& y) { return x += y; }
inline Vec operator-(Vec x, const Vec& y) { return x -= y; }
inline Vec operator*(double s, Vec x) { return x *= s; }
inline Vec operator*(Vec x, double s) { return x *= s; }

inline double dot(const Vec& x, const Vec& y) {
    double s = 0;
    for (int i = 0; i < x.n; ++i) s += x.a[i] * y.a[i];
    return s;
}
inline double norm2(const Vec& x) { return std::sqrt(dot(x, x)); }
inline double norm_sup(const Vec& x) {
    double s = 0;
    for (int i = 0; i < x.n; ++i) s = std::max(s, std::fabs(x.a[i]));
    return s;
}
inline Vec zeros(int n) { return Vec(n); }

// Norm selector shared by distance queries; Sup is the cube-geometry norm.
enum class Norm { Euclid, Sup };

inline double norm_of(const Vec& x, Norm which) {
    return which == Norm::Euclid ? norm2(x) : norm_sup(x);
}

// Dense matrix, row-major, for differentials D u (rows = target, cols = domain).
struct Mat {
    int rows = 0, cols = 0;
    std::vector<double> a;
    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0.0) {}
    double& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    double operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
};

inline double frobenius(const Mat& m) {
    double s = 0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

// Largest singular value by power iteration on J^T J. Deterministic start.
inline double op_norm(const Mat& J, int iters = 60) {
    if (J.cols == 0 || J.rows == 0) return 0.0;
    std::vector<double> v(J.cols, 1.0), w(J.rows), u(J.cols);
    double s = 0;
    for (int it = 0; it < iters; ++it) {
        for (int i = 0; i < J.rows; ++i) {
            double t = 0;
            for (int j = 0; j < J.cols; ++j) t += J(i, j) * v[j];
            w[i] = t;
        }
        for (int j = 0; j < J.cols; ++j) {
            double t = 0;
            for (int i = 0; i < J.rows; ++i) t += J(i, j) * w[i];
            u[j] = t;
        }
        double nu = 0;
        for (double x : u) nu += x * x;
        nu = std::sqrt(nu);
        if (nu == 0) return 0.0;
        for (int j = 0; j < J.cols; ++j) v[j] = u[j] / nu;
        s = std::sqrt(nu);
    }
    return s;
}

// Eigenvalues of a small symmetric matrix by cyclic Jacobi. Ascending order.
inline std::vector<double> sym_eigenvalues(Mat G) {
    const int n = G.rows;
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += G(p, q) * G(p, q);
        if (off < 1e-28) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(G(p, q)) < 1e-300) continue;
                double theta = (G(q, q) - G(p, p)) / (2 * G(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double gpk = G(p, k), gqk = G(q, k);
                    G(p, k) = c * gpk - s * gqk;
                    G(q, k) = s * gpk + c * gqk;
                }
                for (int k = 0; k < n; ++k) {
                    double gkp = G(k, p), gkq = G(k, q);
                    G(k, p) = c * gkp - s * gkq;
                    G(k, q) = s * gkp + c * gkq;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = G(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Smallest singular value of J restricted to its column space dimension:
// sigma_min = sqrt(lambda_min(J^T J)) for rows >= cols.
inline double min_singular_value(const Mat& J) {
    Mat G(J.cols, J.cols);
    for (int i = 0; i < J.cols; ++i)
        for (int j = 0; j < J.cols; ++j) {
            double s = 0;
            for (int r = 0; r < J.rows; ++r) s += J(r, i) * J(r, j);
            G(i, j) = s;
        }
    double lmin = sym_eigenvalues(G).front();
    return lmin > 0 ? std::sqrt(lmin) : 0.0;
}

}  // namespace sobomap
