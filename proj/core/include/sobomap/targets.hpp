#pragma once

// Embedded targets N in R^nu together with their singular projections
// P : R^nu \ Sigma -> N.  P restricts to the identity on N and satisfies
// |D^j P(x)| <= C / dist(x, Sigma)^j; the checks below fit those constants
// numerically.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sobomap/errors.hpp"
#include "sobomap/vec.hpp"

namespace sobomap {

// Analytic pieces of the singular set Sigma.
struct SigmaPiece {
    enum class Kind { Point, Circle, Line } kind;
    Vec center;       // point / circle center / point on line
    Vec axis;         // circle normal or line direction (unit)
    double radius = 0;

    double dist(const Vec& x) const;
};

class TargetManifold {
  public:
    virtual ~TargetManifold() = default;

    virtual std::string name() const = 0;
    virtual int ambient() const = 0;                 // nu
    virtual int sigma_codim() const = 0;             // codim of Sigma in R^nu
    virtual double separation() const = 0;           // dist(Sigma, N)
    virtual double iota() const = 0;                 // nearest-projection radius
    virtual int connectivity_order() const = 0;      // largest j with pi_0..pi_j trivial
    virtual const std::vector<SigmaPiece>& sigma_pieces() const = 0;

    virtual bool member(const Vec& x, double tol) const = 0;
    virtual Vec project(const Vec& x) const = 0;     // P, throws SingularityError near Sigma
    virtual Vec basepoint() const = 0;               // a fixed point of N

    double dist_sigma(const Vec& x) const;

    // Jacobian of P; analytic where available, else central differences with
    // step 1e-5 * dist(x, Sigma).
    virtual Mat dP(const Vec& x) const;
};

std::shared_ptr<TargetManifold> make_sphere_target(int N);
std::shared_ptr<TargetManifold> make_torus_target();  // (R, r) = (2, 1)
// "sphere:N" or "torus"
std::shared_ptr<TargetManifold> make_target(const std::string& spec);

// Zero-homogeneous extension from the sup-norm sphere of radius `halfwidth`:
// x -> f(halfwidth * x / |x|_inf) in local coordinates. Throws at x = 0.
std::function<Vec(const Vec&)> homogeneous_extension(std::function<Vec(const Vec&)> f,
                                                     double halfwidth);

struct DerivBoundReport {
    std::vector<int> js;
    std::vector<double> C;        // fitted sup |D^j P| * dist^j
    double C_mean_value = 0;      // fitted sup |DP(x)-DP(y)| * dist(x)^2 / |x-y|
    int samples = 0;
};

// Fits the derivative-bound constants over samples in B_R \ Sigma.
DerivBoundReport projection_derivative_bound_check(const TargetManifold& t,
                                                   const std::vector<int>& js,
                                                   int nsamples, std::uint64_t seed,
                                                   double R = 4.0);

}  // namespace sobomap
