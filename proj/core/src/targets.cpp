#include "sobomap/targets.hpp"

#include <cmath>

#include "sobomap/rng.hpp"

namespace sobomap {

double SigmaPiece::dist(const Vec& x) const {
    switch (kind) {
        case Kind::Point:
            return norm2(x - center);
        case Kind::Line: {
            Vec d = x - center;
            double t = dot(d, axis);
            return norm2(d - t * axis);
        }
        case Kind::Circle: {
            // distance to a circle of given radius in the plane through
            // `center` with normal `axis`
            Vec d = x - center;
            double z = dot(d, axis);
            Vec inplane = d - z * axis;
            double rho = norm2(inplane);
            double dr = rho - radius;
            return std::sqrt(dr * dr + z * z);
        }
    }
    return 0;
}

double TargetManifold::dist_sigma(const Vec& x) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : sigma_pieces()) best = std::min(best, p.dist(x));
    return best;
}

Mat TargetManifold::dP(const Vec& x) const {
    double d = dist_sigma(x);
    if (d <= 1e-12) throw SingularityError("dP at singular set", d);
    double h = 1e-5 * d;
    int nu = ambient();
    Mat J(nu, nu);
    for (int j = 0; j < nu; ++j) {
        Vec xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        Vec pp = project(xp), pm = project(xm);
        for (int i = 0; i < nu; ++i) J(i, j) = (pp[i] - pm[i]) / (2 * h);
    }
    return J;
}

namespace {

class SphereTarget final : public TargetManifold {
  public:
    explicit SphereTarget(int N) : N_(N) {
        if (N < 0 || N > 6) throw DomainError("sphere target: N out of range");
        pieces_.push_back(SigmaPiece{SigmaPiece::Kind::Point, zeros(N + 1), zeros(N + 1), 0});
    }
    std::string name() const override { return "sphere:" + std::to_string(N_); }
    int ambient() const override { return N_ + 1; }
    int sigma_codim() const override { return N_ + 1; }
    double separation() const override { return 1.0; }
    double iota() const override { return 0.5; }
    int connectivity_order() const override { return N_ - 1; }
    const std::vector<SigmaPiece>& sigma_pieces() const override { return pieces_; }

    bool member(const Vec& x, double tol) const override {
        return std::fabs(norm2(x) - 1.0) <= tol;
    }
    Vec project(const Vec& x) const override {
        double r = norm2(x);
        if (r <= 1e-12) throw SingularityError("sphere projection at origin", r);
        return x * (1.0 / r);
    }
    Vec basepoint() const override {
        Vec b(N_ + 1);
        b[0] = 1;
        return b;
    }
    Mat dP(const Vec& x) const override {
        // DP = (I - xhat xhat^T) / |x|
        double r = norm2(x);
        if (r <= 1e-12) throw SingularityError("sphere dP at origin", r);
        int nu = N_ + 1;
        Mat J(nu, nu);
        for (int i = 0; i < nu; ++i)
            for (int j = 0; j < nu; ++j)
                J(i, j) = ((i == j ? 1.0 : 0.0) - x[i] * x[j] / (r * r)) / r;
        return J;
    }

  private:
    int N_;
    std::vector<SigmaPiece> pieces_;
};

class TorusTarget final : public TargetManifold {
  public:
    TorusTarget() {
        Vec ez{0, 0, 1};
        pieces_.push_back(SigmaPiece{SigmaPiece::Kind::Circle, zeros(3), ez, R_});
        pieces_.push_back(SigmaPiece{SigmaPiece::Kind::Line, zeros(3), ez, 0});
    }
    std::string name() const override { return "torus"; }
    int ambient() const override { return 3; }
    int sigma_codim() const override { return 2; }
    double separation() const override { return 1.0; }
    double iota() const override { return 0.5; }
    int connectivity_order() const override { return 0; }
    const std::vector<SigmaPiece>& sigma_pieces() const override { return pieces_; }

    bool member(const Vec& x, double tol) const override {
        double rho = std::hypot(x[0], x[1]);
        double dr = rho - R_;
        return std::fabs(std::sqrt(dr * dr + x[2] * x[2]) - r_) <= tol;
    }
    Vec project(const Vec& x) const override {
        double d = dist_sigma(x);
        if (d <= 1e-12) throw SingularityError("torus projection on singular set", d);
        double rho = std::hypot(x[0], x[1]);
        // meridian plane: q = (rho, z), pushed radially from the core (R, 0)
        double wr = rho - R_, wz = x[2];
        double wn = std::sqrt(wr * wr + wz * wz);
        double pr = R_ + r_ * wr / wn;  // radial coordinate of the image
        double c = x[0] / rho, s = x[1] / rho;
        return Vec{pr * c, pr * s, r_ * wz / wn};
    }
    Vec basepoint() const override { return Vec{3, 0, 0}; }

  private:
    double R_ = 2.0, r_ = 1.0;
    std::vector<SigmaPiece> pieces_;
};

}  // namespace

std::shared_ptr<TargetManifold> make_sphere_target(int N) {
    return std::make_shared<SphereTarget>(N);
}
std::shared_ptr<TargetManifold> make_torus_target() { return std::make_shared<TorusTarget>(); }

std::shared_ptr<TargetManifold> make_target(const std::string& spec) {
    if (spec == "torus") return make_torus_target();
    if (spec.rfind("sphere:", 0) == 0) {
        int N = std::stoi(spec.substr(7));
        return make_sphere_target(N);
    }
    throw DomainError("unknown target spec: " + spec);
}

std::function<Vec(const Vec&)> homogeneous_extension(std::function<Vec(const Vec&)> f,
                                                     double halfwidth) {
    return [f = std::move(f), halfwidth](const Vec& x) -> Vec {
        double r = norm_sup(x);
        if (r <= 1e-15) throw SingularityError("homogeneous extension at cone apex", r);
        return f(x * (halfwidth / r));
    };
}

DerivBoundReport projection_derivative_bound_check(const TargetManifold& t,
                                                   const std::vector<int>& js,
                                                   int nsamples, std::uint64_t seed,
                                                   double R) {
    DerivBoundReport rep;
    rep.js = js;
    rep.C.assign(js.size(), 0.0);
    rep.samples = nsamples;
    int nu = t.ambient();
    Rng rng = Rng::stream(seed, stream_label("deriv-bound"), 0);

    auto sample_point = [&]() {
        for (;;) {
            Vec x = rng.in_ball(nu) * R;
            if (t.dist_sigma(x) > 1e-2) return x;
        }
    };

    auto d2_frobenius = [&](const Vec& x) {
        double d = t.dist_sigma(x);
        double h = 1e-4 * d;
        double acc = 0;
        for (int a = 0; a < nu; ++a)
            for (int b = a; b < nu; ++b) {
                Vec s(nu);
                if (a == b) {
                    Vec xp = x, xm = x;
                    xp[a] += h;
                    xm[a] -= h;
                    Vec c = t.project(x);
                    Vec vp = t.project(xp), vm = t.project(xm);
                    s = vp + vm - 2.0 * c;
                    s *= 1.0 / (h * h);
                } else {
                    Vec xpp = x, xpm = x, xmp = x, xmm = x;
                    xpp[a] += h; xpp[b] += h;
                    xpm[a] += h; xpm[b] -= h;
                    xmp[a] -= h; xmp[b] += h;
                    xmm[a] -= h; xmm[b] -= h;
                    s = t.project(xpp) - t.project(xpm) - t.project(xmp) + t.project(xmm);
                    s *= 1.0 / (4 * h * h);
                }
                double w = (a == b) ? 1.0 : 2.0;  // symmetric off-diagonal pair
                acc += w * dot(s, s);
            }
        return std::sqrt(acc);
    };

    std::vector<Vec> pts(size_t(nsamples));
    for (auto& p : pts) p = sample_point();

    for (size_t ji = 0; ji < js.size(); ++ji) {
        int j = js[ji];
        double best = 0;
        for (const Vec& x : pts) {
            double d = t.dist_sigma(x);
            double mag = (j == 1) ? op_norm(t.dP(x)) : d2_frobenius(x);
            best = std::max(best, mag * std::pow(d, j));
        }
        rep.C[ji] = best;
    }

    // mean-value constant on ordered pairs (dist(x) <= dist(y))
    double cmv = 0;
    int npairs = std::max(100, nsamples / 2);
    for (int k = 0; k < npairs; ++k) {
        Vec x = pts[size_t(2 * k) % pts.size()];
        Vec y = pts[size_t(2 * k + 1) % pts.size()];
        if (t.dist_sigma(x) > t.dist_sigma(y)) std::swap(x, y);
        double sep = norm2(x - y);
        if (sep < 1e-9) continue;
        Mat Jx = t.dP(x), Jy = t.dP(y);
        double diff = 0;
        for (size_t i = 0; i < Jx.a.size(); ++i) {
            double e = Jx.a[i] - Jy.a[i];
            diff += e * e;
        }
        diff = std::sqrt(diff);
        double d = t.dist_sigma(x);
        cmv = std::max(cmv, diff * d * d / sep);
    }
    rep.C_mean_value = cmv;
    return rep;
}

}  // namespace sobomap
