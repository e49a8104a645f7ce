#include "sobomap/grid.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace sobomap {

bool operator<(const Face& a, const Face& b) {
    for (size_t i = 0; i < a.center.size() && i < b.center.size(); ++i) {
        if (a.center[i] != b.center[i]) return a.center[i] < b.center[i];
    }
    if (a.center.size() != b.center.size()) return a.center.size() < b.center.size();
    if (a.axes != b.axes) return a.axes < b.axes;
    return a.halfwidth < b.halfwidth;
}

bool operator==(const Face& a, const Face& b) {
    return a.center == b.center && a.axes == b.axes && a.halfwidth == b.halfwidth;
}

Cubication::Cubication(int m_, Rat eta_, RatVec offset_) : m(m_), eta(eta_), offset(std::move(offset_)) {
    if (m < 1 || m > 8) throw DomainError("cubication: m out of range");
    if (!(eta.num == 1) || eta.den % 2 != 0 || eta.den < 2)
        throw DomainError("cubication: eta must have the form 1/(2n)");
    if (offset.empty()) offset.assign(size_t(m), Rat(0));
    if (int(offset.size()) != m) throw DomainError("cubication: offset dimension mismatch");
    for (const Rat& o : offset)
        if (o.num != 0) throw UnsupportedError("cubication: nonzero offsets not supported in v1");
}

std::vector<RatVec> Cubication::cube_centers() const {
    // centers at odd multiples of eta: (2k+1)*eta for k in [-n, n-1], den = 2n
    int n = cubes_per_axis() / 2;
    std::vector<RatVec> out;
    std::vector<int> idx(size_t(m), 0);
    int total = 1;
    for (int i = 0; i < m; ++i) total *= cubes_per_axis();
    out.reserve(size_t(total));
    for (int flat = 0; flat < total; ++flat) {
        int rem = flat;
        RatVec c(size_t(m));
        for (int i = 0; i < m; ++i) {
            int k = rem % cubes_per_axis() - n;
            rem /= cubes_per_axis();
            c[size_t(i)] = Rat(2 * k + 1) * eta;
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const RatVec& a, const RatVec& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

namespace {

// enumerate size-k subsets of {0..m-1} as bitmasks, ascending
std::vector<std::uint32_t> subsets_of_size(int m, int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        if (__builtin_popcount(mask) == k) out.push_back(mask);
    return out;
}

}  // namespace

Skeleton enumerate_skeleton(const Cubication& c, int ell) {
    if (ell < 0 || ell > c.m) throw DomainError("enumerate_skeleton: ell out of range");
    std::set<Face> acc;
    auto axsets = subsets_of_size(c.m, ell);
    for (const RatVec& ctr : c.cube_centers()) {
        for (std::uint32_t axes : axsets) {
            // corners of the complementary directions
            int nfree = c.m - ell;
            for (int corner = 0; corner < (1 << nfree); ++corner) {
                RatVec fc = ctr;
                int bit = 0;
                for (int i = 0; i < c.m; ++i) {
                    if ((axes >> i) & 1u) continue;
                    int s = (corner >> bit) & 1 ? 1 : -1;
                    fc[size_t(i)] = fc[size_t(i)] + Rat(s) * c.eta;
                    ++bit;
                }
                acc.insert(Face{std::move(fc), axes, c.eta});
            }
        }
    }
    Skeleton sk;
    sk.ell = ell;
    sk.faces.assign(acc.begin(), acc.end());
    return sk;
}

DualSkeleton dual_skeleton(const Cubication& c, int ell) {
    if (ell < 0 || ell > c.m - 1) throw DomainError("dual_skeleton: need 0 <= ell <= m-1");
    int ell_star = c.m - ell - 1;
    DualSkeleton d;
    d.ell_star = ell_star;
    if (ell_star == 0) {
        for (const RatVec& ctr : c.cube_centers()) d.pieces.push_back(Face{ctr, 0u, Rat(0)});
        std::sort(d.pieces.begin(), d.pieces.end());
        return d;
    }
    // maximal pieces: full [-1,1] extent in the axes directions, cube-center
    // coordinates in the pinned directions
    int n = c.cubes_per_axis() / 2;
    std::set<Face> acc;
    for (std::uint32_t axes : subsets_of_size(c.m, ell_star)) {
        int npinned = c.m - ell_star;
        std::vector<int> pinned;
        for (int i = 0; i < c.m; ++i)
            if (!((axes >> i) & 1u)) pinned.push_back(i);
        int combos = 1;
        for (int i = 0; i < npinned; ++i) combos *= c.cubes_per_axis();
        for (int flat = 0; flat < combos; ++flat) {
            int rem = flat;
            RatVec ctr(size_t(c.m), Rat(0));
            for (int i : pinned) {
                int k = rem % c.cubes_per_axis() - n;
                rem /= c.cubes_per_axis();
                ctr[size_t(i)] = Rat(2 * k + 1) * c.eta;
            }
            acc.insert(Face{std::move(ctr), axes, Rat(1)});
        }
    }
    d.pieces.assign(acc.begin(), acc.end());
    return d;
}

Skeleton unit_cube_skeleton(int m, int ell) {
    if (ell < 0 || ell > m) throw DomainError("unit_cube_skeleton: ell out of range");
    Skeleton sk;
    sk.ell = ell;
    for (std::uint32_t axes : subsets_of_size(m, ell)) {
        int nfree = m - ell;
        for (int corner = 0; corner < (1 << nfree); ++corner) {
            RatVec fc(size_t(m), Rat(0));
            int bit = 0;
            for (int i = 0; i < m; ++i) {
                if ((axes >> i) & 1u) continue;
                fc[size_t(i)] = Rat((corner >> bit) & 1 ? 1 : -1);
                ++bit;
            }
            sk.faces.push_back(Face{std::move(fc), axes, Rat(1)});
        }
    }
    std::sort(sk.faces.begin(), sk.faces.end());
    return sk;
}

DualSkeleton unit_cube_dual_skeleton(int m, int ell) {
    if (ell < 0 || ell > m - 1) throw DomainError("unit_cube_dual_skeleton: need 0 <= ell <= m-1");
    DualSkeleton d;
    d.ell_star = m - ell - 1;
    for (std::uint32_t axes : subsets_of_size(m, d.ell_star))
        d.pieces.push_back(Face{RatVec(size_t(m), Rat(0)), axes, Rat(1)});
    std::sort(d.pieces.begin(), d.pieces.end());
    return d;
}

namespace {

bool box_less(const RatBox& a, const RatBox& b) {
    for (size_t i = 0; i < a.lo.size(); ++i) {
        if (a.lo[i] != b.lo[i]) return a.lo[i] < b.lo[i];
        if (a.hi[i] != b.hi[i]) return a.hi[i] < b.hi[i];
    }
    return false;
}
bool box_eq(const RatBox& a, const RatBox& b) { return a.lo == b.lo && a.hi == b.hi; }

}  // namespace

std::vector<Crossing> crossing_points(const std::vector<Face>& pieces) {
    const Rat one(1), minus_one(-1);
    std::vector<Crossing> found;
    for (size_t i = 0; i < pieces.size(); ++i) {
        for (size_t j = i + 1; j < pieces.size(); ++j) {
            const Face &A = pieces[i], &B = pieces[j];
            int m = A.ambient();
            RatBox box;
            box.lo.resize(size_t(m));
            box.hi.resize(size_t(m));
            bool empty = false, meets_interior = true;
            for (int k = 0; k < m && !empty; ++k) {
                Rat lo = rat_max(A.lo(k), B.lo(k));
                Rat hi = rat_min(A.hi(k), B.hi(k));
                if (lo > hi) { empty = true; break; }
                // clip to the closed cube; track open-cube intersection
                lo = rat_max(lo, minus_one);
                hi = rat_min(hi, one);
                if (lo > hi || !(lo < one) || !(hi > minus_one)) meets_interior = false;
                if (lo > hi) { empty = true; break; }
                box.lo[size_t(k)] = lo;
                box.hi[size_t(k)] = hi;
            }
            if (empty || !meets_interior) continue;
            found.push_back(Crossing{std::move(box), {int(i), int(j)}});
        }
    }
    // merge coincident regions
    std::sort(found.begin(), found.end(), [](const Crossing& a, const Crossing& b) {
        return box_less(a.region, b.region);
    });
    std::vector<Crossing> out;
    for (auto& c : found) {
        if (!out.empty() && box_eq(out.back().region, c.region)) {
            auto& ps = out.back().pieces;
            ps.insert(ps.end(), c.pieces.begin(), c.pieces.end());
        } else {
            out.push_back(std::move(c));
        }
    }
    for (auto& c : out) {
        std::sort(c.pieces.begin(), c.pieces.end());
        c.pieces.erase(std::unique(c.pieces.begin(), c.pieces.end()), c.pieces.end());
    }
    return out;
}

double dist_to_face(const Vec& x, const Face& f, Norm norm) {
    double acc = 0;
    for (int i = 0; i < f.ambient(); ++i) {
        double c = f.center[size_t(i)].to_double();
        double h = f.has_axis(i) ? f.halfwidth.to_double() : 0.0;
        double d = std::max(0.0, std::fabs(x[i] - c) - h);
        if (norm == Norm::Euclid)
            acc += d * d;
        else
            acc = std::max(acc, d);
    }
    return norm == Norm::Euclid ? std::sqrt(acc) : acc;
}

double dist_to_faces(const Vec& x, const std::vector<Face>& pieces, Norm norm) {
    double best = std::numeric_limits<double>::infinity();
    for (const Face& f : pieces) best = std::min(best, dist_to_face(x, f, norm));
    return best;
}

Vec face_center(const Face& f) {
    Vec x(f.ambient());
    for (int i = 0; i < f.ambient(); ++i) x[i] = f.center[size_t(i)].to_double();
    return x;
}

bool face_contains(const Face& f, const Vec& x, double tol) {
    return dist_to_face(x, f, Norm::Sup) <= tol;
}

}  // namespace sobomap
