#pragma once

// Cubications of Q^m = (-1,1)^m, their skeleta, and dual skeleta.
//
// Conventions used throughout:
//  - eta is the cube inradius (half-sidelength); admissible eta = 1/(2n).
//  - cube centers sit at odd multiples of eta, so cubes per axis = 1/eta.
//  - a Face is an axis-aligned box: coordinates off `axes` are pinned to the
//    center, coordinates in `axes` extend by `halfwidth` both ways.
//  - dual pieces are merged to maximal extent: a dual ell*-piece runs the full
//    [-1,1] span in each of its axes, pinned to cube-center coordinates in the
//    others. Closures may touch the boundary of Q^m; crossing queries restrict
//    to the open cube.

#include <cstdint>
#include <optional>
#include <vector>

#include "sobomap/errors.hpp"
#include "sobomap/rational.hpp"
#include "sobomap/vec.hpp"

namespace sobomap {

struct Face {
    RatVec center;
    std::uint32_t axes = 0;  // bitmask over coordinate axes
    Rat halfwidth{0};

    int ambient() const { return int(center.size()); }
    int dim() const { return __builtin_popcount(axes); }
    bool has_axis(int i) const { return (axes >> i) & 1u; }

    // closed interval of the face in coordinate i
    Rat lo(int i) const { return has_axis(i) ? center[i] - halfwidth : center[i]; }
    Rat hi(int i) const { return has_axis(i) ? center[i] + halfwidth : center[i]; }
};

bool operator<(const Face& a, const Face& b);   // lexicographic (center, axes, halfwidth)
bool operator==(const Face& a, const Face& b);

struct Cubication {
    int m = 0;
    Rat eta{1, 2};
    RatVec offset;  // v1 accepts only zero offsets

    Cubication(int m_, Rat eta_, RatVec offset_ = {});
    int cubes_per_axis() const { return int(eta.den); }  // eta = 1/(2n) => den = 2n
    std::vector<RatVec> cube_centers() const;
};

struct Skeleton {
    int ell = 0;
    std::vector<Face> faces;
};

struct DualSkeleton {
    int ell_star = 0;
    std::vector<Face> pieces;
};

// All ell-faces of the cubication, deduplicated, canonically ordered.
Skeleton enumerate_skeleton(const Cubication& c, int ell);

// Maximal pieces of the dual (m-ell-1)-skeleton of the cubication.
DualSkeleton dual_skeleton(const Cubication& c, int ell);

// Model objects on the single unit cube [-1,1]^m (not a Cubication: eta would
// have to be 1). K^ell = faces of the cube; T^{ell*} = points with at least
// ell+1 vanishing coordinates.
Skeleton unit_cube_skeleton(int m, int ell);
DualSkeleton unit_cube_dual_skeleton(int m, int ell);

// Axis-aligned box with independent per-coordinate intervals; crossing regions.
struct RatBox {
    RatVec lo, hi;
    int ambient() const { return int(lo.size()); }
    bool is_point() const {
        for (size_t i = 0; i < lo.size(); ++i)
            if (!(lo[i] == hi[i])) return false;
        return true;
    }
    Vec midpoint() const {
        Vec x(ambient());
        for (int i = 0; i < ambient(); ++i) x[i] = ((lo[i] + hi[i]) / Rat(2)).to_double();
        return x;
    }
};

struct Crossing {
    RatBox region;               // clipped to [-1,1]^m, meets the open cube
    std::vector<int> pieces;     // indices into the queried list, sorted
};

// Pairwise intersections of closed faces, restricted to the open cube and
// merged when regions coincide. Exact rational arithmetic, sorted output.
std::vector<Crossing> crossing_points(const std::vector<Face>& pieces);

// Distance from x to the union of closed faces; +inf when the list is empty.
double dist_to_faces(const Vec& x, const std::vector<Face>& pieces, Norm norm);
double dist_to_face(const Vec& x, const Face& f, Norm norm);

// Face utilities shared by constructions.
Vec face_center(const Face& f);
bool face_contains(const Face& f, const Vec& x, double tol);

}  // namespace sobomap
