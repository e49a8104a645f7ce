#pragma once

// Small geometric/topological utilities: winding numbers, exact element
// distances for meshes, union-find component counting.

#include <functional>
#include <vector>

#include "sobomap/vec.hpp"

namespace sobomap {

// Winding number of a closed loop of S^1 values (pairs in R^2), computed from
// principal-branch angle increments. The loop must be sampled densely enough
// that consecutive increments stay below pi.
double winding_of_loop(const std::vector<Vec>& values);

// Winding of u restricted to the sup-norm circle of given radius around c in
// the plane spanned by axes (a, b); other coordinates taken from c.
double winding_on_sup_circle(const std::function<Vec(const Vec&)>& u, const Vec& c,
                             int a, int b, double radius, int nsamples = 720);

double dist_point_segment(const Vec& p, const Vec& a, const Vec& b);
double dist_segment_segment(const Vec& p1, const Vec& q1, const Vec& p2, const Vec& q2);
double dist_point_triangle(const Vec& p, const Vec& a, const Vec& b, const Vec& c);
double dist_segment_triangle(const Vec& p, const Vec& q, const Vec& a, const Vec& b,
                             const Vec& c);
double dist_triangle_triangle(const Vec& a1, const Vec& b1, const Vec& c1, const Vec& a2,
                              const Vec& b2, const Vec& c2);

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int count();
};

}  // namespace sobomap
