#pragma once

#include "plumb/graph.hpp"
#include "plumb/types.hpp"

namespace plumb {

// Precomputed exact intersection-form data for one graph.
struct LatticeContext {
    PlumbingGraph g;
    int n = 0;
    std::vector<std::vector<Q>> M;       // intersection matrix
    std::vector<std::vector<Q>> invnegM; // (-M)^{-1}; column v = E*_v coordinates
    std::vector<Vec> dual;               // dual[v] = E*_v
    Vec ZK;                              // anti-canonical cycle
    Vec E_total;                         // sum of all E_v
    Z det;                               // det(-M) = |H|
    bool numerically_gorenstein = false; // Z_K integral

    Vec unit(int vpos) const {
        Vec e(n, Q(0));
        e[vpos] = 1;
        return e;
    }
};

LatticeContext build_context(const PlumbingGraph& g);

Q intersect(const LatticeContext& ctx, const Vec& a, const Vec& b);
// (l, E_v) for all v at once, i.e. M*l
Vec intersect_all(const LatticeContext& ctx, const Vec& l);

Q chi(const LatticeContext& ctx, const Vec& l);

bool class_equal(const LatticeContext& ctx, const Vec& a, const Vec& b);
Vec representative_r(const LatticeContext& ctx, const Vec& l);

bool in_lipman_cone(const LatticeContext& ctx, const Vec& l);

// vertex ids carrying a nonzero coordinate, in declaration order
std::vector<int> support(const LatticeContext& ctx, const Vec& l);

}  // namespace plumb
