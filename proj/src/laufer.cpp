#include "plumb/laufer.hpp"

namespace plumb {

ComputationSequence generalized_laufer(const LatticeContext& ctx, Vec x,
                                       const VertexChooser& choose) {
    if (static_cast<int>(x.size()) != ctx.n) throw GraphError("cycle binding mismatch");
    ComputationSequence seq;
    Vec prods = intersect_all(ctx, x);  // (x, E_v) per position
    for (;;) {
        std::vector<int> cand;
        for (int v = 0; v < ctx.n; ++v)
            if (prods[v] > 0) cand.push_back(v);
        if (cand.empty()) break;
        int v = choose ? choose(cand) : cand[0];
        seq.steps.push_back({x, ctx.g.ids[v]});
        x[v] += 1;
        // incremental update of M*x by column v of M
        prods[v] += ctx.M[v][v];
        for (int w : ctx.g.adj[v]) prods[w] += 1;
    }
    seq.steps.push_back({x, -1});
    seq.result = std::move(x);
    return seq;
}

Vec minimal_cycle(const LatticeContext& ctx) {
    return generalized_laufer(ctx, ctx.unit(0)).result;
}

Vec s_class_min(const LatticeContext& ctx, const Vec& lp) {
    return generalized_laufer(ctx, representative_r(ctx, lp)).result;
}

Classification classify(const LatticeContext& ctx) {
    Q c = chi(ctx, minimal_cycle(ctx));
    Kind k = c == 1 ? Kind::Rational : (c == 0 ? Kind::Elliptic : Kind::Other);
    if (c > 1) throw std::logic_error("chi(Z_min) > 1 impossible on negative definite graphs");
    return {k, c};
}

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Rational: return "Rational";
        case Kind::Elliptic: return "Elliptic";
        default: return "Other";
    }
}

Vec minimally_elliptic_cycle(const LatticeContext& ctx) {
    if (classify(ctx).kind != Kind::Elliptic) throw NotElliptic("graph is not elliptic");
    Vec zmin = minimal_cycle(ctx);
    // enumerate integral 0 < l <= Z_min, collect chi = 0, take coordinatewise min;
    // all values are small integers, so plain machine arithmetic suffices:
    // chi(l) = 0  <=>  (l,l) = (l,Z_K)  <=>  sum e_v l_v^2 + 2 sum_edges l_u l_v
    //                                        = sum (e_v + 2) l_v
    std::vector<long> cur(ctx.n, 0), best;
    bool found = false;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == ctx.n) {
            long long quad = 0, lin = 0;
            bool zero = true;
            for (int v = 0; v < ctx.n; ++v) {
                quad += ctx.g.euler[v] * cur[v] * cur[v];
                lin += (ctx.g.euler[v] + 2) * cur[v];
                zero = zero && cur[v] == 0;
            }
            for (auto& [a, b] : ctx.g.edges)
                quad += 2ll * cur[ctx.g.pos(a)] * cur[ctx.g.pos(b)];
            if (zero || quad != lin) return;
            if (!found)
                best = cur;
            else
                for (int v = 0; v < ctx.n; ++v) best[v] = std::min(best[v], cur[v]);
            found = true;
            return;
        }
        long hi = zmin[i].get_num().get_si();
        for (long k = 0; k <= hi; ++k) {
            cur[i] = k;
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    if (!found) throw std::logic_error("no chi=0 cycle below Z_min on an elliptic graph");
    Vec out(ctx.n);
    for (int v = 0; v < ctx.n; ++v) out[v] = Q(best[v]);
    if (chi(ctx, out) != 0)
        throw std::logic_error("coordinatewise minimum of chi=0 cycles has chi != 0");
    return out;
}

}  // namespace plumb
