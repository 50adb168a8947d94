#include "plumb/poincare.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace plumb {

namespace {

// generator positions: vertices with delta != 2, declaration order
std::vector<int> generator_positions(const LatticeContext& ctx) {
    std::vector<int> gen;
    for (int v = 0; v < ctx.n; ++v)
        if (ctx.g.adj[v].size() != 2) gen.push_back(v);
    return gen;
}

long long factor_coeff(const LatticeContext& ctx, int vpos, long k) {
    size_t delta = ctx.g.adj[vpos].size();
    if (delta >= 3) {
        Z b = binom(static_cast<unsigned long>(delta - 2), static_cast<unsigned long>(k));
        long long v = b.get_si();
        return (k % 2) ? -v : v;
    }
    if (delta == 1) return 1;
    return k + 1;  // delta == 0: single-vertex graph, (1-t)^{-2}
}

struct EnumPlan {
    std::vector<int> gen;        // generator positions
    std::vector<long> bound;     // per-generator multiplicity bound
    std::vector<int> Ipos;       // positions of I
    Vec excl;                    // full-length exclusion vector (only I coords used)
};

EnumPlan make_plan(const LatticeContext& ctx, const Vec& exclusion, const std::vector<int>& I) {
    EnumPlan plan;
    plan.gen = generator_positions(ctx);
    if (static_cast<int>(exclusion.size()) != ctx.n) throw GraphError("cycle binding mismatch");
    if (I.empty()) throw GraphError("empty coordinate set");
    for (int id : I) plan.Ipos.push_back(ctx.g.pos(id));
    plan.excl = exclusion;
    for (int v : plan.gen) {
        // largest k such that k*E*_v alone still has some I-coordinate <= exclusion
        long b = 0;
        for (int w : plan.Ipos) {
            if (exclusion[w] < 0) continue;
            Q r = exclusion[w] / ctx.dual[v][w];
            Z fl;
            mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
            if (!fl.fits_slong_p()) throw GraphError("enumeration bound overflow: invalid exclusion");
            b = std::max(b, fl.get_si());
        }
        size_t delta = ctx.g.adj[v].size();
        if (delta >= 3) b = std::min(b, static_cast<long>(delta) - 2);
        if (b > 2000000) throw GraphError("enumeration bound overflow: invalid exclusion");
        plan.bound.push_back(b);
    }
    return plan;
}

bool above_on_I(const Vec& lp, const EnumPlan& plan) {
    // strictly above the exclusion in every I-coordinate: no completion can recover
    for (int w : plan.Ipos)
        if (lp[w] <= plan.excl[w]) return false;
    return true;
}

void dfs(const LatticeContext& ctx, const EnumPlan& plan, const std::optional<Vec>& class_rep,
         size_t gi, std::vector<long>& mult, Vec& lp, long long coeff,
         std::vector<SupportElem>& out) {
    if (gi == plan.gen.size()) {
        if (class_rep && !is_integral(vec_sub(lp, *class_rep))) return;
        SupportElem e;
        for (size_t t = 0; t < plan.gen.size(); ++t)
            if (mult[t] != 0) e.stars.mult[ctx.g.ids[plan.gen[t]]] = mult[t];
        e.lp = lp;
        e.z = coeff;
        out.push_back(std::move(e));
        return;
    }
    int v = plan.gen[gi];
    Vec saved = lp;
    for (long k = 0; k <= plan.bound[gi]; ++k) {
        if (k > 0)
            for (int i = 0; i < ctx.n; ++i) lp[i] += ctx.dual[v][i];
        if (above_on_I(lp, plan)) break;  // coordinates only grow from here
        mult[gi] = k;
        dfs(ctx, plan, class_rep, gi + 1, mult, lp, coeff * factor_coeff(ctx, v, k), out);
    }
    mult[gi] = 0;
    lp = saved;
}

}  // namespace

long long series_coefficient(const LatticeContext& ctx, const StarExponent& se) {
    long long c = 1;
    for (auto& [id, k] : se.mult) {
        if (k < 0) throw GraphError("negative multiplicity");
        int v = ctx.g.pos(id);
        size_t delta = ctx.g.adj[v].size();
        if (delta == 2) throw GraphError("multiplicity on a non-generator vertex");
        if (delta >= 3 && k > static_cast<long>(delta) - 2)
            throw GraphError("node multiplicity exceeds valency bound");
        c *= factor_coeff(ctx, v, k);
    }
    return c;
}

std::vector<SupportElem> enumerate_dual_support_serial(const LatticeContext& ctx,
                                                       const std::optional<Vec>& class_rep,
                                                       const Vec& exclusion,
                                                       const std::vector<int>& I) {
    EnumPlan plan = make_plan(ctx, exclusion, I);
    std::vector<SupportElem> out;
    std::vector<long> mult(plan.gen.size(), 0);
    Vec lp(ctx.n, Q(0));
    dfs(ctx, plan, class_rep, 0, mult, lp, 1, out);
    return out;
}

std::vector<SupportElem> enumerate_dual_support(const LatticeContext& ctx,
                                                const std::optional<Vec>& class_rep,
                                                const Vec& exclusion,
                                                const std::vector<int>& I,
                                                int threads) {
    EnumPlan plan = make_plan(ctx, exclusion, I);
    if (threads <= 1 || plan.gen.empty())
        return enumerate_dual_support_serial(ctx, class_rep, exclusion, I);

    // split the first generator's multiplicity range across threads;
    // per-slice results merged in range order, so output is schedule-independent
    long b0 = plan.bound[0];
    int v0 = plan.gen[0];
    std::vector<std::vector<SupportElem>> slices(b0 + 1);
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(dynamic)
#endif
    for (long k = 0; k <= b0; ++k) {
        Vec lp(ctx.n, Q(0));
        for (int i = 0; i < ctx.n; ++i) lp[i] = Q(k) * ctx.dual[v0][i];
        if (above_on_I(lp, plan)) continue;
        std::vector<long> mult(plan.gen.size(), 0);
        mult[0] = k;
        dfs(ctx, plan, class_rep, 1, mult, lp, factor_coeff(ctx, v0, k), slices[k]);
        // the recursion resets mult[0]; restore the slice's stars
        for (auto& e : slices[k])
            if (k != 0) e.stars.mult[ctx.g.ids[v0]] = k;
    }
    std::vector<SupportElem> out;
    for (auto& s : slices)
        for (auto& e : s) out.push_back(std::move(e));
    return out;
}

LaurentPoly dual_canonical_polynomial(const LatticeContext& ctx, int threads) {
    Vec excl = vec_sub(ctx.ZK, ctx.E_total);
    auto elems = enumerate_dual_support(ctx, ctx.ZK, excl, ctx.g.ids, threads);
    LaurentPoly p;
    p.vars = ctx.g.ids;
    for (auto& e : elems)
        if (e.z != 0) p.terms[e.lp] += e.z;
    std::erase_if(p.terms, [](const auto& kv) { return kv.second == 0; });
    return p;
}

LaurentPoly canonical_polynomial(const LatticeContext& ctx, int threads) {
    LaurentPoly dual = dual_canonical_polynomial(ctx, threads);
    LaurentPoly p;
    p.vars = ctx.g.ids;
    Vec shift = vec_sub(ctx.ZK, ctx.E_total);
    for (auto& [lcheck, z] : dual.terms) {
        Vec expo = vec_sub(shift, lcheck);
        if (!is_integral(expo))
            throw std::logic_error("canonical polynomial exponent not integral");
        p.terms[expo] += z;
    }
    return p;
}

long long counting_function(const LatticeContext& ctx, const Vec& class_rep,
                            const std::vector<int>& I, const Vec& x, int threads) {
    // l'_w < x_w  <=>  l'_w <= x_w - 1/det  (denominators divide det)
    Q eps = Q(1) / Q(ctx.det);
    Vec excl(ctx.n, Q(0));
    std::set<int> Iset(I.begin(), I.end());
    for (int i = 0; i < ctx.n; ++i)
        excl[i] = Iset.count(ctx.g.ids[i]) ? x[i] - eps : Q(0);
    auto elems = enumerate_dual_support(ctx, class_rep, excl, I, threads);
    long long s = 0;
    for (auto& e : elems) s += e.z;
    return s;
}

long long sw0_norm(const LatticeContext& ctx, int threads) {
    return canonical_polynomial(ctx, threads).eval_at_one();
}

std::vector<ExponentRecord> classify_exponents(const LatticeContext& ctx,
                                               const LaurentPoly& P0,
                                               const EllipticSequence& seq) {
    std::vector<ExponentRecord> out;
    Vec shift = vec_sub(ctx.ZK, ctx.E_total);
    for (auto& [expo, coeff] : P0.terms) {
        std::vector<int> neg;
        for (int i = 0; i < ctx.n; ++i)
            if (expo[i] < 0) neg.push_back(ctx.g.ids[i]);
        int level = -2;
        for (int j = -1; j < seq.m; ++j) {
            std::set<int> b(seq.level(j + 1).B.begin(), seq.level(j + 1).B.end());
            std::vector<int> comp;
            for (int id : ctx.g.ids)
                if (!b.count(id)) comp.push_back(id);
            if (comp == neg) {
                level = j;
                break;
            }
        }
        if (level == -2)
            throw std::logic_error("exponent's negative-vertex set matches no sequence level");
        ExponentRecord rec;
        rec.exponent = expo;
        rec.coeff = coeff;
        rec.level = level;
        rec.associated_cycle = seq.level(level).C;
        rec.dual = vec_sub(shift, expo);
        Vec extra = vec_sub(rec.dual, rec.associated_cycle);
        for (int i = 0; i < ctx.n; ++i) {
            if (extra[i] == 0) continue;
            if (!is_int(extra[i]) || extra[i] < 0)
                throw std::logic_error("exponent decomposition has invalid multiplicity");
            rec.extra[ctx.g.ids[i]] = extra[i].get_num().get_si();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

LaurentPoly reduce_polynomial(const LaurentPoly& p, const std::vector<int>& I) {
    if (I.empty()) throw GraphError("empty reduction set");
    std::set<int> Iset(I.begin(), I.end());
    std::vector<int> keep;  // positions within p.vars, declaration order
    LaurentPoly r;
    for (size_t i = 0; i < p.vars.size(); ++i)
        if (Iset.count(p.vars[i])) {
            keep.push_back(static_cast<int>(i));
            r.vars.push_back(p.vars[i]);
        }
    if (r.vars.size() != Iset.size()) throw GraphError("reduction set contains unknown vertex");
    for (auto& [expo, c] : p.terms) {
        Vec proj(keep.size());
        for (size_t t = 0; t < keep.size(); ++t) proj[t] = expo[keep[t]];
        r.terms[proj] += c;
    }
    std::erase_if(r.terms, [](const auto& kv) { return kv.second == 0; });
    return r;
}

LaurentPoly truncate_polynomial(const LaurentPoly& P0, const EllipticSequence& seq, int i,
                                const LatticeContext& ctx) {
    if (i < 0 || i > seq.m) throw GraphError("truncation index out of range");
    std::set<int> Bi(seq.level(i).B.begin(), seq.level(i).B.end());
    LaurentPoly r;
    r.vars = P0.vars;
    for (auto& [expo, c] : P0.terms) {
        bool keep = true;
        for (int t = 0; t < ctx.n; ++t)
            if (!Bi.count(ctx.g.ids[t]) && expo[t] >= 0) keep = false;
        if (keep) r.terms[expo] = c;
    }
    return r;
}

std::map<Vec, long long> brute_force_series(const LatticeContext& ctx, const Vec& bound) {
    auto above = [&](const Vec& e) {
        for (int i = 0; i < ctx.n; ++i)
            if (e[i] < bound[i]) return false;
        return true;  // e >= bound everywhere: outside the box, and stays outside
    };
    std::map<Vec, long long> acc;
    acc[Vec(ctx.n, Q(0))] = 1;
    for (int v : generator_positions(ctx)) {
        size_t delta = ctx.g.adj[v].size();
        std::vector<std::pair<Vec, long long>> factor;
        Vec e(ctx.n, Q(0));
        for (long k = 0;; ++k) {
            if (k > 0)
                for (int i = 0; i < ctx.n; ++i) e[i] += ctx.dual[v][i];
            if (delta >= 3 && k > static_cast<long>(delta) - 2) break;
            if (above(e)) break;
            factor.emplace_back(e, factor_coeff(ctx, v, k));
        }
        std::map<Vec, long long> next;
        for (auto& [e1, c1] : acc)
            for (auto& [e2, c2] : factor) {
                Vec s = vec_add(e1, e2);
                if (!above(s)) next[s] += c1 * c2;
            }
        acc = std::move(next);
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    return acc;
}

std::string poly_str(const LaurentPoly& p) {
    if (p.terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, c] : p.terms) {
        long long a = c < 0 ? -c : c;
        if (first)
            s += (c < 0 ? "-" : "");
        else
            s += (c < 0 ? " - " : " + ");
        first = false;
        s += std::to_string(a) + "*t^(";
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) s += ",";
            s += e[i].get_str();
        }
        s += ")";
    }
    return s;
}

}  // namespace plumb
