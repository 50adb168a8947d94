#include "plumb/extensions.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace plumb {

namespace {

void require_full_subgraph(const PlumbingGraph& inner, const PlumbingGraph& outer) {
    for (int i = 0; i < inner.n(); ++i) {
        int id = inner.ids[i];
        if (!outer.has_vertex(id) || outer.euler[outer.pos(id)] != inner.euler[i])
            throw GraphError("not a full subgraph: vertex " + std::to_string(id));
    }
    auto norm = [](const std::vector<std::pair<int, int>>& es) {
        std::set<std::pair<int, int>> s;
        for (auto& [a, b] : es) s.insert(std::minmax(a, b));
        return s;
    };
    std::set<int> in(inner.ids.begin(), inner.ids.end());
    std::set<std::pair<int, int>> induced;
    for (auto& [a, b] : outer.edges)
        if (in.count(a) && in.count(b)) induced.insert(std::minmax(a, b));
    if (norm(inner.edges) != induced)
        throw GraphError("not a full subgraph: edge sets differ");
}

}  // namespace

ExtensionPair build_extension(const PlumbingGraph& inner, const PlumbingGraph& outer) {
    if (inner.n() >= outer.n()) throw GraphError("inner graph must be a proper subgraph");
    require_full_subgraph(inner, outer);
    ExtensionPair pair;
    pair.inner = build_context(inner);
    pair.outer = build_context(outer);
    if (classify(pair.inner).kind != Kind::Elliptic || classify(pair.outer).kind != Kind::Elliptic)
        throw NotElliptic("extension pair requires elliptic graphs");
    pair.inner_seq = nn_elliptic_sequence(pair.inner);
    pair.outer_seq = nn_elliptic_sequence(pair.outer);

    std::set<int> in(inner.ids.begin(), inner.ids.end());
    for (auto& [a, b] : outer.edges) {
        if (in.count(a) && !in.count(b)) pair.boundary_outer[a].push_back(b);
        if (in.count(b) && !in.count(a)) pair.boundary_outer[b].push_back(a);
    }
    for (auto& [v, outs] : pair.boundary_outer) pair.boundary_inner.push_back(v);
    for (int v : pair.boundary_inner)
        if (inner.valency(v) > 1)
            throw GraphError("boundary vertex " + std::to_string(v) +
                             " is not an end-vertex of the inner graph");

    pair.index = -1;
    for (int j = 0; j <= pair.outer_seq.m; ++j) {
        bool contained = true;
        for (int id : pair.outer_seq.level(j).B) contained = contained && in.count(id);
        if (contained) {
            pair.index = j;
            break;
        }
    }
    if (pair.index < 0) throw std::logic_error("no sequence level contained in the inner graph");
    if (pair.index >= 1) {
        std::set<int> prev(pair.outer_seq.level(pair.index - 1).B.begin(),
                           pair.outer_seq.level(pair.index - 1).B.end());
        for (int id : inner.ids)
            if (!prev.count(id))
                throw std::logic_error("inner graph not contained in the previous level");
    }
    return pair;
}

Vec project(const ExtensionPair& pair, const Vec& l) {
    return restrict_cycle(pair.outer, pair.inner.g, l);
}

Vec dual_project(const ExtensionPair& pair, const Vec& lp) {
    Vec outer_part = vec_sub(vec_sub(pair.outer.ZK, pair.outer.E_total), lp);
    return vec_sub(vec_sub(pair.inner.ZK, pair.inner.E_total), project(pair, outer_part));
}

Vec dual_operator(const ExtensionPair& pair, const Vec& lp) {
    Vec prods = intersect_all(pair.outer, lp);  // lp = sum_v (-(lp,E_v)) E*_v
    Vec out(pair.inner.n, Q(0));
    for (int i = 0; i < pair.inner.n; ++i) {
        int ov = pair.outer.g.pos(pair.inner.g.ids[i]);
        Q c = -prods[ov];
        if (c == 0) continue;
        for (int t = 0; t < pair.inner.n; ++t) out[t] += c * pair.inner.dual[i][t];
    }
    return out;
}

SmallExtensionShape small_extension_shape(const PlumbingGraph& inner, const PlumbingGraph& outer) {
    SmallExtensionShape shape;
    std::set<int> in(inner.ids.begin(), inner.ids.end());
    std::set<int> attach;
    for (int id : outer.ids) {
        if (in.count(id)) continue;
        shape.new_ids.push_back(id);
        if (outer.valency(id) != 1) return shape;  // new vertex with more than one edge
        int nb = outer.ids[outer.adj[outer.pos(id)][0]];
        if (!in.count(nb)) return shape;
        attach.insert(nb);
    }
    if (shape.new_ids.empty() || attach.size() != 1) return shape;
    shape.v0 = *attach.begin();
    shape.is_small = true;
    return shape;
}

std::vector<CheckResult> check_small_extension(const PlumbingGraph& inner,
                                               const PlumbingGraph& outer) {
    require_full_subgraph(inner, outer);
    SmallExtensionShape shape = small_extension_shape(inner, outer);
    if (!shape.is_small)
        throw GraphError("not a small extension: new vertices must all attach to one vertex");
    LatticeContext ctx = build_context(inner);
    if (classify(ctx).kind != Kind::Elliptic) throw NotElliptic("inner graph is not elliptic");
    EllipticSequence seq = nn_elliptic_sequence(ctx);
    long s = static_cast<long>(shape.new_ids.size());
    int v0pos = ctx.g.pos(shape.v0);
    Vec zmin = minimal_cycle(ctx);

    std::vector<CheckResult> out;
    auto put = [&](const std::string& name, bool ok, const std::string& detail) {
        out.push_back({name, ok ? CheckResult::Pass : CheckResult::Fail, detail});
    };
    bool in_B1 = false;
    if (seq.m >= 1)
        for (int id : seq.level(1).B) in_B1 = in_B1 || id == shape.v0;
    put("attachment vertex outside the second level (a)", !in_B1,
        "v0 = " + std::to_string(shape.v0));
    put("attachment multiplicity one in the minimal cycle (b)", zmin[v0pos] == 1,
        "multiplicity " + zmin[v0pos].get_str());
    Q prod = intersect(ctx, zmin, ctx.unit(v0pos));
    put("minimal-cycle intersection bound (c)", prod <= Q(1 - s),
        "(Z_min, E_v0) = " + prod.get_str() + ", 1-s = " + std::to_string(1 - s));
    bool in_B0 = false;
    for (int id : seq.level(0).B) in_B0 = in_B0 || id == shape.v0;
    bool d_ok = true;
    if (in_B0 && !in_B1) {
        PlumbingGraph b0 = induced_subgraph(inner, seq.level(0).B);
        d_ok = b0.valency(shape.v0) <= 1;
    }
    put("attachment end-vertex condition on the first level (d)", d_ok, "");
    return out;
}

ExtensionOutcome extend_dual_exponent(const ExtensionPair& pair, const Vec& dual, int level) {
    SmallExtensionShape shape = small_extension_shape(pair.inner.g, pair.outer.g);
    if (!shape.is_small) throw GraphError("extend_dual_exponent requires a small extension");
    int i = pair.index;
    ExtensionOutcome out;
    out.source_dual = dual;

    // decompose the inner dual exponent as C_j + sum m_v E_v off B_{j+1}
    if (level < -1 || level > pair.inner_seq.m - 1 || level + i > pair.outer_seq.m)
        throw GraphError("invalid dual exponent level");
    Vec extra = vec_sub(dual, pair.inner_seq.level(level).C);
    std::set<int> Bnext;
    for (int id : pair.inner_seq.B_or_empty(level + 1)) Bnext.insert(id);
    for (int t = 0; t < pair.inner.n; ++t) {
        if (extra[t] == 0) continue;
        if (!is_int(extra[t]) || extra[t] < 0 || Bnext.count(pair.inner.g.ids[t]))
            throw GraphError("invalid dual exponent decomposition");
    }

    // Step I: lift to the outer graph and run the computation sequence
    Vec lprime = pair.outer_seq.level(level + i).C;
    for (int t = 0; t < pair.inner.n; ++t)
        lprime[pair.outer.g.pos(pair.inner.g.ids[t])] += extra[t];
    ComputationSequence seq = generalized_laufer(pair.outer, lprime);
    out.s_of_lprime = seq.result;
    for (auto& st : seq.steps)
        if (st.vertex != -1 && pair.inner.g.has_vertex(st.vertex)) {
            out.status = ExtStatus::NonExtendable;  // the sequence re-enters the inner graph
            return out;
        }

    // Step II: distribute the remaining multiplicity over the new vertices
    long s = static_cast<long>(shape.new_ids.size());
    int v0pos = pair.outer.g.pos(shape.v0);
    Q t_q = -intersect(pair.outer, seq.result, pair.outer.unit(v0pos));
    if (!is_int(t_q)) throw std::logic_error("non-integral intersection with attachment vertex");
    long t = t_q.get_num().get_si();
    out.lo = std::max(0L, t - s + 1);
    out.hi = t;
    if (out.hi < out.lo) {
        out.status = ExtStatus::NonExtendable;
        return out;
    }
    std::vector<long> comp(s, 0);
    std::function<void(long, long)> emit = [&](long idx, long rest) {
        if (idx == s - 1) {
            comp[idx] = rest;
            Vec lnew = seq.result;
            for (long k = 0; k < s; ++k)
                lnew[pair.outer.g.pos(shape.new_ids[k])] += comp[k];
            // validate: genuine dual exponent of the outer graph
            Vec prods = intersect_all(pair.outer, lnew);
            StarExponent se;
            for (int v = 0; v < pair.outer.n; ++v) {
                Q c = -prods[v];
                if (c < 0 || !is_int(c))
                    throw std::logic_error("constructed cycle is not anti-nef integral-dual");
                if (c != 0) se.mult[pair.outer.g.ids[v]] = c.get_num().get_si();
            }
            if (!class_equal(pair.outer, lnew, pair.outer.ZK))
                throw std::logic_error("constructed cycle in wrong class");
            if (!not_geq(lnew, pair.outer.ZK))
                throw std::logic_error("constructed cycle not below the anti-canonical cycle");
            out.extensions.emplace_back(lnew, series_coefficient(pair.outer, se));
            return;
        }
        for (long k = 0; k <= rest; ++k) {
            comp[idx] = k;
            emit(idx + 1, rest - k);
        }
        comp[idx] = 0;
    };
    for (long N = out.lo; N <= out.hi; ++N) emit(0, N);
    out.status = ExtStatus::Extendable;
    return out;
}

std::vector<PlumbingGraph> small_extension_chain(const PlumbingGraph& inner,
                                                 const PlumbingGraph& outer) {
    // add vertices deepest-level-first: while the current graph sits between
    // consecutive levels B_{i+1} and B_i of the outer sequence, only vertices
    // of B_i may join, so every intermediate graph is again a valid pair
    LatticeContext octx = build_context(outer);
    EllipticSequence oseq = nn_elliptic_sequence(octx);
    std::map<int, int> depth;
    for (int id : outer.ids) depth[id] = -1;
    for (int j = 0; j <= oseq.m; ++j)
        for (int id : oseq.level(j).B) depth[id] = j;

    std::vector<PlumbingGraph> chain{inner};
    std::set<int> cur(inner.ids.begin(), inner.ids.end());
    while (static_cast<int>(cur.size()) < outer.n()) {
        int band = -1;
        for (int id : outer.ids)
            if (!cur.count(id)) band = std::max(band, depth[id]);
        int v0 = 0;
        bool found = false;
        std::vector<int> extras;
        // smallest-id vertex of the current graph with outside neighbours in the band
        for (int id : outer.ids) {
            if (!cur.count(id)) continue;
            std::vector<int> outs;
            for (int w : outer.adj[outer.pos(id)]) {
                int wid = outer.ids[w];
                if (!cur.count(wid) && depth[wid] == band) outs.push_back(wid);
            }
            if (!outs.empty() && (!found || id < v0)) {
                v0 = id;
                extras = outs;
                found = true;
            }
        }
        if (!found) throw std::logic_error("chain construction stuck");
        for (int id : extras) cur.insert(id);
        std::vector<int> keep(cur.begin(), cur.end());
        chain.push_back(induced_subgraph(outer, keep));
    }
    return chain;
}

ExtensionReport is_good_extension(const ExtensionPair& pair) {
    ExtensionReport rep;
    rep.index = pair.index;

    LaurentPoly P0_in = canonical_polynomial(pair.inner);
    LaurentPoly P0_out = canonical_polynomial(pair.outer);

    LaurentPoly trunc = truncate_polynomial(P0_out, pair.outer_seq, pair.index, pair.outer);
    rep.identity_holds = reduce_polynomial(trunc, pair.inner.g.ids) == P0_in;

    // ground truth: brute-force preimages under the dualized projection
    auto outer_records = classify_exponents(pair.outer, P0_out, pair.outer_seq);
    auto inner_records = classify_exponents(pair.inner, P0_in, pair.inner_seq);

    std::map<Vec, std::vector<std::pair<Vec, long long>>> preimage;
    for (auto& orec : outer_records)
        preimage[dual_project(pair, orec.dual)].emplace_back(orec.dual, orec.coeff);

    // fast path: run the per-exponent algorithm along a chain of small extensions
    auto chain = small_extension_chain(pair.inner.g, pair.outer.g);
    std::vector<ExtensionPair> steps;
    for (size_t k = 0; k + 1 < chain.size(); ++k)
        steps.push_back(build_extension(chain[k], chain[k + 1]));

    rep.good = true;
    for (auto& irec : inner_records) {
        PerExponent pe;
        pe.dual = irec.dual;
        pe.level = irec.level;
        std::vector<std::pair<Vec, int>> frontier{{irec.dual, irec.level}};
        for (auto& step : steps) {
            std::vector<std::pair<Vec, int>> next;
            for (auto& [d, lvl] : frontier) {
                ExtensionOutcome oc = extend_dual_exponent(step, d, lvl);
                if (oc.status == ExtStatus::Extendable)
                    for (auto& [dn, zn] : oc.extensions) next.emplace_back(dn, lvl + step.index);
            }
            frontier = std::move(next);
        }
        pe.status = frontier.empty() ? ExtStatus::NonExtendable : ExtStatus::Extendable;
        for (auto& [d, lvl] : frontier) {
            Vec prods = intersect_all(pair.outer, d);
            StarExponent se;
            for (int v = 0; v < pair.outer.n; ++v)
                if (prods[v] != 0)
                    se.mult[pair.outer.g.ids[v]] = Q(-prods[v]).get_num().get_si();
            pe.extensions.emplace_back(d, series_coefficient(pair.outer, se));
        }
        std::sort(pe.extensions.begin(), pe.extensions.end());

        auto it = preimage.find(irec.dual);
        std::vector<std::pair<Vec, long long>> truth =
            it == preimage.end() ? std::vector<std::pair<Vec, long long>>{} : it->second;
        std::sort(truth.begin(), truth.end());
        if (truth.empty()) rep.good = false;
        if (truth != pe.extensions) rep.algorithm_agrees = false;
        rep.per_exponent.push_back(std::move(pe));
    }
    std::sort(rep.per_exponent.begin(), rep.per_exponent.end(),
              [](const PerExponent& a, const PerExponent& b) { return a.dual < b.dual; });
    return rep;
}

std::pair<Z, Z> binomial_identities(long d, long m) {
    if (d < 0 || m < 0) throw GraphError("negative arguments");
    Z S = 0, Sp = 0;
    for (long i = 0; i <= std::min(d, m); ++i)
        S += Z((i % 2) ? -1 : 1) * binom(d, i) * binom(m + d - i, d);
    for (long i = 0; i <= m; ++i)
        if (d >= 1 && m + d - i - 1 >= 0)
            Sp += Z((i % 2) ? -1 : 1) * binom(d, i) * binom(m + d - i - 1, d - 1);
    return {S, Sp};
}

}  // namespace plumb
