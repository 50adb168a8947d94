// Acceptance gate: one test case per acceptance criterion, each printing a
// single PASS/FAIL line. Every asserted constant is pinned literally.

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "helpers.hpp"
#include "plumb/checks.hpp"

using namespace plumb;
using testutil::ctx_of;
using testutil::load;
using testutil::vec_of;

namespace {

void report(int criterion, bool ok, const std::string& note = "") {
    std::printf("[criterion %d] %s%s%s\n", criterion, ok ? "PASS" : "FAIL",
                note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
}

LaurentPoly pinned_p12() {
    LaurentPoly p;
    p.vars = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    auto t = [&](const char* e, long long c) { p.terms[vec_of(e)] = c; };
    t("(1, 3, 1, 3, 1, 1, 1, 0, 0, 0, -1, -3)", 1);
    t("(0, 1, 0, 1, 0, 0, -1, -1, -2, -1, -1, -2)", -2);
    t("(0, 1, 0, 1, 0, 0, -1, -1, -2, -2, -3, -7)", 1);
    t("(0, 1, 0, 1, 0, 0, -1, -1, -1, -2, -3, -7)", -2);
    t("(0, 1, 0, 1, 0, 0, -1, -1, -1, -3, -5, -12)", 1);
    t("(0, 1, 0, 1, 0, 0, -1, -2, -2, -1, -1, -2)", 1);
    t("(0, 1, 0, 1, 0, 0, -1, -1, -1, -1, -1, -2)", 1);
    t("(0, 1, 0, 1, 0, 0, -1, -2, -1, -2, -3, -7)", 1);
    t("(0, 1, 0, 1, 0, 0, -1, -1, -3, -1, -1, -2)", 1);
    t("(0, 1, 0, 1, 0, 0, -1, -3, -1, -1, -1, -2)", 1);
    t("(0, 1, 0, 1, 0, 0, -1, -2, -1, -1, -1, -2)", -2);
    return p;
}

}  // namespace

TEST_CASE("acc_01: ten-vertex graph anti-canonical and level cycles") {
    LatticeContext ctx = ctx_of("gex2.graph");
    EllipticSequence seq = nn_elliptic_sequence(ctx);
    bool ok = ctx.ZK == vec_of("(2, 4, 2, 4, 2, 2, 2, 1, 1, 1)") &&
              seq.level(0).C == vec_of("(1, 2, 1, 2, 1, 1, 2, 1, 1, 1)");
    report(1, ok);
    CHECK(ok);
}

TEST_CASE("acc_02: twelve-vertex canonical polynomial, term for term") {
    LaurentPoly p = canonical_polynomial(ctx_of("gfig2_12.graph"));
    bool ok = p == pinned_p12() && p.eval_at_one() == 2;
    report(2, ok);
    CHECK(ok);
}

TEST_CASE("acc_03: ten-vertex polynomial equals the reduced twelve-vertex one") {
    LatticeContext ctx = ctx_of("gex2.graph");
    LaurentPoly p10 = canonical_polynomial(ctx);
    LaurentPoly red = reduce_polynomial(pinned_p12(), {1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    EllipticSequence seq = nn_elliptic_sequence(ctx);
    std::map<int, long long> sums;
    for (auto& r : classify_exponents(ctx, p10, seq)) sums[r.level] += r.coeff;
    bool ok = p10 == red && p10.eval_at_one() == 2;
    for (int j = -1; j < seq.m; ++j) ok = ok && sums[j] == 1;
    report(3, ok);
    CHECK(ok);
}

TEST_CASE("acc_04: fourteen-vertex graph's rational cycles and pre-level exponents") {
    LatticeContext ctx = ctx_of("gfig1.graph");
    EllipticSequence seq = nn_elliptic_sequence(ctx);
    Vec s = vec_of("(3/8, 3/4, 3/8, 3/4, 3/8, 3/8, 3/4, 3/8, 3/8, 9/8, 17/16, 25/16, "
                   "25/32, 25/32)");
    bool ok = ctx.ZK == vec_of("(19/8, 19/4, 19/8, 19/4, 19/8, 19/8, 11/4, 11/8, 11/8, "
                               "17/8, 17/16, 25/16, 25/32, 25/32)");
    ok = ok && seq.level(-1).ZB == s;
    Vec comb(ctx.n, Q(0));
    for (int i = 0; i < ctx.n; ++i)
        comb[i] = ctx.dual[ctx.g.pos(11)][i] + 2 * ctx.dual[ctx.g.pos(12)][i];
    ok = ok && s == comb;

    auto records = classify_exponents(ctx, canonical_polynomial(ctx), seq);
    std::multiset<long long> coeffs;
    std::set<Vec> duals;
    long long total = 0;
    for (auto& r : records)
        if (r.level == -1) {
            coeffs.insert(r.coeff);
            duals.insert(r.dual);
            total += r.coeff;
        }
    auto plus = [&](std::initializer_list<std::pair<int, int>> mv) {
        Vec d = s;
        for (auto& [id, k] : mv) d[ctx.g.pos(id)] += k;
        return d;
    };
    std::set<Vec> expect = {plus({{13, 1}}), plus({{14, 1}}), plus({{13, 2}}),
                            plus({{13, 1}, {14, 1}}), plus({{14, 2}})};
    ok = ok && duals == expect && coeffs == std::multiset<long long>{-1, -1, 1, 1, 1} &&
         total == 1;
    report(4, ok);
    CHECK(ok);
}

TEST_CASE("acc_05: the seventeen-vertex pair has a non-extendable dual exponent") {
    ExtensionPair pair = build_extension(load("gfig2_16.graph"), load("gfig2.graph"));
    // the exponent C_1 + E_9 + 2 E_14 + E_16 + 4 E_15 of the inner graph
    Vec dual = pair.inner_seq.level(1).C;
    for (auto [id, k] : std::initializer_list<std::pair<int, int>>{{9, 1}, {14, 2},
                                                                   {16, 1}, {15, 4}})
        dual[pair.inner.g.pos(id)] += k;
    auto records =
        classify_exponents(pair.inner, canonical_polynomial(pair.inner, 2), pair.inner_seq);
    const ExponentRecord* rec = nullptr;
    for (auto& r : records)
        if (r.dual == dual) rec = &r;
    bool ok = rec != nullptr;
    if (ok) {
        Vec lp = pair.outer_seq.level(rec->level + pair.index).C;
        for (auto& [id, mv] : rec->extra) lp[pair.outer.g.pos(id)] += mv;
        ok = ok && lp == vec_of("(65/31, 130/31, 65/31, 130/31, 65/31, 65/31, 130/31, 65/31, "
                                "132/31, 97/31, 64/31, 32/31, 32/31, 134/31, 160/31, 79/31, "
                                "24/31)");
        ComputationSequence cs = generalized_laufer(pair.outer, lp);
        ok = ok && cs.steps.size() >= 2 && cs.steps[0].vertex == 17 && cs.steps[1].vertex == 16;
        ok = ok && extend_dual_exponent(pair, dual, rec->level).status ==
                       ExtStatus::NonExtendable;
    }
    ExtensionReport rep = is_good_extension(pair);
    ok = ok && !rep.good && !rep.identity_holds && rep.algorithm_agrees;
    report(5, ok);
    CHECK(ok);
}

TEST_CASE("acc_06: normalized invariant values across the fixtures") {
    bool ok = sw0_norm(ctx_of("gme6.graph")) == 1 && sw0_norm(ctx_of("gex2.graph")) == 2 &&
              sw0_norm(ctx_of("gfig2_12.graph")) == 2 && sw0_norm(ctx_of("g1.graph")) == 0 &&
              sw0_norm(ctx_of("ga2.graph")) == 0 && sw0_norm(ctx_of("star.graph")) == 0;
    long long fig1 = sw0_norm(ctx_of("gfig1.graph"));
    int m1 = nn_elliptic_sequence(ctx_of("gfig1.graph")).m;
    // asserted target value for the fourteen-vertex graph: 3
    ok = ok && fig1 == 3 && fig1 == m1 + 1;
    report(6, ok,
           ok ? "" : "fourteen-vertex graph: computed value " + std::to_string(fig1) +
                         " with m = " + std::to_string(m1) +
                         "; the asserted constant 3 contradicts the m+1 identity");
    CHECK(ok);
}

TEST_CASE("acc_07: enumeration kernel equals brute-force expansion on small fixtures") {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const char* f : {"g1.graph", "ga2.graph", "star.graph", "gme6.graph",
                          "corrupt_nonelliptic.graph", "gex2.graph", "gfig2_12.graph",
                          "seqpair_a.graph", "seqpair_b.graph"}) {
        LatticeContext ctx = ctx_of(f);
        // the expansion keeps every exponent that is not above the bound in all
        // coordinates, so rein the box in on the larger graphs to stay in memory
        Vec bound = ctx.n <= 10 ? vec_add(ctx.ZK, ctx.E_total) : ctx.ZK;
        std::map<Vec, long long> oracle = brute_force_series(ctx, bound);
        std::erase_if(oracle, [](const auto& kv) { return kv.second == 0; });
        Q eps = Q(1) / Q(ctx.det);
        Vec excl(ctx.n);
        for (int i = 0; i < ctx.n; ++i) excl[i] = bound[i] - eps;
        std::map<Vec, long long> got;
        for (auto& e : enumerate_dual_support(ctx, std::nullopt, excl, ctx.g.ids, 4))
            got[e.lp] += e.z;
        std::erase_if(got, [](const auto& kv) { return kv.second == 0; });
        ok = ok && got == oracle;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs <= 30.0;
    report(7, ok, "runtime " + std::to_string(secs) + " s (budget 30 s)");
    CHECK(ok);
}

TEST_CASE("acc_08: full identity suite on the corpus and 100 random elliptic trees") {
    bool ok = true;
    std::string bad;
    for (const char* f : {"g1.graph", "ga2.graph", "star.graph", "gme6.graph", "gex2.graph",
                          "gfig2_12.graph", "gfig2_16.graph", "gfig2.graph", "gfig1.graph",
                          "seqpair_a.graph", "seqpair_b.graph", "corrupt_nonelliptic.graph"}) {
        auto results = run_all_checks(load(f), 4);
        if (any_failure(results)) {
            ok = false;
            bad += std::string(f) + ": " + testutil::failures(results);
        }
    }
    std::mt19937 rng(424242);
    for (int i = 0; i < 100 && ok; ++i) {
        PlumbingGraph g = random_elliptic_tree(rng);
        auto results = run_all_checks(g);
        if (any_failure(results)) {
            ok = false;
            bad += "random #" + std::to_string(i) + ": " + testutil::failures(results);
        }
    }
    for (long d = 0; d <= 20; ++d)
        for (long m = 0; m <= 20; ++m) {
            auto [S, Sp] = binomial_identities(d, m);
            ok = ok && S == 1 && (m >= 1 ? Sp == 0 : Sp == (d >= 1 ? 1 : 0));
        }
    report(8, ok, bad);
    CHECK(ok);
}
