#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "plumb/checks.hpp"

using namespace plumb;
using testutil::failures;

TEST_SUITE("random_properties") {

TEST_CASE("generator yields elliptic trees with anti-nef anti-canonical cycle") {
    std::mt19937 rng(99);
    for (int i = 0; i < 10; ++i) {
        PlumbingGraph g = random_elliptic_tree(rng);
        CHECK(g.n() >= 6);
        CHECK(g.n() <= 10);
        LatticeContext ctx = build_context(g);
        CHECK(classify(ctx).kind == Kind::Elliptic);
        CHECK(in_lipman_cone(ctx, ctx.ZK));
    }
}

TEST_CASE("all identities hold on 100 random elliptic trees") {
    std::mt19937 rng(424242);
    for (int i = 0; i < 100; ++i) {
        PlumbingGraph g = random_elliptic_tree(rng);
        auto results = run_all_checks(g);
        CHECK_MESSAGE(!any_failure(results),
                      "graph #" << i << " (" << serialize_text(g) << "): " << failures(results));
    }
}

}  // TEST_SUITE
