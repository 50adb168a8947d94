#pragma once

#include <random>

#include "plumb/extensions.hpp"

namespace plumb {

// Runs every executable identity on one graph. Elliptic-only checks are
// reported as Skip on non-elliptic inputs.
std::vector<CheckResult> run_all_checks(const PlumbingGraph& g, int threads = 1);

bool any_failure(const std::vector<CheckResult>& results);

// Random negative-definite elliptic tree with anti-nef anti-canonical cycle.
PlumbingGraph random_elliptic_tree(std::mt19937& rng, int min_n = 6, int max_n = 10,
                                   int max_attempts = 20000);

}  // namespace plumb
