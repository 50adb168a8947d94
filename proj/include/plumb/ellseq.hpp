#pragma once

#include "plumb/laufer.hpp"

namespace plumb {

struct SeqLevel {
    int j;                  // -1 .. m
    std::vector<int> B;     // vertex ids of B_j
    Vec ZB;                 // Z_{B_j}, in full-graph coordinates
    Vec C;                  // C_j  = sum_{i<=j} Z_{B_i}
    Vec Cprime;             // C'_j = sum_{i>=j} Z_{B_i}
};

struct EllipticSequence {
    std::vector<SeqLevel> levels;  // index 0 holds j = -1
    int m = 0;
    bool numerically_gorenstein = false;

    const SeqLevel& level(int j) const { return levels.at(j + 1); }
    // vertex ids of B_j; B_{m+1} and beyond are empty
    std::vector<int> B_or_empty(int j) const {
        return j <= m ? level(j).B : std::vector<int>{};
    }
};

EllipticSequence nn_elliptic_sequence(const LatticeContext& ctx);

struct CheckResult {
    std::string name;
    enum Status { Pass, Fail, Skip } status;
    std::string detail;
};

// Checks every clause of the structure lemma for the sequence.
std::vector<CheckResult> verify_sequence(const LatticeContext& ctx, const EllipticSequence& seq);

// Brute force: all anti-nef cycles in class [Z_K] that are <= Z_K.
std::vector<Vec> cycles_below_ZK(const LatticeContext& ctx);

// Embed a cycle on a subgraph into full coordinates (zero off the subgraph).
Vec embed_cycle(const LatticeContext& full, const LatticeContext& sub, const Vec& l);
// Restrict a full cycle to the subgraph's coordinates.
Vec restrict_cycle(const LatticeContext& full, const PlumbingGraph& sub, const Vec& l);

}  // namespace plumb
