#pragma once

#include <functional>

#include "plumb/lattice.hpp"

namespace plumb {

struct CompStep {
    Vec cycle;   // cycle before the addition; for the terminal record, the result
    int vertex;  // vertex id added, or -1 for the terminal record
};

struct ComputationSequence {
    std::vector<CompStep> steps;  // ends with the terminal record
    Vec result;
};

// Picks one admissible vertex (position index) out of the candidates.
using VertexChooser = std::function<int(const std::vector<int>&)>;

// From x, repeatedly add E_v with (x, E_v) > 0 until anti-nef; yields s(x),
// the minimal anti-nef cycle >= x in its class. Default choice: smallest id.
ComputationSequence generalized_laufer(const LatticeContext& ctx, Vec start,
                                       const VertexChooser& choose = nullptr);

Vec minimal_cycle(const LatticeContext& ctx);        // Z_min
Vec s_class_min(const LatticeContext& ctx, const Vec& lp);  // s_{[l']} = s(r_{[l']})

enum class Kind { Rational, Elliptic, Other };

struct Classification {
    Kind kind;
    Q chi_zmin;
};

Classification classify(const LatticeContext& ctx);

const char* kind_name(Kind k);

// Unique minimal integral cycle with chi = 0; requires an elliptic graph.
Vec minimally_elliptic_cycle(const LatticeContext& ctx);

}  // namespace plumb
