#pragma once

#include "plumb/poincare.hpp"

namespace plumb {

// A full connected elliptic subgraph inside a larger elliptic graph, with all
// boundary data and the extension index precomputed.
struct ExtensionPair {
    LatticeContext inner;
    LatticeContext outer;
    EllipticSequence inner_seq;
    EllipticSequence outer_seq;
    std::vector<int> boundary_inner;                 // vertices of inner adjacent to outside
    std::map<int, std::vector<int>> boundary_outer;  // per boundary vertex: outside neighbours
    int index = 0;                                   // smallest j >= 0 with B_j^outer inside
};

ExtensionPair build_extension(const PlumbingGraph& inner, const PlumbingGraph& outer);

// coordinate restriction of an outer cycle
Vec project(const ExtensionPair& pair, const Vec& l);
// dualized projection: Z_K' - E' - project(Z_K - E - l')
Vec dual_project(const ExtensionPair& pair, const Vec& lp);
// dual operator j*: expand in the E*-basis, keep inner generators, rebuild inside
Vec dual_operator(const ExtensionPair& pair, const Vec& lp);

struct SmallExtensionShape {
    bool is_small = false;
    int v0 = 0;                  // attachment vertex (inner id)
    std::vector<int> new_ids;    // the s new vertices
};

SmallExtensionShape small_extension_shape(const PlumbingGraph& inner, const PlumbingGraph& outer);

// Necessary conditions for a small extension to stay elliptic.
std::vector<CheckResult> check_small_extension(const PlumbingGraph& inner,
                                               const PlumbingGraph& outer);

enum class ExtStatus { Extendable, NonExtendable };

struct ExtensionOutcome {
    Vec source_dual;     // lcheck on inner
    ExtStatus status;
    Vec s_of_lprime;     // Laufer result from l' on outer
    long lo = 0, hi = -1;  // admissible N interval
    std::vector<std::pair<Vec, long long>> extensions;  // (lcheck_new on outer, z)
};

// One-step extension algorithm for a small-extension pair.
ExtensionOutcome extend_dual_exponent(const ExtensionPair& pair, const Vec& dual, int level);

struct PerExponent {
    Vec dual;            // inner dual exponent
    int level;           // inner level j
    ExtStatus status;    // extendable through the whole chain
    std::vector<std::pair<Vec, long long>> extensions;  // final duals on outer with z
};

struct ExtensionReport {
    int index = 0;
    bool good = false;            // brute-force ground truth
    bool identity_holds = false;  // truncation-reduction polynomial identity
    bool algorithm_agrees = true; // fast path matched brute force per exponent
    std::vector<PerExponent> per_exponent;
};

ExtensionReport is_good_extension(const ExtensionPair& pair);

// Chain of small extensions from inner to outer (each step attaches all
// outside neighbours of the smallest-id boundary vertex).
std::vector<PlumbingGraph> small_extension_chain(const PlumbingGraph& inner,
                                                 const PlumbingGraph& outer);

// (S_{d,m}, S'_{d,m}) binomial sums
std::pair<Z, Z> binomial_identities(long d, long m);

}  // namespace plumb
