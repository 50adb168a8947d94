#pragma once

#include <map>
#include <optional>

#include "plumb/ellseq.hpp"

namespace plumb {

// Multiplicities of the dual-basis generators (vertices with delta != 2).
struct StarExponent {
    std::map<int, long> mult;  // vertex id -> l*_v, zeros omitted
};

// z(l') for the series  prod_v (1 - t^{E*_v})^{delta_v - 2}.
// delta >= 3: (-1)^{l*} * binom(delta-2, l*);  delta == 1: 1;
// delta == 0 (single-vertex graph): l* + 1.
long long series_coefficient(const LatticeContext& ctx, const StarExponent& se);

struct SupportElem {
    StarExponent stars;
    Vec lp;        // induced cycle sum l*_v E*_v
    long long z;   // series coefficient
};

// All series support elements l' with (optionally) [l'] = [class_rep] and
// l'|_I not strictly above exclusion|_I in every I-coordinate.
// I is a list of vertex ids; threads > 1 parallelizes over the first generator.
std::vector<SupportElem> enumerate_dual_support(const LatticeContext& ctx,
                                                const std::optional<Vec>& class_rep,
                                                const Vec& exclusion,
                                                const std::vector<int>& I,
                                                int threads = 1);
// Plain recursive reference implementation, kept for testing the kernel.
std::vector<SupportElem> enumerate_dual_support_serial(const LatticeContext& ctx,
                                                       const std::optional<Vec>& class_rep,
                                                       const Vec& exclusion,
                                                       const std::vector<int>& I);

struct LaurentPoly {
    std::vector<int> vars;               // coordinate vertex ids, declaration order
    std::map<Vec, long long> terms;      // exponent -> coefficient, no zeros

    long long eval_at_one() const {
        long long s = 0;
        for (auto& [e, c] : terms) s += c;
        return s;
    }
    bool operator==(const LaurentPoly& o) const { return vars == o.vars && terms == o.terms; }
};

std::string poly_str(const LaurentPoly& p);

// P_0 = sum w(l) t^l over l = Z_K - E - lcheck, lcheck in the truncated class-[Z_K] support.
LaurentPoly canonical_polynomial(const LatticeContext& ctx, int threads = 1);
// The dual polynomial (exponents lcheck themselves).
LaurentPoly dual_canonical_polynomial(const LatticeContext& ctx, int threads = 1);

// Q_{[class_rep], I}(x): sum of coefficients over support elements whose
// I-projection is not coordinatewise >= x|_I.
long long counting_function(const LatticeContext& ctx, const Vec& class_rep,
                            const std::vector<int>& I, const Vec& x, int threads = 1);

long long sw0_norm(const LatticeContext& ctx, int threads = 1);

struct ExponentRecord {
    Vec exponent;          // l
    long long coeff;       // w(l)
    int level;             // j in [-1, m-1]
    Vec associated_cycle;  // C_j
    std::map<int, long> extra;  // m_v, supported off B_{j+1}
    Vec dual;              // lcheck = C_j + sum m_v E_v
};

std::vector<ExponentRecord> classify_exponents(const LatticeContext& ctx,
                                               const LaurentPoly& P0,
                                               const EllipticSequence& seq);

LaurentPoly reduce_polynomial(const LaurentPoly& p, const std::vector<int>& I);

// F_i P_0: keep exponents strictly negative in every coordinate outside B_i.
LaurentPoly truncate_polynomial(const LaurentPoly& P0, const EllipticSequence& seq, int i,
                                const LatticeContext& ctx);

// Brute-force Taylor expansion of the product formula over the box
// { l' : l' not >= bound } — the oracle for the enumeration kernel.
std::map<Vec, long long> brute_force_series(const LatticeContext& ctx, const Vec& bound);

}  // namespace plumb
