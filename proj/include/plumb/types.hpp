#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace plumb {

using Q = mpq_class;
using Z = mpz_class;
// Dense coordinate vector in the E_v basis, indexed by vertex declaration order.
using Vec = std::vector<Q>;

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_ = 0)
        : std::runtime_error(msg), line(line_) {}
};

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotNegativeDefinite : std::runtime_error {
    int minor_index;  // 1-based index of the first non-positive leading minor of -M
    NotNegativeDefinite(const std::string& msg, int k)
        : std::runtime_error(msg), minor_index(k) {}
};

struct NotElliptic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_int(const Q& q) { return q.get_den() == 1; }

inline bool is_integral(const Vec& v) {
    for (const Q& q : v)
        if (!is_int(q)) return false;
    return true;
}

inline Q frac_part(const Q& q) {
    // fractional part in [0,1)
    Z fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Q(fl);
}

inline std::string q_str(const Q& q) { return q.get_str(); }

inline std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool vec_is_zero(const Vec& a) {
    for (const Q& q : a)
        if (q != 0) return false;
    return true;
}

// coordinatewise partial orders; the three relations are genuinely distinct
inline bool leq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw GraphError("cycle binding mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool lt_all(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw GraphError("cycle binding mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] >= b[i]) return false;
    return true;
}

inline bool not_geq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw GraphError("cycle binding mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return true;
    return false;
}

inline Vec min_cycles(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw GraphError("cycle binding mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

inline Z binom(unsigned long n, unsigned long k) {
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace plumb
