#include "plumb/lattice.hpp"

namespace plumb {

namespace {

// Determinant of the leading k x k block, exact.
Z leading_minor(const std::vector<std::vector<Q>>& A, int k) {
    std::vector<std::vector<Q>> B(k, std::vector<Q>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) B[i][j] = A[i][j];
    Q det = 1;
    for (int c = 0; c < k; ++c) {
        int p = -1;
        for (int r = c; r < k; ++r)
            if (B[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) return Z(0);
        if (p != c) {
            std::swap(B[p], B[c]);
            det = -det;
        }
        det *= B[c][c];
        for (int r = c + 1; r < k; ++r) {
            Q f = B[r][c] / B[c][c];
            if (f == 0) continue;
            for (int j = c; j < k; ++j) B[r][j] -= f * B[c][j];
        }
    }
    if (det.get_den() != 1) throw std::logic_error("integer matrix determinant not integral");
    return det.get_num();
}

// Exact inverse by Gauss-Jordan elimination.
std::vector<std::vector<Q>> invert(std::vector<std::vector<Q>> A) {
    int n = static_cast<int>(A.size());
    std::vector<std::vector<Q>> I(n, std::vector<Q>(n, Q(0)));
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (A[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) throw std::logic_error("singular matrix");
        std::swap(A[p], A[c]);
        std::swap(I[p], I[c]);
        Q piv = A[c][c];
        for (int j = 0; j < n; ++j) {
            A[c][j] /= piv;
            I[c][j] /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || A[r][c] == 0) continue;
            Q f = A[r][c];
            for (int j = 0; j < n; ++j) {
                A[r][j] -= f * A[c][j];
                I[r][j] -= f * I[c][j];
            }
        }
    }
    return I;
}

}  // namespace

LatticeContext build_context(const PlumbingGraph& g) {
    LatticeContext ctx;
    ctx.g = g;
    ctx.n = g.n();
    int n = ctx.n;
    ctx.M.assign(n, std::vector<Q>(n, Q(0)));
    for (int i = 0; i < n; ++i) ctx.M[i][i] = g.euler[i];
    for (auto& [a, b] : g.edges) {
        ctx.M[g.pos(a)][g.pos(b)] = 1;
        ctx.M[g.pos(b)][g.pos(a)] = 1;
    }
    std::vector<std::vector<Q>> negM(n, std::vector<Q>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) negM[i][j] = -ctx.M[i][j];
    // Sylvester's criterion on -M
    for (int k = 1; k <= n; ++k) {
        Z mk = leading_minor(negM, k);
        if (mk <= 0)
            throw NotNegativeDefinite(
                "intersection form not negative definite: leading minor " + std::to_string(k) +
                    " of -M is " + mk.get_str(),
                k);
        if (k == n) ctx.det = mk;
    }
    ctx.invnegM = invert(negM);
    ctx.dual.assign(n, Vec(n));
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < n; ++i) ctx.dual[v][i] = ctx.invnegM[i][v];
        for (int i = 0; i < n; ++i)
            if (ctx.dual[v][i] <= 0)
                throw std::logic_error("dual basis cycle with non-positive coordinate");
    }
    // Z_K from (Z_K, E_v) = e_v + 2  <=>  -M Z_K = -(e+2)  <=>  Z_K = (-M)^{-1} (-(e+2))
    ctx.ZK.assign(n, Q(0));
    for (int v = 0; v < n; ++v) {
        Q rhs = -(Q(g.euler[v]) + 2);
        for (int i = 0; i < n; ++i) ctx.ZK[i] += ctx.invnegM[i][v] * rhs;
    }
    ctx.E_total.assign(n, Q(1));
    // cross-check: Z_K - E = sum_v (delta_v - 2) E*_v
    Vec alt(n, Q(0));
    for (int v = 0; v < n; ++v) {
        Q f = Q(static_cast<long>(g.adj[v].size())) - 2;
        for (int i = 0; i < n; ++i) alt[i] += f * ctx.dual[v][i];
    }
    if (vec_sub(ctx.ZK, ctx.E_total) != alt)
        throw std::logic_error("anti-canonical cycle cross-check failed");
    ctx.numerically_gorenstein = is_integral(ctx.ZK);
    return ctx;
}

Q intersect(const LatticeContext& ctx, const Vec& a, const Vec& b) {
    if (static_cast<int>(a.size()) != ctx.n || static_cast<int>(b.size()) != ctx.n)
        throw GraphError("cycle binding mismatch");
    Q s = 0;
    for (int i = 0; i < ctx.n; ++i) {
        if (a[i] == 0) continue;
        Q row = 0;
        row += ctx.M[i][i] * b[i];
        for (int j : ctx.g.adj[i]) row += b[j];
        s += a[i] * row;
    }
    return s;
}

Vec intersect_all(const LatticeContext& ctx, const Vec& l) {
    if (static_cast<int>(l.size()) != ctx.n) throw GraphError("cycle binding mismatch");
    Vec r(ctx.n, Q(0));
    for (int i = 0; i < ctx.n; ++i) {
        r[i] = ctx.M[i][i] * l[i];
        for (int j : ctx.g.adj[i]) r[i] += l[j];
    }
    return r;
}

Q chi(const LatticeContext& ctx, const Vec& l) {
    return -intersect(ctx, l, vec_sub(l, ctx.ZK)) / 2;
}

bool class_equal(const LatticeContext& ctx, const Vec& a, const Vec& b) {
    return is_integral(vec_sub(a, b));
}

Vec representative_r(const LatticeContext& ctx, const Vec& l) {
    Vec r(ctx.n);
    for (int i = 0; i < ctx.n; ++i) r[i] = frac_part(l[i]);
    return r;
}

bool in_lipman_cone(const LatticeContext& ctx, const Vec& l) {
    Vec r = intersect_all(ctx, l);
    for (const Q& q : r)
        if (q > 0) return false;
    return true;
}

std::vector<int> support(const LatticeContext& ctx, const Vec& l) {
    std::vector<int> out;
    for (int i = 0; i < ctx.n; ++i)
        if (l[i] != 0) out.push_back(ctx.g.ids[i]);
    return out;
}

}  // namespace plumb
