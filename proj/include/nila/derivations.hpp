// Derivation algebras and the Nikolayevsky (pre-Einstein) derivation.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "nila/lie_algebra.hpp"
#include "nila/linsolve.hpp"
#include "nila/matrix.hpp"
#include "nila/poly.hpp"
#include "nila/subspace.hpp"

namespace nila {

inline bool is_derivation(const LieAlgebra& g, const Matrix& d) {
    const std::size_t n = g.dim();
    if (d.rows() != n || d.cols() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Vec dei = d.col(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec lhs = d.apply(g.basis_bracket(i, j));
            Vec rhs = g.bracket(dei, unit_vec(n, j)) + g.bracket(unit_vec(n, i), d.col(j));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

// Basis of {D : D[x,y] = [Dx,y] + [x,Dy]}, via the sparse Leibniz system on
// the n^2 matrix entries. Unknown (p,q) is entry D_{pq}, flattened as p*n+q.
inline std::vector<Matrix> derivation_space(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    SparseSolver solver(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec cij = g.basis_bracket(i, j);
            for (std::size_t p = 0; p < n; ++p) {
                // sum_k c_ij^k D_pk - sum_q c_qj^p D_qi - sum_q c_iq^p D_qj = 0
                std::map<std::size_t, Rational> row;
                for (std::size_t k = 0; k < n; ++k)
                    if (!cij[k].is_zero()) row[p * n + k] += cij[k];
                for (std::size_t q = 0; q < n; ++q) {
                    Rational cqj = g.basis_bracket(q, j)[p];
                    if (!cqj.is_zero()) row[q * n + i] -= cqj;
                    Rational ciq = g.basis_bracket(i, q)[p];
                    if (!ciq.is_zero()) row[q * n + j] -= ciq;
                }
                SparseSolver::Row r;
                for (auto& [c, v] : row)
                    if (!v.is_zero()) r.emplace_back(c, std::move(v));
                if (!r.empty()) solver.add_row(std::move(r));
            }
        }
    std::vector<Matrix> basis;
    for (const Vec& v : solver.kernel_basis()) {
        Matrix d(n, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) d(p, q) = v[p * n + q];
        basis.push_back(std::move(d));
    }
    return basis;
}

// Membership in span{ad x}.
inline bool is_inner(const LieAlgebra& g, const Matrix& d) {
    if (!is_derivation(g, d)) throw std::invalid_argument("is_inner: not a derivation");
    const std::size_t n = g.dim();
    Matrix sys(n * n, n);
    for (std::size_t b = 0; b < n; ++b) {
        Matrix adb = g.ad_basis(b);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) sys(p * n + q, b) = adb(p, q);
    }
    Vec target(n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) target[p * n + q] = d(p, q);
    return sys.solve(target).has_value();
}

struct NikolayevskyResult {
    Matrix endo;
    std::vector<std::pair<Rational, std::size_t>> eigenvalues;  // (value, multiplicity), ascending
    std::vector<Subspace> eigenspaces;                          // aligned with eigenvalues
};

// Tr(N D_b) = Tr(D_b) for every basis derivation.
inline std::optional<std::size_t> trace_identity_witness(const LieAlgebra& g, const Matrix& n,
                                                         const std::vector<Matrix>& der_basis) {
    for (std::size_t b = 0; b < der_basis.size(); ++b)
        if ((n * der_basis[b]).trace() != der_basis[b].trace()) return b;
    return std::nullopt;
}

inline bool trace_identity_check(const LieAlgebra& g, const Matrix& n) {
    if (!is_derivation(g, n)) throw std::invalid_argument("trace_identity_check: not a derivation");
    return !trace_identity_witness(g, n, derivation_space(g));
}

// Solve Tr(N D_b) = Tr(D_b) over N in Der(g) (particular solution, free
// variables zero), take the semisimple part, then re-verify the defining
// properties. Eigenvalues must be rational; eigenspace dimensions must sum
// to dim g.
inline NikolayevskyResult nikolayevsky(const LieAlgebra& g,
                                       const std::vector<Matrix>& der_basis) {
    const std::size_t n = g.dim();
    const std::size_t m = der_basis.size();
    Matrix sys(m, m);
    Vec rhs(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) sys(a, b) = (der_basis[b] * der_basis[a]).trace();
    for (std::size_t a = 0; a < m; ++a) rhs[a] = der_basis[a].trace();
    auto x = sys.solve(rhs);
    if (!x) throw std::runtime_error("nikolayevsky: trace system inconsistent");
    Matrix n0(n, n);
    for (std::size_t b = 0; b < m; ++b)
        if (!(*x)[b].is_zero()) n0 = n0 + (*x)[b] * der_basis[b];
    Matrix s = semisimple_part(n0);
    if (!is_derivation(g, s))
        throw std::runtime_error("nikolayevsky: semisimple part is not a derivation");
    if (trace_identity_witness(g, s, der_basis))
        throw std::runtime_error("nikolayevsky: semisimple part violates the trace identity");

    NikolayevskyResult res;
    res.endo = s;
    Poly mu = minimal_polynomial(s);
    std::vector<Rational> roots = rational_roots(mu);
    std::size_t total = 0;
    for (const Rational& lam : roots) {
        Subspace es = eigenspace(s, lam);
        if (es.is_zero()) continue;
        res.eigenvalues.emplace_back(lam, es.dim());
        res.eigenspaces.push_back(es);
        total += es.dim();
    }
    if (total != n)
        throw std::runtime_error("nikolayevsky: spectrum not rational (eigenspaces incomplete)");
    return res;
}

inline NikolayevskyResult nikolayevsky(const LieAlgebra& g) {
    return nikolayevsky(g, derivation_space(g));
}

// Flat eigenvalue multiset (ascending, with repetitions).
inline std::vector<Rational> spectrum(const NikolayevskyResult& r) {
    std::vector<Rational> out;
    for (const auto& [v, mult] : r.eigenvalues)
        for (std::size_t i = 0; i < mult; ++i) out.push_back(v);
    return out;
}

}  // namespace nila
