// Lie algebras given by rational structure constants: brackets, central
// series, quotients, sums, gradings.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nila/matrix.hpp"
#include "nila/subspace.hpp"

namespace nila {

struct JacobiWitness {
    std::size_t i, j, k;
    Vec defect;
};

class LieAlgebra {
public:
    LieAlgebra() : dim_(0) {}

    // Structure constants as brackets [e_i, e_j] for i < j, row-major over
    // pairs; antisymmetry holds by construction. Jacobi is checked eagerly
    // unless deferred (deferred mode exists for perturbation tests).
    LieAlgebra(std::size_t dim, std::vector<Vec> brackets, bool defer_jacobi = false)
        : dim_(dim), c_(std::move(brackets)) {
        if (c_.size() != dim_ * (dim_ - 1) / 2)
            throw std::invalid_argument("LieAlgebra: wrong number of bracket entries");
        for (const Vec& v : c_)
            if (v.size() != dim_) throw std::invalid_argument("LieAlgebra: bracket size mismatch");
        if (!defer_jacobi) {
            if (auto w = jacobi_check())
                throw std::invalid_argument("LieAlgebra: Jacobi identity fails on (" +
                                            std::to_string(w->i + 1) + "," + std::to_string(w->j + 1) +
                                            "," + std::to_string(w->k + 1) + ")");
        }
    }

    static LieAlgebra abelian(std::size_t dim) {
        return LieAlgebra(dim, std::vector<Vec>(dim * (dim - 1) / 2, Vec(dim)));
    }

    // Builder: start from zero brackets, set entries, then freeze.
    class Builder {
    public:
        explicit Builder(std::size_t dim) : dim_(dim), c_(dim * (dim - 1) / 2, Vec(dim)) {}
        // add c * e_k to [e_i, e_j] (0-based, i != j)
        Builder& add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
            if (i == j) {
                if (!c.is_zero()) throw std::invalid_argument("Builder: [x,x] must vanish");
                return *this;
            }
            if (i < j)
                c_[pair_index(dim_, i, j)][k] += c;
            else
                c_[pair_index(dim_, j, i)][k] -= c;
            return *this;
        }
        Builder& set_bracket(std::size_t i, std::size_t j, const Vec& v) {
            if (i >= j) throw std::invalid_argument("Builder: need i < j");
            c_[pair_index(dim_, i, j)] = v;
            return *this;
        }
        LieAlgebra build(bool defer_jacobi = false) const {
            return LieAlgebra(dim_, c_, defer_jacobi);
        }

    private:
        std::size_t dim_;
        std::vector<Vec> c_;
    };

    std::size_t dim() const { return dim_; }

    static std::size_t pair_index(std::size_t dim, std::size_t i, std::size_t j) {
        // index of (i,j), i < j, in lexicographic order
        return i * dim - i * (i + 1) / 2 + (j - i - 1);
    }

    // [e_i, e_j] for any i, j.
    Vec basis_bracket(std::size_t i, std::size_t j) const {
        if (i == j) return Vec(dim_);
        if (i < j) return c_[pair_index(dim_, i, j)];
        Vec v = c_[pair_index(dim_, j, i)];
        for (auto& x : v) x = -x;
        return v;
    }

    Vec bracket(const Vec& x, const Vec& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw std::invalid_argument("bracket: dimension mismatch");
        Vec r(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero() && y[i].is_zero()) continue;
            for (std::size_t j = i + 1; j < dim_; ++j) {
                Rational coef = x[i] * y[j] - x[j] * y[i];
                if (coef.is_zero()) continue;
                const Vec& c = c_[pair_index(dim_, i, j)];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!c[k].is_zero()) r[k] += coef * c[k];
            }
        }
        return r;
    }

    // ad x as a matrix: (ad x)(y) = [x, y].
    Matrix ad(const Vec& x) const {
        Matrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec col = bracket(x, unit_vec(dim_, j));
            for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
        }
        return m;
    }
    Matrix ad_basis(std::size_t i) const { return ad(unit_vec(dim_, i)); }

    std::optional<JacobiWitness> jacobi_check() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = j + 1; k < dim_; ++k) {
                    Vec d = bracket(basis_bracket(i, j), unit_vec(dim_, k));
                    Vec t = bracket(basis_bracket(j, k), unit_vec(dim_, i));
                    for (std::size_t a = 0; a < dim_; ++a) d[a] += t[a];
                    t = bracket(basis_bracket(k, i), unit_vec(dim_, j));
                    for (std::size_t a = 0; a < dim_; ++a) d[a] += t[a];
                    if (!is_zero(d)) return JacobiWitness{i, j, k, d};
                }
        return std::nullopt;
    }

    // span of [S, T]
    Subspace bracket_subspaces(const Subspace& s, const Subspace& t) const {
        std::vector<Vec> gens;
        for (std::size_t a = 0; a < s.dim(); ++a)
            for (std::size_t b = 0; b < t.dim(); ++b)
                gens.push_back(bracket(s.basis_vector(a), t.basis_vector(b)));
        return Subspace::span(gens, dim_);
    }

    Subspace full() const { return Subspace::full(dim_); }

    Subspace derived_subalgebra() const { return bracket_subspaces(full(), full()); }

    // Lower central series g^0 = g, g^{k+1} = [g, g^k]; includes the first
    // stabilized term (0 for nilpotent algebras).
    std::vector<Subspace> lcs() const {
        std::vector<Subspace> out{full()};
        while (true) {
            Subspace next = bracket_subspaces(full(), out.back());
            if (next == out.back()) break;
            out.push_back(next);
            if (next.is_zero()) break;
        }
        return out;
    }

    // Derived series g^(0) = g, g^(k+1) = [g^(k), g^(k)].
    Subspace derived(std::size_t order) const {
        Subspace s = full();
        for (std::size_t i = 0; i < order; ++i) s = bracket_subspaces(s, s);
        return s;
    }

    Subspace centralizer(const Subspace& u) const {
        if (u.is_zero()) return full();
        // x with [x, u_b] = 0 for all basis vectors u_b
        Matrix sys(u.dim() * dim_, dim_);
        for (std::size_t b = 0; b < u.dim(); ++b) {
            Matrix adu = ad(u.basis_vector(b));
            // [x, u_b] = -adu(x)
            for (std::size_t r = 0; r < dim_; ++r)
                for (std::size_t c = 0; c < dim_; ++c) sys(b * dim_ + r, c) = adu(r, c);
        }
        return Subspace::kernel(sys);
    }

    Subspace center() const { return centralizer(full()); }

    // Upper central series C_1 = z(g), C_{k+1}/C_k = z(g/C_k); stops at the
    // first stabilized term.
    std::vector<Subspace> ucs() const {
        std::vector<Subspace> out;
        Subspace ck = center();
        out.push_back(ck);
        while (!ck.is_full()) {
            // C_{k+1} = {x : [x, g] subset C_k}
            std::vector<Vec> rows;
            Subspace next = preimage_of_bracket(ck);
            if (next == ck) break;
            out.push_back(next);
            ck = next;
        }
        return out;
    }

    // {x : [x, g] subset S}
    Subspace preimage_of_bracket(const Subspace& s) const {
        std::vector<Vec> constraint_rows;
        // [x, e_j] in S for all j; express membership via reduction residues.
        // Build linear conditions: for each j, the residue of [x, e_j] after
        // eliminating S must vanish. Residue is linear in x.
        std::vector<Vec> rows;
        for (std::size_t j = 0; j < dim_; ++j) {
            // column i: residue of [e_i, e_j]
            std::vector<Vec> res(dim_);
            for (std::size_t i = 0; i < dim_; ++i) res[i] = s.reduce(basis_bracket(i, j));
            for (std::size_t r = 0; r < dim_; ++r) {
                Vec row(dim_);
                bool nz = false;
                for (std::size_t i = 0; i < dim_; ++i) {
                    row[i] = res[i][r];
                    nz = nz || !row[i].is_zero();
                }
                if (nz) rows.push_back(std::move(row));
            }
        }
        if (rows.empty()) return full();
        return Subspace::kernel(Matrix::from_rows(rows, dim_));
    }

    bool is_ideal(const Subspace& s) const { return s.contains(bracket_subspaces(full(), s)); }

    // Smallest ideal containing s.
    Subspace ideal_closure(const Subspace& s) const {
        Subspace cur = s;
        while (true) {
            Subspace next = cur + bracket_subspaces(full(), cur);
            if (next == cur) return cur;
            cur = next;
        }
    }

    // Step of nilpotency: length of the LCS until zero; throws if not nilpotent.
    std::size_t nilpotency_step() const {
        auto series = lcs();
        if (!series.back().is_zero()) throw std::domain_error("nilpotency_step: not nilpotent");
        return series.size() - 1;
    }

    std::vector<std::size_t> lcs_dims() const {
        std::vector<std::size_t> d;
        for (const auto& s : lcs()) d.push_back(s.dim());
        return d;
    }
    std::vector<std::size_t> ucs_dims() const {
        std::vector<std::size_t> d;
        for (const auto& s : ucs()) d.push_back(s.dim());
        return d;
    }

    // Transport structure constants through an invertible basis change; row a
    // of `basis` is the new basis vector f_a in old coordinates.
    LieAlgebra change_basis(const Matrix& basis, bool defer_jacobi = false) const {
        if (basis.rows() != dim_ || basis.cols() != dim_)
            throw std::invalid_argument("change_basis: shape mismatch");
        Matrix binv_t = [&] {
            auto inv = basis.inverse();
            if (!inv) throw std::invalid_argument("change_basis: singular basis");
            return inv->transpose();
        }();
        std::vector<Vec> c;
        c.reserve(dim_ * (dim_ - 1) / 2);
        for (std::size_t a = 0; a < dim_; ++a)
            for (std::size_t b = a + 1; b < dim_; ++b) {
                Vec w = bracket(basis.row(a), basis.row(b));
                c.push_back(binv_t.apply(w));  // old coords -> new coords
            }
        return LieAlgebra(dim_, std::move(c), defer_jacobi);
    }

    bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

private:
    std::size_t dim_;
    std::vector<Vec> c_;
};

struct QuotientResult {
    LieAlgebra algebra;
    Matrix projection;                      // (dim g - dim I) x dim g, maps g onto the quotient
    std::vector<std::size_t> section_cols;  // coordinates of g whose images form the quotient basis
};

// Quotient by an ideal, with the canonical complement basis: images of the
// standard vectors at the non-pivot coordinates of I's RREF basis. Output is
// therefore reproducible bit-exact.
inline QuotientResult quotient(const LieAlgebra& g, const Subspace& ideal) {
    if (!g.is_ideal(ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
    const std::size_t n = g.dim();
    const std::vector<std::size_t> sec = ideal.complement_pivots();
    const std::size_t q = sec.size();
    // projection: reduce mod the ideal, then read coefficients at section cols
    Matrix proj(q, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec r = ideal.reduce(unit_vec(n, j));
        for (std::size_t a = 0; a < q; ++a) proj(a, j) = r[sec[a]];
    }
    LieAlgebra::Builder b(q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t c = a + 1; c < q; ++c) {
            Vec w = proj.apply(g.basis_bracket(sec[a], sec[c]));
            b.set_bracket(a, c, w);
        }
    return QuotientResult{b.build(), proj, sec};
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const std::size_t n = a.dim(), m = b.dim();
    LieAlgebra::Builder bld(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v = a.basis_bracket(i, j);
            Vec w(n + m);
            for (std::size_t k = 0; k < n; ++k) w[k] = v[k];
            bld.set_bracket(i, j, w);
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vec v = b.basis_bracket(i, j);
            Vec w(n + m);
            for (std::size_t k = 0; k < m; ++k) w[n + k] = v[k];
            bld.set_bracket(n + i, n + j, w);
        }
    return bld.build();
}

struct AbelianSplit {
    Subspace ideal;    // contains g', complementary to the abelian factor
    Subspace abelian;  // central, meets g' trivially
};

// g = ideal + abelian as Lie algebras; the abelian factor is the canonical
// complement of z(g) \cap g' inside z(g).
inline AbelianSplit split_abelian_factor(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    Subspace z = g.center();
    Subspace gp = g.derived_subalgebra();
    Subspace zg = intersect(z, gp);
    // abelian: extend a basis of z \cap g' to one of z; the added vectors span
    // the factor. Greedy over z's canonical basis keeps the choice deterministic.
    std::vector<Vec> ab;
    Subspace cur = zg;
    for (std::size_t i = 0; i < z.dim(); ++i) {
        Vec v = z.basis_vector(i);
        if (!cur.contains(v)) {
            ab.push_back(v);
            cur = cur + Subspace::line(v);
        }
    }
    Subspace abelian = Subspace::span(ab, n);
    // ideal: extend g' by standard vectors, avoiding the abelian factor
    Subspace ideal = gp;
    for (std::size_t j = 0; j < n && ideal.dim() + abelian.dim() < n; ++j) {
        Vec v = unit_vec(n, j);
        Subspace cand = ideal + Subspace::line(v);
        if (cand.dim() == ideal.dim()) continue;
        if (intersect(cand, abelian).is_zero()) ideal = cand;
    }
    if (ideal.dim() + abelian.dim() != n)
        throw std::logic_error("split_abelian_factor: no complement found");
    return AbelianSplit{ideal, abelian};
}

// Restrict g to a subalgebra spanned by `s` (brackets must close); basis =
// the canonical RREF basis of s.
inline LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s) {
    const std::size_t d = s.dim();
    LieAlgebra::Builder b(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vec w = g.bracket(s.basis_vector(i), s.basis_vector(j));
            auto coords = s.coordinates(w);
            if (!coords) throw std::invalid_argument("subalgebra: not closed under bracket");
            b.set_bracket(i, j, *coords);
        }
    return b.build();
}

struct GradedWitness {
    int deg_i, deg_j;
    Vec offending;  // a bracket value outside the expected layer
};

struct GradedLieAlgebra {
    LieAlgebra algebra;
    std::vector<std::pair<int, Subspace>> layers;  // (degree, layer), degrees positive

    Subspace layer_of_degree(int d) const {
        for (const auto& [deg, s] : layers)
            if (deg == d) return s;
        return Subspace(algebra.dim());
    }
};

// Layers must be independent, sum to everything, and satisfy
// [layer_i, layer_j] within layer_{i+j} (zero if absent).
inline std::optional<GradedWitness> graded_check(const GradedLieAlgebra& g) {
    const std::size_t n = g.algebra.dim();
    Subspace total(n);
    std::size_t dim_sum = 0;
    for (const auto& [d, s] : g.layers) {
        if (d <= 0) return GradedWitness{d, d, Vec(n)};
        total = total + s;
        dim_sum += s.dim();
    }
    if (!total.is_full() || dim_sum != n) return GradedWitness{0, 0, Vec(n)};
    for (const auto& [di, si] : g.layers)
        for (const auto& [dj, sj] : g.layers) {
            Subspace target = g.layer_of_degree(di + dj);
            for (std::size_t a = 0; a < si.dim(); ++a)
                for (std::size_t b = 0; b < sj.dim(); ++b) {
                    Vec w = g.algebra.bracket(si.basis_vector(a), sj.basis_vector(b));
                    if (!target.contains(w)) return GradedWitness{di, dj, w};
                }
        }
    return std::nullopt;
}

}  // namespace nila
