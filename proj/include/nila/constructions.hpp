// Metric-preserving constructions: double and single extensions, cotangent
// algebras, central extensions, and mirage checks.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nila/derivations.hpp"
#include "nila/free_nilpotent.hpp"
#include "nila/metric_lie.hpp"

namespace nila {

// (h, h) extended by a skew derivation D to h + <e, z>:
// [X,Y] = [X,Y]_h + h(DX,Y) z, [e,X] = DX, z central;
// the metric extends h by g(e,z) = 1, g(e,e) = g(z,z) = 0.
inline MetricLieAlgebra double_extension(const MetricLieAlgebra& hm, const Matrix& d) {
    const std::size_t n = hm.dim();
    if (!is_derivation(hm.algebra, d))
        throw std::invalid_argument("double_extension: D is not a derivation");
    if (!hm.metric.is_skew(d))
        throw std::invalid_argument("double_extension: D is not skew-symmetric");
    LieAlgebra::Builder b(n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v = hm.algebra.basis_bracket(i, j);
            Vec w(n + 2);
            for (std::size_t k = 0; k < n; ++k) w[k] = v[k];
            w[n + 1] = hm.metric.eval(d.col(i), unit_vec(n, j));
            b.set_bracket(i, j, w);
        }
        for (std::size_t k = 0; k < n; ++k) b.add(n, i, k, d(k, i));  // [e, e_i] = D e_i
    }
    Matrix gram(n + 2, n + 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = hm.metric.gram()(i, j);
    gram(n, n + 1) = gram(n + 1, n) = Rational(1);
    return MetricLieAlgebra(b.build(), BilinearForm(gram));
}

// (h, h) extended by a rank-two skew derivation D to h + <U>:
// [X,Y] = [X,Y]_h + h(DX,Y) U, [U,X] = DX, g(U,U) = 1. When D is noninner
// and vanishes on z(h), the derived algebra gains exactly <U> and the center
// is unchanged; both facts are asserted.
inline MetricLieAlgebra single_extension(const MetricLieAlgebra& hm, const Matrix& d) {
    const std::size_t n = hm.dim();
    if (!is_derivation(hm.algebra, d))
        throw std::invalid_argument("single_extension: D is not a derivation");
    if (!hm.metric.is_skew(d))
        throw std::invalid_argument("single_extension: D is not skew-symmetric");
    if (d.rank() != 2) throw std::invalid_argument("single_extension: D must have rank two");
    LieAlgebra::Builder b(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v = hm.algebra.basis_bracket(i, j);
            Vec w(n + 1);
            for (std::size_t k = 0; k < n; ++k) w[k] = v[k];
            w[n] = hm.metric.eval(d.col(i), unit_vec(n, j));
            b.set_bracket(i, j, w);
        }
        for (std::size_t k = 0; k < n; ++k) b.add(n, i, k, d(k, i));  // [U, e_i] = D e_i
    }
    Matrix gram(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = hm.metric.gram()(i, j);
    gram(n, n) = Rational(1);
    MetricLieAlgebra out(b.build(), BilinearForm(gram));

    Subspace zh = hm.algebra.center();
    if (Subspace::kernel(d).contains(zh) && !is_inner(hm.algebra, d)) {
        Subspace hp = hm.algebra.derived_subalgebra();
        Subspace gp = out.algebra.derived_subalgebra();
        if (gp.dim() != hp.dim() + 1)
            throw std::logic_error("single_extension: derived algebra did not grow by <U>");
        Subspace zg = out.algebra.center();
        std::vector<Vec> zh_up;
        for (std::size_t i = 0; i < zh.dim(); ++i) {
            Vec v = zh.basis_vector(i);
            v.push_back(Rational(0));
            zh_up.push_back(std::move(v));
        }
        if (!(zg == Subspace::span(zh_up, n + 1)))
            throw std::logic_error("single_extension: center changed");
    }
    return out;
}

// T*g = g acting on its dual by the negated transpose of ad, with the pairing
// metric g(X + a, Y + b) = a(Y) + b(X). Coordinates: 0..n-1 the algebra,
// n..2n-1 the dual basis.
inline MetricLieAlgebra cotangent(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    LieAlgebra::Builder b(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v = g.basis_bracket(i, j);
            Vec w(2 * n);
            for (std::size_t k = 0; k < n; ++k) w[k] = v[k];
            b.set_bracket(i, j, w);
        }
    // [e_i, eps_j] = -sum_k c_ik^j eps_k
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational c = g.basis_bracket(i, k)[j];
                if (!c.is_zero()) b.add(i, n + j, n + k, -c);
            }
    Matrix gram(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        gram(i, n + i) = Rational(1);
        gram(n + i, i) = Rational(1);
    }
    return MetricLieAlgebra(b.build(), BilinearForm(gram));
}

// Projection of T*g onto the dual part (P with P + P* = id).
inline Matrix cotangent_dual_projection(std::size_t base_dim) {
    Matrix p(2 * base_dim, 2 * base_dim);
    for (std::size_t i = 0; i < base_dim; ++i) p(base_dim + i, base_dim + i) = Rational(1);
    return p;
}

// Extend an endomorphism of g to T*g by zero on the dual part.
inline Matrix cotangent_extend_by_zero(const Matrix& t) {
    const std::size_t n = t.rows();
    Matrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = t(i, j);
    return out;
}

// Grading of T*n_{m,s}: W_i keeps degree i, W_i^* gets degree 2s+1-i.
inline GradedLieAlgebra cotangent_graded(const FreeNilpotent& fn, const MetricLieAlgebra& tg) {
    GradedLieAlgebra graded{tg.algebra, {}};
    const std::size_t n = fn.dim(), s = fn.step();
    std::size_t offset = 0;
    for (std::size_t k = 1; k <= s; ++k) {
        std::vector<Vec> v, vd;
        for (std::size_t i = 0; i < fn.layer_dims()[k - 1]; ++i) {
            v.push_back(unit_vec(2 * n, offset + i));
            vd.push_back(unit_vec(2 * n, n + offset + i));
        }
        graded.layers.emplace_back(static_cast<int>(k), Subspace::span(v, 2 * n));
        graded.layers.emplace_back(static_cast<int>(2 * s + 1 - k), Subspace::span(vd, 2 * n));
        offset += fn.layer_dims()[k - 1];
    }
    return graded;
}

// Central extension by an antisymmetric 2-cocycle; the new vector is central
// and quotienting by it returns g.
inline LieAlgebra central_extension(const LieAlgebra& g, const Matrix& omega) {
    const std::size_t n = g.dim();
    if (omega.rows() != n || omega.cols() != n || !omega.is_antisymmetric())
        throw std::invalid_argument("central_extension: omega must be antisymmetric dim x dim");
    auto w = [&](const Vec& x, const Vec& y) {
        Rational s;
        Vec oy = omega.apply(y);
        for (std::size_t i = 0; i < n; ++i)
            if (!x[i].is_zero() && !oy[i].is_zero()) s += x[i] * oy[i];
        return s;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Rational cyc = w(g.basis_bracket(i, j), unit_vec(n, k)) +
                               w(g.basis_bracket(j, k), unit_vec(n, i)) +
                               w(g.basis_bracket(k, i), unit_vec(n, j));
                if (!cyc.is_zero())
                    throw std::invalid_argument("central_extension: omega is not closed");
            }
    LieAlgebra::Builder b(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v = g.basis_bracket(i, j);
            Vec out(n + 1);
            for (std::size_t k = 0; k < n; ++k) out[k] = v[k];
            out[n] = omega(i, j);
            b.set_bracket(i, j, out);
        }
    return b.build();
}

struct MirageWitness {
    MetricLieAlgebra source;  // (h, h)
    MetricLieAlgebra target;  // (g, g)
    Matrix inclusion;         // rows = images of the h-basis inside g

    Vec include(const Vec& v) const { return inclusion.apply_left(v); }
    Subspace image() const { return Subspace::span(inclusion); }
};

enum class MirageM5 { central, abelian_only, inconclusive };

struct MirageReport {
    bool m1 = false, m2 = false, m3 = false, m4 = false;
    MirageM5 m5 = MirageM5::inconclusive;
    Subspace m5_bound;  // proven ambient bound for the orthogonal complement

    bool structural_pass() const { return m1 && m2 && m3 && m4; }
};

// M1: isometry. M2: [i(X), i(Y)] = i([X,Y]) for X in h'. M3: [i(X), Y] = 0
// for X in h', Y orthogonal to i(h). M4: second lower-central terms agree.
// M5 is bounded, not decided: the complement of any nondegenerate ideal
// containing i(h) lies in the computed bound; if the bound is central the
// condition holds, if merely abelian that is reported separately.
inline MirageReport mirage_check(const MirageWitness& w) {
    const LieAlgebra& h = w.source.algebra;
    const LieAlgebra& g = w.target.algebra;
    const std::size_t nh = h.dim(), ng = g.dim();
    if (w.inclusion.rows() != nh || w.inclusion.cols() != ng || w.image().dim() != nh)
        throw std::invalid_argument("mirage_check: inclusion must be injective h -> g");
    MirageReport rep;
    rep.m5_bound = Subspace(ng);

    rep.m1 = true;
    for (std::size_t a = 0; a < nh && rep.m1; ++a)
        for (std::size_t b = a; b < nh; ++b)
            if (w.target.metric.eval(w.inclusion.row(a), w.inclusion.row(b)) !=
                w.source.metric.gram()(a, b)) {
                rep.m1 = false;
                break;
            }

    Subspace hp = h.derived_subalgebra();
    rep.m2 = true;
    for (std::size_t a = 0; a < hp.dim() && rep.m2; ++a) {
        Vec x = hp.basis_vector(a);
        Vec ix = w.include(x);
        for (std::size_t b = 0; b < nh; ++b) {
            Vec lhs = g.bracket(ix, w.inclusion.row(b));
            Vec rhs = w.include(h.bracket(x, unit_vec(nh, b)));
            if (lhs != rhs) {
                rep.m2 = false;
                break;
            }
        }
    }

    Subspace perp = w.target.metric.orth_complement(w.image());
    rep.m3 = true;
    for (std::size_t a = 0; a < hp.dim() && rep.m3; ++a) {
        Vec ix = w.include(hp.basis_vector(a));
        for (std::size_t b = 0; b < perp.dim(); ++b)
            if (!is_zero(g.bracket(ix, perp.basis_vector(b)))) {
                rep.m3 = false;
                break;
            }
    }

    // g'' and i(h'') as second lower-central terms
    Subspace gpp = g.bracket_subspaces(g.full(), g.derived_subalgebra());
    Subspace hpp = h.bracket_subspaces(h.full(), hp);
    std::vector<Vec> ihpp;
    for (std::size_t a = 0; a < hpp.dim(); ++a) ihpp.push_back(w.include(hpp.basis_vector(a)));
    rep.m4 = (gpp == Subspace::span(ihpp, ng));

    // M5 bound: any admissible I contains the ideal closure of i(h), so its
    // complement sits inside the closure's orthogonal. Shrink the bound by
    // the ideal property, and, where brackets against a basis vector land in
    // the closure, by the forced vanishing of those brackets.
    Subspace closure = g.ideal_closure(w.image());
    Subspace bound = w.target.metric.orth_complement(closure);
    bool changed = true;
    while (changed && !bound.is_zero()) {
        changed = false;
        // largest subspace of `bound` stable under all ad e_j
        while (true) {
            std::vector<Vec> rows;
            for (std::size_t j = 0; j < ng; ++j) {
                std::vector<Vec> res(bound.dim());
                bool any = false;
                for (std::size_t i = 0; i < bound.dim(); ++i) {
                    res[i] = bound.reduce(g.bracket(bound.basis_vector(i), unit_vec(ng, j)));
                    any = any || !is_zero(res[i]);
                }
                if (!any) continue;
                for (std::size_t r = 0; r < ng; ++r) {
                    Vec row(bound.dim());
                    bool nz = false;
                    for (std::size_t i = 0; i < bound.dim(); ++i) {
                        row[i] = res[i][r];
                        nz = nz || !row[i].is_zero();
                    }
                    if (nz) rows.push_back(std::move(row));
                }
            }
            if (rows.empty()) break;
            // coefficients over bound's basis that survive
            Subspace coeff = Subspace::kernel(Matrix::from_rows(rows, bound.dim()));
            std::vector<Vec> vecs;
            for (std::size_t i = 0; i < coeff.dim(); ++i) {
                Vec c = coeff.basis_vector(i);
                Vec v(ng);
                for (std::size_t b = 0; b < bound.dim(); ++b)
                    if (!c[b].is_zero()) v = v + c[b] * bound.basis_vector(b);
                vecs.push_back(std::move(v));
            }
            Subspace next = Subspace::span(vecs, ng);
            if (next == bound) break;
            bound = next;
            changed = true;
        }
        // brackets forced into I must vanish on the complement
        for (std::size_t j = 0; j < ng && !bound.is_zero(); ++j) {
            bool lands_in_closure = true;
            for (std::size_t i = 0; i < bound.dim(); ++i)
                if (!closure.contains(g.bracket(bound.basis_vector(i), unit_vec(ng, j)))) {
                    lands_in_closure = false;
                    break;
                }
            bool nonzero = false;
            for (std::size_t i = 0; i < bound.dim(); ++i)
                if (!is_zero(g.bracket(bound.basis_vector(i), unit_vec(ng, j)))) {
                    nonzero = true;
                    break;
                }
            if (!lands_in_closure || !nonzero) continue;
            Matrix adj = g.ad_basis(j);
            // x in bound with [x, e_j] = -adj x = 0
            std::vector<Vec> rows;
            for (std::size_t r = 0; r < ng; ++r) {
                Vec row(bound.dim());
                bool nz = false;
                for (std::size_t i = 0; i < bound.dim(); ++i) {
                    row[i] = g.bracket(bound.basis_vector(i), unit_vec(ng, j))[r];
                    nz = nz || !row[i].is_zero();
                }
                if (nz) rows.push_back(std::move(row));
            }
            if (rows.empty()) continue;
            Subspace coeff = Subspace::kernel(Matrix::from_rows(rows, bound.dim()));
            std::vector<Vec> vecs;
            for (std::size_t i = 0; i < coeff.dim(); ++i) {
                Vec c = coeff.basis_vector(i);
                Vec v(ng);
                for (std::size_t b = 0; b < bound.dim(); ++b)
                    if (!c[b].is_zero()) v = v + c[b] * bound.basis_vector(b);
                vecs.push_back(std::move(v));
            }
            Subspace next = Subspace::span(vecs, ng);
            if (!(next == bound)) {
                bound = next;
                changed = true;
            }
        }
    }
    rep.m5_bound = bound;
    if (g.center().contains(bound))
        rep.m5 = MirageM5::central;
    else if (g.bracket_subspaces(bound, bound).is_zero())
        rep.m5 = MirageM5::abelian_only;
    else
        rep.m5 = MirageM5::inconclusive;
    return rep;
}

}  // namespace nila
