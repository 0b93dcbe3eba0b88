// The family g_k (k >= 12) of irreducible metric Lie algebras built from the
// 12-dimensional base (h, h) by double and single extensions, together with
// mirage data and a change-of-basis certificate identifying g_k/z(g_k).
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nila/constructions.hpp"

namespace nila {

struct FamilyResult {
    MetricLieAlgebra algebra;  // g_k
    MirageWitness mirage;      // the base embedded on the first 12 coordinates
    Subspace center;
    QuotientResult quot;       // g_k / z(g_k) in the deterministic basis
    Matrix cert_basis;         // rows: basis of the quotient in normal form
    LieAlgebra normal_form;    // quotient transported to the certificate basis
    std::string base_name;     // "n9" for even k, "nt10" for odd k
    std::size_t abelian_dim;   // normal_form == base + abelian factor
};

namespace detail {

// D_{4n} on h + R^{4n}: e1 -> e6, e2 -> e5, v_{2i} -> w_{2i-1}, v_{2i-1} -> -w_{2i}.
inline Matrix family_skew_derivation(std::size_t total, std::size_t pairs_offset,
                                     std::size_t npairs, bool with_hat,
                                     std::size_t hat_offset) {
    Matrix d(total, total);
    d(5, 0) = Rational(1);  // e1 -> e6
    d(4, 1) = Rational(1);  // e2 -> e5
    if (with_hat) {
        d(hat_offset + 1, 0) = Rational(1);  // e1 -> e6 + w-hat
        d(4, hat_offset) = Rational(1);      // v-hat -> e5
    }
    for (std::size_t i = 1; i <= npairs; ++i) {
        std::size_t v2i = pairs_offset + 2 * i - 1;
        std::size_t v2i1 = pairs_offset + 2 * i - 2;
        std::size_t w2i1 = pairs_offset + 2 * npairs + 2 * i - 2;
        std::size_t w2i = pairs_offset + 2 * npairs + 2 * i - 1;
        d(w2i1, v2i) = Rational(1);
        d(w2i, v2i1) = Rational(-1);
    }
    return d;
}

inline Matrix identity_inclusion(std::size_t nh, std::size_t ng) {
    Matrix m(nh, ng);
    for (std::size_t i = 0; i < nh; ++i) m(i, i) = Rational(1);
    return m;
}

}  // namespace detail

// base must be the 12-dimensional algebra h with its ad-invariant metric.
inline FamilyResult family(std::size_t k, const MetricLieAlgebra& h12) {
    if (k < 12) throw std::invalid_argument("family: defined for k >= 12");
    if (h12.dim() != 12) throw std::invalid_argument("family: base must be 12-dimensional");

    MetricLieAlgebra gk = [&]() -> MetricLieAlgebra {
        if (k == 12) return h12;
        if (k % 2 == 0) {
            std::size_t r = k - 14;
            if (r % 4 == 0) {
                std::size_t n = r / 4;  // h + R^{4n}, derivation D_{4n}
                MetricLieAlgebra base =
                    n == 0 ? h12 : orthogonal_sum(h12, neutral_abelian(2 * n));
                Matrix d = detail::family_skew_derivation(base.dim(), 12, n, false, 0);
                return double_extension(base, d);
            }
            std::size_t n = (r - 2) / 4;  // h + R^2 + R^{4n}, derivation D_{4n+2}
            MetricLieAlgebra base = orthogonal_sum(h12, neutral_abelian(1));
            if (n > 0) base = orthogonal_sum(base, neutral_abelian(2 * n));
            Matrix d = detail::family_skew_derivation(base.dim(), 14, n, true, 12);
            return double_extension(base, d);
        }
        // odd: single extension of g_{k-1} by f (e1 -> e12, e11 -> e5, else 0)
        FamilyResult prev = family(k - 1, h12);
        const std::size_t np = prev.algebra.dim();
        Matrix f(np, np);
        f(11, 0) = Rational(1);
        f(4, 10) = Rational(1);
        const LieAlgebra& gp = prev.algebra.algebra;
        if (is_inner(gp, f)) throw std::logic_error("family: extension map is inner");
        // f vanishes on the embedded h' and maps into the second lower-central term
        Subspace hp_up = Subspace::span(
            [&] {
                Subspace hp = h12.algebra.derived_subalgebra();
                std::vector<Vec> rows;
                for (std::size_t i = 0; i < hp.dim(); ++i) {
                    Vec v = hp.basis_vector(i);
                    v.resize(np);
                    rows.push_back(std::move(v));
                }
                return rows;
            }(),
            np);
        for (std::size_t i = 0; i < hp_up.dim(); ++i)
            if (!is_zero(f.apply(hp_up.basis_vector(i))))
                throw std::logic_error("family: extension map does not vanish on h'");
        Subspace gpp = gp.bracket_subspaces(gp.full(), gp.derived_subalgebra());
        if (!gpp.contains(Subspace::image(f)))
            throw std::logic_error("family: image not inside the second lower-central term");
        // f(X) stays outside [X, i(h)] + i(h)^perp for X = e1 + e11
        Vec x = unit_vec(np, 0) + unit_vec(np, 10);
        std::vector<Vec> span;
        for (std::size_t b = 0; b < 12; ++b) span.push_back(gp.bracket(x, unit_vec(np, b)));
        Subspace reach = Subspace::span(span, np) +
                         prev.algebra.metric.orth_complement(prev.mirage.image());
        if (reach.contains(f.apply(x)))
            throw std::logic_error("family: single-extension genericity condition fails");
        return single_extension(prev.algebra, f);
    }();

    MirageWitness mirage{h12, gk, detail::identity_inclusion(12, k)};
    Subspace center = gk.algebra.center();
    QuotientResult quot = quotient(gk.algebra, center);

    const std::size_t q = quot.algebra.dim();
    Matrix cert = Matrix::identity(q);
    if (k % 2 == 1) {
        // sections: h-part (first 9), abelian middle, U last; normal order is
        // h-part, -U (tenth base vector), then the abelian columns
        cert = Matrix(q, q);
        for (std::size_t a = 0; a < 9; ++a) cert(a, a) = Rational(1);
        cert(9, q - 1) = Rational(-1);
        for (std::size_t t = 0; t + 10 < q; ++t) cert(10 + t, 9 + t) = Rational(1);
    }
    LieAlgebra normal_form = quot.algebra.change_basis(cert);
    std::size_t abelian_dim = q - (k % 2 == 0 ? 9 : 10);
    return FamilyResult{std::move(gk),     std::move(mirage),      std::move(center),
                        std::move(quot),   std::move(cert),        std::move(normal_form),
                        k % 2 == 0 ? "n9" : "nt10", abelian_dim};
}

}  // namespace nila
