// Symmetric bilinear forms on a Lie algebra: ad-invariance, orthogonal
// complements, metric adjoints.
#pragma once

#include <optional>
#include <stdexcept>

#include "nila/lie_algebra.hpp"
#include "nila/matrix.hpp"
#include "nila/poly.hpp"
#include "nila/subspace.hpp"

namespace nila {

struct AdInvarianceWitness {
    std::size_t i, j, k;
};

class BilinearForm {
public:
    BilinearForm() = default;
    explicit BilinearForm(Matrix gram) : gram_(std::move(gram)) {
        if (gram_.rows() != gram_.cols())
            throw std::invalid_argument("BilinearForm: gram must be square");
        if (!gram_.is_symmetric()) throw std::invalid_argument("BilinearForm: gram not symmetric");
        nondegenerate_ = !gram_.det().is_zero();
    }

    std::size_t dim() const { return gram_.rows(); }
    const Matrix& gram() const { return gram_; }
    bool nondegenerate() const { return nondegenerate_; }

    Rational eval(const Vec& x, const Vec& y) const {
        Vec gy = gram_.apply(y);
        Rational s;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!x[i].is_zero() && !gy[i].is_zero()) s += x[i] * gy[i];
        return s;
    }

    // B([e_i, e_j], e_k) + B(e_j, [e_i, e_k]) = 0 on all basis triples.
    std::optional<AdInvarianceWitness> ad_invariance_witness(const LieAlgebra& g) const {
        if (g.dim() != dim()) throw std::invalid_argument("BilinearForm: dimension mismatch");
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                for (std::size_t k = j; k < dim(); ++k) {
                    Rational v = eval(g.basis_bracket(i, j), unit_vec(dim(), k)) +
                                 eval(unit_vec(dim(), j), g.basis_bracket(i, k));
                    if (!v.is_zero()) return AdInvarianceWitness{i, j, k};
                }
        return std::nullopt;
    }
    bool is_ad_invariant(const LieAlgebra& g) const { return !ad_invariance_witness(g); }

    Subspace orth_complement(const Subspace& s) const {
        if (!nondegenerate_) throw std::domain_error("orth_complement: degenerate form");
        if (s.is_zero()) return Subspace::full(dim());
        // x with (s_a)^T G x = 0
        Matrix sys = s.basis() * gram_;
        return Subspace::kernel(sys);
    }

    bool is_nondegenerate_on(const Subspace& s) const {
        if (!nondegenerate_) throw std::domain_error("is_nondegenerate_on: degenerate form");
        return intersect(s, orth_complement(s)).is_zero();
    }

    // S* with B(S x, y) = B(x, S* y).
    Matrix metric_adjoint(const Matrix& s) const {
        if (!nondegenerate_) throw std::domain_error("metric_adjoint: degenerate form");
        auto ginv = gram_.inverse();
        return (*ginv) * s.transpose() * gram_;
    }

    bool is_skew(const Matrix& d) const {
        Matrix adj = metric_adjoint(d);
        return (adj + d).is_zero();
    }

    // Signature over R via Descartes' rule on the characteristic polynomial
    // (eigenvalues of a symmetric rational matrix are real). Informational.
    struct Signature {
        std::size_t positive, negative, zero;
    };
    Signature signature() const {
        // char poly by expanding det(G - x I) through minimal_polynomial-style
        // power dependence is wasteful; use Faddeev-LeVerrier.
        const std::size_t n = dim();
        std::vector<Rational> coeff(n + 1);
        coeff[n] = Rational(1);
        Matrix m = Matrix::identity(n), a = gram_;
        Rational cprev(1);
        Matrix acc = gram_;
        // p(x) = det(xI - G); c_{n-k} computed iteratively
        Matrix mk = gram_;
        std::vector<Rational> c(n + 1);
        c[n] = Rational(1);
        Matrix bk = Matrix::identity(n);
        for (std::size_t k = 1; k <= n; ++k) {
            Matrix ak = gram_ * bk;
            Rational ck = -(Rational(1) / Rational((long long)k)) * ak.trace();
            c[n - k] = ck;
            bk = ak;
            for (std::size_t i = 0; i < n; ++i) bk(i, i) += ck;
        }
        // count sign changes for positive roots, and for negative via p(-x)
        auto sign_changes = [&](bool flip) {
            int last = 0;
            std::size_t changes = 0;
            for (std::size_t i = 0; i <= n; ++i) {
                Rational v = c[i];
                if (flip && i % 2 == 1) v = -v;
                int s = v.sign();
                if (s == 0) continue;
                if (last != 0 && s != last) ++changes;
                last = s;
            }
            return changes;
        };
        std::size_t pos = sign_changes(false);
        std::size_t neg = sign_changes(true);
        return Signature{pos, neg, n - pos - neg};
    }

private:
    Matrix gram_;
    bool nondegenerate_ = false;
};

}  // namespace nila
