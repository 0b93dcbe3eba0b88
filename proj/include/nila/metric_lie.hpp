// Lie algebras paired with a validated ad-invariant metric.
#pragma once

#include <stdexcept>
#include <utility>

#include "nila/bilinear_form.hpp"
#include "nila/lie_algebra.hpp"

namespace nila {

struct MetricLieAlgebra {
    LieAlgebra algebra;
    BilinearForm metric;

    MetricLieAlgebra(LieAlgebra g, BilinearForm b)
        : algebra(std::move(g)), metric(std::move(b)) {
        if (metric.dim() != algebra.dim())
            throw std::invalid_argument("MetricLieAlgebra: dimension mismatch");
        if (!metric.nondegenerate())
            throw std::invalid_argument("MetricLieAlgebra: metric is degenerate");
        if (auto w = metric.ad_invariance_witness(algebra))
            throw std::invalid_argument("MetricLieAlgebra: metric not ad-invariant at (" +
                                        std::to_string(w->i + 1) + "," + std::to_string(w->j + 1) +
                                        "," + std::to_string(w->k + 1) + ")");
    }

    std::size_t dim() const { return algebra.dim(); }
};

// Abelian R^{2n} with basis (v_1..v_n, w_1..w_n) and the neutral pairing
// <v_i, w_i> = 1.
inline MetricLieAlgebra neutral_abelian(std::size_t n) {
    Matrix gram(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        gram(i, n + i) = Rational(1);
        gram(n + i, i) = Rational(1);
    }
    return MetricLieAlgebra(LieAlgebra::abelian(2 * n), BilinearForm(gram));
}

// Orthogonal direct sum of metric Lie algebras.
inline MetricLieAlgebra orthogonal_sum(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
    LieAlgebra sum = direct_sum(a.algebra, b.algebra);
    const std::size_t n = a.dim(), m = b.dim();
    Matrix gram(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = a.metric.gram()(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) gram(n + i, n + j) = b.metric.gram()(i, j);
    return MetricLieAlgebra(std::move(sum), BilinearForm(gram));
}

}  // namespace nila
