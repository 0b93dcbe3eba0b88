#pragma once

#include <random>

#include "nila/matrix.hpp"
#include "nila/subspace.hpp"

namespace test_helpers {

using nila::Matrix;
using nila::Rational;
using nila::Vec;

inline Rational random_rational(std::mt19937& rng, int num_range = 5, int den_range = 3) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                            int num_range = 5, int den_range = 3) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, num_range, den_range);
    return m;
}

inline Vec random_vec(std::mt19937& rng, std::size_t n, int num_range = 5, int den_range = 3) {
    Vec v(n);
    for (auto& x : v) x = random_rational(rng, num_range, den_range);
    return v;
}

// Product of a permutation, nonzero diagonal scalings and a few shears;
// invertible and sparse enough to keep transported structure constants small.
inline Matrix random_sparse_invertible(std::mt19937& rng, std::size_t n, int shears = 2) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix m(n, n);
    std::uniform_int_distribution<int> scale(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    for (std::size_t i = 0; i < n; ++i)
        m(i, perm[i]) = Rational((sign(rng) ? 1 : -1) * scale(rng));
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int s = 0; s < shears; ++s) {
        std::size_t a = idx(rng), b = idx(rng);
        int c = coef(rng);
        if (a == b || c == 0) continue;
        // row_a += c * row_b
        for (std::size_t j = 0; j < n; ++j) m(a, j) += Rational(c) * m(b, j);
    }
    return m;
}

}  // namespace test_helpers
