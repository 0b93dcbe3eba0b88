// Subspaces of Q^n in canonical reduced row-echelon form.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nila/matrix.hpp"

namespace nila {

// Canonical representation: basis rows in RREF with zero rows dropped, so two
// equal subspaces compare equal as data.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient) {
        Subspace s(ambient);
        if (vectors.empty()) return s;
        Matrix m = Matrix::from_rows(vectors, ambient);
        std::size_t rank;
        m = m.rref(&rank);
        Matrix b(rank, ambient);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < ambient; ++j) b(i, j) = m(i, j);
        s.basis_ = std::move(b);
        return s;
    }
    static Subspace span(const Matrix& rows) {
        std::vector<Vec> v;
        for (std::size_t i = 0; i < rows.rows(); ++i) v.push_back(rows.row(i));
        return span(v, rows.cols());
    }
    static Subspace full(std::size_t ambient) { return span(Matrix::identity(ambient)); }
    static Subspace line(const Vec& v) { return span({v}, v.size()); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        Vec r = reduce(v);
        return nila::is_zero(r);
    }
    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    // Residue of v after eliminating against the RREF basis rows.
    Vec reduce(const Vec& v) const {
        Vec r = v;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t p = pivot_of_row(i);
            if (!r[p].is_zero()) {
                Rational f = r[p];
                for (std::size_t j = 0; j < ambient_; ++j)
                    if (!basis_(i, j).is_zero()) r[j] -= f * basis_(i, j);
            }
        }
        return r;
    }

    // Coordinates of v in the basis rows, if v lies in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const {
        Vec r = v;
        Vec coeff(basis_.rows());
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t p = pivot_of_row(i);
            if (!r[p].is_zero()) {
                coeff[i] = r[p];
                Rational f = r[p];
                for (std::size_t j = 0; j < ambient_; ++j)
                    if (!basis_(i, j).is_zero()) r[j] -= f * basis_(i, j);
            }
        }
        if (!nila::is_zero(r)) return std::nullopt;
        return coeff;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        check_ambient(a, b);
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
        for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
        return span(rows, a.ambient_);
    }

    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        check_ambient(a, b);
        if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_);
        // x = u A = v B; solve [A^T | -B^T] (u,v)^T = 0.
        Matrix m(a.ambient_, a.dim() + b.dim());
        for (std::size_t j = 0; j < a.ambient_; ++j) {
            for (std::size_t i = 0; i < a.dim(); ++i) m(j, i) = a.basis_(i, j);
            for (std::size_t i = 0; i < b.dim(); ++i) m(j, a.dim() + i) = -b.basis_(i, j);
        }
        std::vector<Vec> rows;
        for (const Vec& k : m.kernel_basis()) {
            Vec x(a.ambient_);
            for (std::size_t i = 0; i < a.dim(); ++i)
                if (!k[i].is_zero())
                    for (std::size_t j = 0; j < a.ambient_; ++j) x[j] += k[i] * a.basis_(i, j);
            rows.push_back(std::move(x));
        }
        return span(rows, a.ambient_);
    }

    // Kernel of a linear map given by `m` acting on columns (x -> m x).
    static Subspace kernel(const Matrix& m) {
        Subspace s(m.cols());
        return span(m.kernel_basis(), m.cols());
    }
    // Column space of m, as a subspace of Q^rows.
    static Subspace image(const Matrix& m) {
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
        return span(cols, m.rows());
    }

    // Coordinates that are not pivots of the RREF basis; the corresponding
    // standard vectors form the canonical complement.
    std::vector<std::size_t> complement_pivots() const {
        std::vector<bool> piv(ambient_, false);
        for (std::size_t i = 0; i < basis_.rows(); ++i) piv[pivot_of_row(i)] = true;
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!piv[j]) out.push_back(j);
        return out;
    }

    std::size_t pivot_of_row(std::size_t i) const {
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!basis_(i, j).is_zero()) return j;
        throw std::logic_error("Subspace: zero basis row");
    }

private:
    static void check_ambient(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    }

    std::size_t ambient_;
    Matrix basis_;
};

}  // namespace nila
