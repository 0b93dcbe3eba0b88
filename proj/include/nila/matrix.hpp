// Dense matrices and vectors over the rationals: RREF, kernel, solve, inverse.
#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nila/rational.hpp"

namespace nila {

using Vec = std::vector<Rational>;

inline Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vec: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vec: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Vec operator*(const Rational& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}
inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}
inline Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = Rational(1);
    return v;
}

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
            e_.insert(e_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("Matrix: row size mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix diagonal(const Vec& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vec row(std::size_t i) const { return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_); }
    Vec col(std::size_t j) const {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_row(std::size_t i, const Vec& v) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_zero(); });
    }
    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }
    bool is_antisymmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend Matrix operator*(const Rational& c, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = c * a.e_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b(k, j);
                    if (!bkj.is_zero()) r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    // matrix * column vector
    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: apply size mismatch");
        Vec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational s;
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) s += (*this)(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }
    // row vector * matrix
    Vec apply_left(const Vec& v) const {
        if (v.size() != rows_) throw std::invalid_argument("Matrix: apply_left size mismatch");
        Vec r(cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (v[i].is_zero()) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) r[j] += v[i] * (*this)(i, j);
        }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Rational trace() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: trace of nonsquare");
        Rational t;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    // Reduced row-echelon form; returns the number of pivots through `rank`.
    Matrix rref(std::size_t* rank = nullptr) const {
        Matrix m = *this;
        std::size_t r = m.rref_in_place();
        if (rank) *rank = r;
        return m;
    }

    std::size_t rref_in_place() {
        std::size_t pr = 0;
        for (std::size_t c = 0; c < cols_ && pr < rows_; ++c) {
            std::size_t sel = rows_;
            for (std::size_t i = pr; i < rows_; ++i) {
                if ((*this)(i, c).is_zero()) continue;
                if (sel == rows_) sel = i;
                // prefer +-1 pivots to limit coefficient growth
                const Rational& x = (*this)(i, c);
                if (x.is_one() || x == Rational(-1)) {
                    sel = i;
                    break;
                }
            }
            if (sel == rows_) continue;
            swap_rows(sel, pr);
            Rational inv = (*this)(pr, c).inv();
            if (!inv.is_one())
                for (std::size_t j = c; j < cols_; ++j) (*this)(pr, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == pr) continue;
                const Rational f = (*this)(i, c);
                if (f.is_zero()) continue;
                for (std::size_t j = c; j < cols_; ++j) {
                    if (!(*this)(pr, j).is_zero()) (*this)(i, j) -= f * (*this)(pr, j);
                }
            }
            ++pr;
        }
        return pr;
    }

    std::size_t rank() const {
        std::size_t r;
        rref(&r);
        return r;
    }

    Rational det() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: det of nonsquare");
        Matrix m = *this;
        Rational d(1);
        std::size_t n = rows_;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t sel = n;
            for (std::size_t i = c; i < n; ++i)
                if (!m(i, c).is_zero()) {
                    sel = i;
                    break;
                }
            if (sel == n) return Rational(0);
            if (sel != c) {
                m.swap_rows(sel, c);
                d = -d;
            }
            d *= m(c, c);
            Rational inv = m(c, c).inv();
            for (std::size_t i = c + 1; i < n; ++i) {
                Rational f = m(i, c) * inv;
                if (f.is_zero()) continue;
                for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
            }
        }
        return d;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: inverse of nonsquare");
        std::size_t n = rows_;
        Matrix aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
            aug(i, n + i) = Rational(1);
        }
        std::size_t r = aug.rref_in_place();
        if (r < n) return std::nullopt;
        Matrix inv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
        return inv;
    }

    // Basis of {x : A x = 0}.
    std::vector<Vec> kernel_basis() const {
        Matrix r = rref();
        std::vector<std::size_t> pivot_col;
        std::vector<bool> is_pivot(cols_, false);
        std::size_t pr = 0;
        for (std::size_t c = 0; c < cols_ && pr < rows_; ++c) {
            if (!r(pr, c).is_zero()) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                ++pr;
            }
        }
        std::vector<Vec> basis;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            Vec v(cols_);
            v[c] = Rational(1);
            for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -r(i, c);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Particular solution of A x = b, if consistent.
    std::optional<Vec> solve(const Vec& b) const {
        if (b.size() != rows_) throw std::invalid_argument("Matrix: solve size mismatch");
        Matrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        aug.rref_in_place();
        Vec x(cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::size_t lead = cols_ + 1;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (!aug(i, j).is_zero()) {
                    lead = j;
                    break;
                }
            if (lead == cols_) return std::nullopt;  // 0 = nonzero
            if (lead > cols_) continue;              // zero row
            x[lead] = aug(i, cols_);
        }
        return x;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? "\n[" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += (*this)(i, j).str();
            }
            s += "]";
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.str(); }

private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

}  // namespace nila
