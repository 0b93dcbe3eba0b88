// Univariate rational polynomials, minimal polynomials, eigenvalues and the
// rational Jordan-Chevalley split.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nila/matrix.hpp"
#include "nila/subspace.hpp"

namespace nila {

// Coefficients in ascending degree; normalized so the leading one is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Rational v) { return Poly(Vec{std::move(v)}); }
    static Poly x_minus(const Rational& r) { return Poly(Vec{-r, Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Vec& coeffs() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const Rational& leading() const { return c_.back(); }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly p = *this;
        Rational inv = c_.back().inv();
        for (auto& x : p.c_) x *= inv;
        return p;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Vec r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size()) r[i] += a.c_[i];
            if (i < b.c_.size()) r[i] += b.c_[i];
        }
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Vec r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size()) r[i] += a.c_[i];
            if (i < b.c_.size()) r[i] -= b.c_[i];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Vec r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }

    // Division with remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly rem = a, quot;
        quot.c_.assign(a.c_.size(), Rational(0));
        Rational lead_inv = b.leading().inv();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            std::size_t shift = rem.degree() - b.degree();
            Rational f = rem.leading() * lead_inv;
            quot.c_[shift] = f;
            for (std::size_t i = 0; i < b.c_.size(); ++i) rem.c_[shift + i] -= f * b.c_[i];
            rem.trim();
        }
        quot.trim();
        return {quot, rem};
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        Vec r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational((long long)i) * c_[i];
        return Poly(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational v;
        for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
        return v;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Matrix eval(const Matrix& m) const {
        Matrix v(m.rows(), m.cols());
        for (std::size_t i = c_.size(); i-- > 0;) {
            v = v * m;
            if (!c_[i].is_zero())
                for (std::size_t d = 0; d < m.rows(); ++d) v(d, d) += c_[i];
        }
        return v;
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Product of distinct irreducible factors.
    Poly squarefree_part() const {
        Poly g = gcd(*this, derivative());
        if (g.degree() <= 0) return monic();
        return divmod(*this, g).first.monic();
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += c_[i].sign() > 0 ? " + " : " - ";
            else if (c_[i].sign() < 0) s += "-";
            Rational a = c_[i].abs();
            if (i == 0 || !a.is_one()) s += a.str();
            if (i > 0) {
                if (!a.is_one()) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    Vec c_;
};

// All rational roots of p, via the rational root theorem on the primitive
// integer form. Divisor enumeration uses trial division; in-scope data has
// small prime factors only, and callers validate completeness downstream.
std::vector<Rational> rational_roots(const Poly& p);

// Least-degree monic q with q(m) = 0.
Poly minimal_polynomial(const Matrix& m);

// Semisimple part of the Jordan-Chevalley decomposition over Q: a polynomial
// in m with squarefree minimal polynomial such that m - result is nilpotent.
Matrix semisimple_part(const Matrix& m);

inline Subspace eigenspace(const Matrix& m, const Rational& lambda) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eigenspace: nonsquare");
    Matrix shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
    return Subspace::kernel(shifted);
}

// ---- implementation ----

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> primes;
    std::vector<int> mult;
    BigInt d = 2;
    while (d * d <= n && d < 2000000) {
        if (n % d == 0) {
            primes.push_back(d);
            mult.push_back(0);
            while (n % d == 0) {
                n /= d;
                ++mult.back();
            }
        }
        ++d;
    }
    if (n > 1) {
        primes.push_back(n);
        mult.push_back(1);
    }
    std::vector<BigInt> divs{BigInt(1)};
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::size_t sz = divs.size();
        BigInt pw = 1;
        for (int e = 1; e <= mult[i]; ++e) {
            pw *= primes[i];
            for (std::size_t k = 0; k < sz; ++k) divs.push_back(divs[k] * pw);
        }
    }
    return divs;
}

}  // namespace detail

inline std::vector<Rational> rational_roots(const Poly& p) {
    if (p.is_zero() || p.degree() == 0) return {};
    // clear denominators, strip trailing zero coefficients (root 0)
    BigInt den_lcm = 1;
    for (const auto& c : p.coeffs()) den_lcm = den_lcm / big_gcd(den_lcm, c.den()) * c.den();
    std::vector<BigInt> ic;
    for (const auto& c : p.coeffs()) ic.push_back(c.num() * (den_lcm / c.den()));
    std::vector<Rational> roots;
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low + 1 >= ic.size()) return roots;
    const BigInt& a0 = ic[low];
    const BigInt& ad = ic.back();
    std::set<Rational> found;
    for (const BigInt& pn : detail::positive_divisors(a0))
        for (const BigInt& q : detail::positive_divisors(ad)) {
            for (int s : {1, -1}) {
                Rational cand(s > 0 ? pn : BigInt(-pn), q);
                if (found.count(cand)) continue;
                if (p.eval(cand).is_zero()) found.insert(cand);
            }
        }
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

inline Poly minimal_polynomial(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("minimal_polynomial: nonsquare");
    const std::size_t n = m.rows();
    const std::size_t nn = n * n;
    // find the first power of m dependent on the previous ones
    std::vector<Vec> pow_flat;
    Matrix cur = Matrix::identity(n);
    Matrix echelon(0, 0);  // grown below
    std::vector<Vec> rows;
    for (std::size_t k = 0;; ++k) {
        Vec flat(nn);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = cur(i, j);
        pow_flat.push_back(flat);
        // solve sum_{i<k} x_i pow[i] = pow[k]
        if (k > 0) {
            Matrix a(nn, k);
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t r = 0; r < nn; ++r) a(r, c) = pow_flat[c][r];
            if (auto x = a.solve(flat)) {
                Vec coeffs(k + 1);
                for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*x)[i];
                coeffs[k] = Rational(1);
                return Poly(std::move(coeffs));
            }
        }
        cur = cur * m;
        if (k > n) throw std::logic_error("minimal_polynomial: no dependence found");
    }
}

inline Matrix semisimple_part(const Matrix& m) {
    Poly mu = minimal_polynomial(m);
    Poly f = mu.squarefree_part();
    if (f.eval(m).is_zero()) return m;  // already semisimple
    Poly fp = f.derivative();
    Matrix s = m;
    const std::size_t n = m.rows();
    for (std::size_t iter = 0; iter <= n + 1; ++iter) {
        Matrix fs = f.eval(s);
        if (fs.is_zero()) return s;
        auto inv = fp.eval(s).inverse();
        if (!inv) throw std::runtime_error("semisimple_part: Newton step not invertible");
        s = s - (*inv) * fs;
    }
    throw std::runtime_error("semisimple_part: no convergence");
}

}  // namespace nila
