// Free nilpotent Lie algebras: Witt dimensions, Hall bases, structure
// constants by rewriting, gradings, closed-form Nikolayevsky derivations and
// the related inequalities.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nila/derivations.hpp"
#include "nila/lie_algebra.hpp"
#include "nila/nice_basis.hpp"
#include "nila/rational.hpp"

namespace nila {

// dim of the degree-k layer of the free Lie algebra on m generators:
// k d_m(k) = m^k - sum_{l<k, l|k} l d_m(l).
inline BigInt witt_dim_big(std::size_t m, std::size_t k) {
    if (m < 2 || k < 1) throw std::invalid_argument("witt_dim: need m >= 2, k >= 1");
    std::vector<BigInt> d(k + 1, 0);
    for (std::size_t kk = 1; kk <= k; ++kk) {
        BigInt acc = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(kk));
        for (std::size_t l = 1; l < kk; ++l)
            if (kk % l == 0) acc -= BigInt(l) * d[l];
        if (acc % kk != 0) throw std::logic_error("witt_dim: recurrence not integral");
        d[kk] = acc / kk;
    }
    return d[k];
}

inline std::size_t witt_dim(std::size_t m, std::size_t k) {
    return witt_dim_big(m, k).convert_to<std::size_t>();
}

// Bracketed word over generators 1..m; generators have left == right == npos.
struct HallWord {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t degree;
    std::size_t left = npos, right = npos;  // hall indices of the children
    std::size_t generator = npos;           // 0-based generator number for leaves
    std::size_t hall_index;                 // position in the total order

    bool is_generator() const { return generator != npos; }
};

class FreeNilpotent {
public:
    FreeNilpotent(std::size_t m, std::size_t s) : m_(m), s_(s) {
        if (m < 2 || s < 1) throw std::invalid_argument("FreeNilpotent: need m >= 2, s >= 1");
        build_hall_set();
        build_structure();
    }

    std::size_t generators() const { return m_; }
    std::size_t step() const { return s_; }
    std::size_t dim() const { return words_.size(); }
    const std::vector<HallWord>& hall_basis() const { return words_; }
    const LieAlgebra& algebra() const { return *algebra_; }
    const std::vector<std::size_t>& layer_dims() const { return layer_dims_; }

    GradedLieAlgebra graded() const {
        GradedLieAlgebra g{*algebra_, {}};
        std::size_t offset = 0;
        for (std::size_t k = 1; k <= s_; ++k) {
            std::vector<Vec> v;
            for (std::size_t i = 0; i < layer_dims_[k - 1]; ++i)
                v.push_back(unit_vec(dim(), offset + i));
            g.layers.emplace_back(static_cast<int>(k), Subspace::span(v, dim()));
            offset += layer_dims_[k - 1];
        }
        return g;
    }

    Subspace layer(std::size_t k) const {
        std::size_t offset = 0;
        for (std::size_t d = 1; d < k; ++d) offset += layer_dims_[d - 1];
        std::vector<Vec> v;
        for (std::size_t i = 0; i < layer_dims_[k - 1]; ++i)
            v.push_back(unit_vec(dim(), offset + i));
        return Subspace::span(v, dim());
    }

    // "[[e2,e1],e1]" style rendering of a Hall word.
    std::string word_string(std::size_t idx) const {
        const HallWord& w = words_[idx];
        if (w.is_generator()) return "e" + std::to_string(w.generator + 1);
        return "[" + word_string(w.left) + "," + word_string(w.right) + "]";
    }

private:
    // Hall set under the order: generators e1 < e2 < ...; all words ordered by
    // degree, then by creation; within a degree, pairs are generated with the
    // right factor's degree ascending, then left and right ascending. [u,v] is
    // admitted when u > v and (u is a generator or its right child is <= v).
    void build_hall_set() {
        std::vector<std::vector<std::size_t>> by_degree(s_ + 1);
        for (std::size_t g = 0; g < m_; ++g) {
            HallWord w;
            w.degree = 1;
            w.generator = g;
            w.hall_index = words_.size();
            by_degree[1].push_back(w.hall_index);
            words_.push_back(w);
        }
        for (std::size_t d = 2; d <= s_; ++d) {
            for (std::size_t dv = 1; 2 * dv <= d; ++dv) {
                std::size_t du = d - dv;
                for (std::size_t u : by_degree[du])
                    for (std::size_t v : by_degree[dv]) {
                        if (du == dv && u <= v) continue;
                        const HallWord& wu = words_[u];
                        if (!wu.is_generator() && wu.right > v) continue;
                        HallWord w;
                        w.degree = d;
                        w.left = u;
                        w.right = v;
                        w.hall_index = words_.size();
                        by_degree[d].push_back(w.hall_index);
                        pair_index_[{u, v}] = w.hall_index;
                        words_.push_back(w);
                    }
            }
        }
        layer_dims_.assign(s_, 0);
        for (std::size_t d = 1; d <= s_; ++d) layer_dims_[d - 1] = by_degree[d].size();
        for (std::size_t d = 1; d <= s_; ++d)
            if (layer_dims_[d - 1] != witt_dim(m_, d))
                throw std::logic_error("FreeNilpotent: layer size disagrees with Witt dimension");
    }

    // Normal form of [u, v] over the Hall basis, by antisymmetry and Jacobi:
    // [[x,y],v] = [x,[y,v]] - [y,[x,v]] when y > v. Memoized on word pairs.
    const Vec& rewrite(std::size_t u, std::size_t v) {
        auto key = std::make_pair(u, v);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Vec result(dim());
        if (u != v && words_[u].degree + words_[v].degree <= s_) {
            if (u < v) {
                const Vec& flipped = rewrite(v, u);
                for (std::size_t k = 0; k < dim(); ++k) result[k] = -flipped[k];
            } else {
                auto hall = pair_index_.find({u, v});
                if (hall != pair_index_.end()) {
                    result[hall->second] = Rational(1);
                } else {
                    // u = [x,y] with y > v
                    std::size_t x = words_[u].left, y = words_[u].right;
                    Vec yv = rewrite(y, v);
                    Vec xv = rewrite(x, v);
                    for (std::size_t w = 0; w < dim(); ++w) {
                        if (!yv[w].is_zero()) {
                            const Vec& t = rewrite(x, w);
                            for (std::size_t k = 0; k < dim(); ++k)
                                if (!t[k].is_zero()) result[k] += yv[w] * t[k];
                        }
                        if (!xv[w].is_zero()) {
                            const Vec& t = rewrite(y, w);
                            for (std::size_t k = 0; k < dim(); ++k)
                                if (!t[k].is_zero()) result[k] -= xv[w] * t[k];
                        }
                    }
                }
            }
        }
        return memo_.emplace(key, std::move(result)).first->second;
    }

    void build_structure() {
        LieAlgebra::Builder b(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = i + 1; j < dim(); ++j) b.set_bracket(i, j, rewrite(i, j));
        algebra_ = std::make_unique<LieAlgebra>(b.build());
        memo_.clear();
    }

    std::size_t m_, s_;
    std::vector<HallWord> words_;
    std::vector<std::size_t> layer_dims_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;
    std::map<std::pair<std::size_t, std::size_t>, Vec> memo_;
    std::unique_ptr<LieAlgebra> algebra_;
};

// Shared cache keyed by (m, s); reads dominate, insertion under a writer lock.
inline std::shared_ptr<const FreeNilpotent> free_nilpotent(std::size_t m, std::size_t s) {
    static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const FreeNilpotent>> cache;
    static std::shared_mutex mutex;
    const auto key = std::make_pair(m, s);
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const FreeNilpotent>(m, s);
    std::unique_lock lock(mutex);
    return cache.emplace(key, std::move(built)).first->second;
}

// N = lambda * sum_k k pi_k with lambda = (sum k d_m(k)) / (sum k^2 d_m(k));
// the unique positive solution of sum_k k d_m(k) (k lambda - 1) = 0.
inline Rational nikolayevsky_free_factor(std::size_t m, std::size_t s) {
    BigInt num = 0, den = 0;
    for (std::size_t k = 1; k <= s; ++k) {
        BigInt d = witt_dim_big(m, k);
        num += BigInt(k) * d;
        den += BigInt(k) * BigInt(k) * d;
    }
    return Rational(num, den);
}

inline NikolayevskyResult nikolayevsky_free(std::size_t m, std::size_t s) {
    auto fn = free_nilpotent(m, s);
    const Rational lambda = nikolayevsky_free_factor(m, s);
    NikolayevskyResult r;
    Vec diag(fn->dim());
    std::size_t offset = 0;
    for (std::size_t k = 1; k <= s; ++k) {
        Rational ev = lambda * Rational(static_cast<long long>(k));
        r.eigenvalues.emplace_back(ev, fn->layer_dims()[k - 1]);
        r.eigenspaces.push_back(fn->layer(k));
        for (std::size_t i = 0; i < fn->layer_dims()[k - 1]; ++i) diag[offset + i] = ev;
        offset += fn->layer_dims()[k - 1];
    }
    r.endo = Matrix::diagonal(diag);
    return r;
}

// d_m(s) + 2 sum_{k <= [(s+1)/2]} k d_m(k) < m^s; defined for s >= 4.
inline bool estimate_check(std::size_t m, std::size_t s) {
    if (s < 4) throw std::invalid_argument("estimate_check: needs s >= 4");
    if (m < 2) throw std::invalid_argument("estimate_check: needs m >= 2");
    BigInt lhs = witt_dim_big(m, s);
    for (std::size_t k = 1; k <= (s + 1) / 2; ++k) lhs += 2 * BigInt(k) * witt_dim_big(m, k);
    return lhs < boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(s));
}

// Whether sum_{k=1}^s k d_m(k) (2k - n - 1) vanishes.
inline bool cotangent_eigen_equation(std::size_t m, std::size_t s, std::size_t n) {
    if (n < 1 || n > s) throw std::invalid_argument("cotangent_eigen_equation: need 1 <= n <= s");
    BigInt acc = 0;
    for (std::size_t k = 1; k <= s; ++k)
        acc += BigInt(k) * witt_dim_big(m, k) *
               (BigInt(2) * BigInt(k) - BigInt(n) - 1);
    return acc == 0;
}

enum class NicenessReason {
    hall_basis_nice,        // explicit certificate, re-verified
    w5_pair_obstruction,    // m = 2, s >= 5: two-generator image bound on W_5
    eigenspace_bound,       // m >= 3, s >= 3: dim W_3 exceeds the nice bound on W_1
};

struct NicenessVerdict {
    bool nice;
    NicenessReason reason;
    std::string detail;
};

// Nice for s <= 2 and for (2,3), (2,4), certified by the Hall basis itself;
// otherwise nonnice with the obstruction named. Obstruction values come from
// the Witt dimensions, so no algebra needs to be built for large (m, s).
inline NicenessVerdict niceness_verdict(std::size_t m, std::size_t s) {
    if (m < 2 || s < 1) throw std::invalid_argument("niceness_verdict: need m >= 2, s >= 1");
    if (s <= 2 || (m == 2 && s <= 4)) {
        auto fn = free_nilpotent(m, s);
        NiceCertificate cert{fn->algebra(), Matrix::identity(fn->dim())};
        if (auto w = check_nice_basis(cert))
            throw std::logic_error("niceness_verdict: Hall basis certificate failed");
        return {true, NicenessReason::hall_basis_nice, "Hall basis is a nice basis"};
    }
    if (m == 2) {
        // s >= 5: a nice basis would make W_1 span a copy of the free algebra,
        // but any two nice elements map W_5 (dim 6) onto at most 4 dimensions.
        return {false, NicenessReason::w5_pair_obstruction,
                "dim W_5 = " + std::to_string(witt_dim(2, 5)) +
                    ", image under a two-generator nice map is at most 4"};
    }
    // m >= 3, s >= 3: dim [[W_1,W_1],W_1] = d_m(3) > m(m^2+3m-4)/6
    BigInt w3 = witt_dim_big(m, 3);
    BigInt bound = BigInt(m) * (BigInt(m) * BigInt(m) + 3 * BigInt(m) - 4);
    if (bound % 6 != 0) throw std::logic_error("niceness_verdict: bound not integral");
    bound /= 6;
    if (!(w3 > bound)) throw std::logic_error("niceness_verdict: bound inequality fails");
    return {false, NicenessReason::eigenspace_bound,
            "dim W_3 = " + w3.str() + " > " + bound.str() + " = m(m^2+3m-4)/6"};
}

}  // namespace nila
