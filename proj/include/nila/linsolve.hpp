// Incremental sparse row reduction for large homogeneous systems.
#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "nila/matrix.hpp"

namespace nila {

// Rows are inserted one at a time and reduced against the current pivots.
// Intended for systems with many sparse equations and moderately many
// unknowns (derivation equations, cocycle conditions).
class SparseSolver {
public:
    using Entry = std::pair<std::size_t, Rational>;  // (column, value), sorted by column
    using Row = std::vector<Entry>;

    explicit SparseSolver(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }

    void add_row(Row row) {
        while (!row.empty()) {
            std::size_t lead = row.front().first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                normalize(row);
                pivots_.emplace(lead, std::move(row));
                return;
            }
            axpy(row, -row.front().second, it->second);
        }
    }

    // Sparse row combination: r += c * p; assumes both sorted by column.
    static void axpy(Row& r, const Rational& c, const Row& p) {
        Row out;
        out.reserve(r.size() + p.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() || j < p.size()) {
            if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                out.push_back(r[i++]);
            } else if (i == r.size() || p[j].first < r[i].first) {
                Rational v = c * p[j].second;
                if (!v.is_zero()) out.emplace_back(p[j].first, std::move(v));
                ++j;
            } else {
                Rational v = r[i].second + c * p[j].second;
                if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        r = std::move(out);
    }

    // Back-eliminate pivot columns from all other pivot rows (full RREF).
    void finalize() {
        if (finalized_) return;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const std::size_t col = it->first;
            for (auto& [c, row] : pivots_) {
                if (c >= col) break;
                auto pos = find_col(row, col);
                if (pos < row.size()) {
                    Rational f = -row[pos].second;
                    axpy(row, f, it->second);
                }
            }
        }
        finalized_ = true;
    }

    // Basis of the solution space of the homogeneous system.
    std::vector<Vec> kernel_basis() {
        finalize();
        std::vector<Vec> basis;
        std::vector<bool> is_pivot(cols_, false);
        for (const auto& [c, row] : pivots_) is_pivot[c] = true;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            Vec v(cols_);
            v[c] = Rational(1);
            for (const auto& [pc, row] : pivots_) {
                auto pos = find_col(row, c);
                if (pos < row.size()) v[pc] = -row[pos].second;
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    static std::size_t find_col(const Row& row, std::size_t col) {
        std::size_t lo = 0, hi = row.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (row[mid].first < col)
                lo = mid + 1;
            else
                hi = mid;
        }
        return (lo < row.size() && row[lo].first == col) ? lo : row.size();
    }

    static void normalize(Row& row) {
        Rational inv = row.front().second.inv();
        if (inv.is_one()) return;
        for (auto& [c, v] : row) v *= inv;
    }

    std::size_t cols_;
    std::map<std::size_t, Row> pivots_;  // keyed by pivot column
    bool finalized_ = false;
};

}  // namespace nila
