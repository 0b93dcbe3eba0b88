// Nice-basis certificates: each bracket [f_a, f_b] a multiple of one basis
// element, and for fixed (a, target) at most one partner b.
#pragma once

#include <optional>
#include <string>

#include "nila/lie_algebra.hpp"
#include "nila/matrix.hpp"

namespace nila {

struct NiceCertificate {
    LieAlgebra algebra;
    Matrix basis;  // rows = candidate nice basis in the defining coordinates
};

struct NiceWitness {
    enum class Kind { bracket_not_multiple, repeated_target } kind;
    std::size_t a, b;       // offending pair (0-based rows of the candidate basis)
    std::size_t b2;         // second partner for repeated_target
    std::size_t target;     // basis row hit twice (repeated_target)
    std::string describe() const {
        if (kind == Kind::bracket_not_multiple)
            return "[f" + std::to_string(a + 1) + ",f" + std::to_string(b + 1) +
                   "] is not a multiple of a single basis element";
        return "[f" + std::to_string(a + 1) + ",f" + std::to_string(b + 1) + "] and [f" +
               std::to_string(a + 1) + ",f" + std::to_string(b2 + 1) +
               "] both hit f" + std::to_string(target + 1);
    }
};

inline std::optional<NiceWitness> check_nice_basis(const NiceCertificate& cert) {
    const std::size_t n = cert.algebra.dim();
    if (cert.basis.rows() != n || cert.basis.cols() != n)
        throw std::invalid_argument("check_nice_basis: basis shape mismatch");
    LieAlgebra g = cert.algebra.change_basis(cert.basis);  // throws on singular basis
    // condition (a): single-element brackets
    std::vector<std::vector<std::size_t>> target(n, std::vector<std::size_t>());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Vec v = g.basis_bracket(a, b);
            std::size_t nonzero = 0, hit = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (!v[k].is_zero()) {
                    ++nonzero;
                    hit = k;
                }
            if (nonzero > 1)
                return NiceWitness{NiceWitness::Kind::bracket_not_multiple, a, b, 0, 0};
        }
    // condition (b): for fixed (a, k) at most one b with c_ab^k != 0
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t first = n;
            for (std::size_t b = 0; b < n; ++b) {
                if (b == a) continue;
                if (g.basis_bracket(a, b)[k].is_zero()) continue;
                if (first == n)
                    first = b;
                else
                    return NiceWitness{NiceWitness::Kind::repeated_target, a, first, b, k};
            }
        }
    return std::nullopt;
}

}  // namespace nila
