#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "nila/derivations.hpp"
#include "nila/format.hpp"

using namespace nila;

namespace {

LieAlgebra load(const std::string& name) {
    std::ifstream in(std::filesystem::path(NILA_DATA_DIR) / "catalog" / (name + ".alg"));
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return to_lie_algebra(parse_algebra(ss.str()));
}

LieAlgebra heisenberg3() { return LieAlgebra::Builder(3).add(0, 1, 2, Rational(1)).build(); }

Matrix scaled_diag(const Rational& factor, std::initializer_list<int> entries) {
    Vec d;
    for (int k : entries) d.push_back(factor * Rational(k));
    return Matrix::diagonal(d);
}

}  // namespace

TEST_CASE("derivation space of abelian and Heisenberg algebras", "[derivations]") {
    CHECK(derivation_space(LieAlgebra::abelian(3)).size() == 9);
    auto der = derivation_space(heisenberg3());
    CHECK(der.size() == 6);  // brute-force Leibniz on 3x3 unknowns
    for (const Matrix& d : der) CHECK(is_derivation(heisenberg3(), d));
}

TEST_CASE("inner derivations lie in the computed derivation span", "[derivations]") {
    LieAlgebra h = load("h12");
    auto der = derivation_space(h);
    const std::size_t n = 12;
    Matrix sys(n * n, der.size());
    for (std::size_t b = 0; b < der.size(); ++b)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) sys(p * n + q, b) = der[b](p, q);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix ad = h.ad_basis(i);
        Vec target(n * n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) target[p * n + q] = ad(p, q);
        CHECK(sys.solve(target).has_value());
    }
}

TEST_CASE("is_inner separates inner from outer derivations", "[derivations]") {
    LieAlgebra g = load("g11");
    CHECK(is_inner(g, g.ad_basis(0)));
    CHECK(is_inner(g, Matrix(11, 11)));

    // the rank-two map e1 -> e12, e11 -> e5 on h12 is a noninner derivation
    LieAlgebra h = load("h12");
    Matrix f(12, 12);
    f(11, 0) = Rational(1);
    f(4, 10) = Rational(1);
    REQUIRE(is_derivation(h, f));
    CHECK_FALSE(is_inner(h, f));

    CHECK_THROWS(is_inner(h, Matrix::identity(12)));  // not a derivation
}

TEST_CASE("nikolayevsky derivation of the 11-dim algebra", "[derivations]") {
    LieAlgebra g = load("g11");
    NikolayevskyResult r = nikolayevsky(g);
    CHECK(r.endo == scaled_diag(Rational(33, 119), {1, 1, 2, 2, 3, 3, 3, 4, 4, 5, 5}));
    REQUIRE(r.eigenvalues.size() == 5);
    std::vector<std::size_t> mults;
    for (auto& [v, m] : r.eigenvalues) mults.push_back(m);
    CHECK(mults == std::vector<std::size_t>{2, 2, 3, 2, 2});
    // eigenspaces are the expected coordinate spans
    CHECK(r.eigenspaces[0] == Subspace::span({unit_vec(11, 0), unit_vec(11, 1)}, 11));
    CHECK(r.eigenspaces[1] == Subspace::span({unit_vec(11, 2), unit_vec(11, 3)}, 11));
    CHECK(r.eigenspaces[2] ==
          Subspace::span({unit_vec(11, 4), unit_vec(11, 5), unit_vec(11, 6)}, 11));
    CHECK(r.eigenspaces[3] == Subspace::span({unit_vec(11, 7), unit_vec(11, 8)}, 11));
    CHECK(r.eigenspaces[4] == Subspace::span({unit_vec(11, 9), unit_vec(11, 10)}, 11));
}

TEST_CASE("zero nikolayevsky derivations", "[derivations]") {
    for (const char* name : {"h12", "n9", "nt10"}) {
        INFO(name);
        NikolayevskyResult r = nikolayevsky(load(name));
        CHECK(r.endo.is_zero());
    }
}

TEST_CASE("nikolayevsky derivation of the nice 9-dim algebras", "[derivations]") {
    Matrix expect = scaled_diag(Rational(6, 29), {1, 2, 3, 3, 4, 5, 5, 6, 7});
    CHECK(nikolayevsky(load("x18a")).endo == expect);
    CHECK(nikolayevsky(load("x18b")).endo == expect);
}

TEST_CASE("trace identity characterizes the pre-Einstein derivation", "[derivations]") {
    LieAlgebra n = load("n9");
    // Nik(n9) = 0 forces Tr(D) = 0 for every derivation
    CHECK(trace_identity_check(n, Matrix(9, 9)));
    for (const Matrix& d : derivation_space(n)) CHECK(d.trace().is_zero());

    LieAlgebra g = load("g11");
    CHECK(trace_identity_check(g, scaled_diag(Rational(33, 119), {1, 1, 2, 2, 3, 3, 3, 4, 4, 5, 5})));
    CHECK_FALSE(trace_identity_check(g, Matrix(11, 11)));
    CHECK_THROWS(trace_identity_check(g, Matrix::identity(11)));  // identity is not a derivation
}

TEST_CASE("eigenspaces of the nikolayevsky derivation are bracket-graded", "[derivations]") {
    LieAlgebra g = load("g11");
    NikolayevskyResult r = nikolayevsky(g);
    for (std::size_t a = 0; a < r.eigenspaces.size(); ++a)
        for (std::size_t b = 0; b < r.eigenspaces.size(); ++b) {
            Rational sum = r.eigenvalues[a].first + r.eigenvalues[b].first;
            Subspace target(11);
            for (std::size_t c = 0; c < r.eigenvalues.size(); ++c)
                if (r.eigenvalues[c].first == sum) target = r.eigenspaces[c];
            CHECK(target.contains(g.bracket_subspaces(r.eigenspaces[a], r.eigenspaces[b])));
        }
}
