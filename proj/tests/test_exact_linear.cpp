#include <random>

#include "catch_amalgamated.hpp"
#include "helpers.hpp"
#include "nila/matrix.hpp"
#include "nila/poly.hpp"
#include "nila/rational.hpp"
#include "nila/subspace.hpp"

using namespace nila;
using test_helpers::random_matrix;
using test_helpers::random_vec;

TEST_CASE("rational arithmetic stays in lowest terms", "[exact_linear]") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(a.den() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(-3, 7) * Rational(7, 3)) == Rational(-1));
    CHECK((Rational(5, 2) / Rational(-1, 4)) == Rational(-10));
    CHECK(Rational(0, 5).den() == 1);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(-7).str() == "-7");
}

TEST_CASE("rref fixed points and rank-1 collapse", "[exact_linear]") {
    Matrix id = Matrix::identity(3);
    CHECK(id.rref() == id);

    Matrix m{{Rational(2), Rational(4)}, {Rational(1), Rational(2)}};
    Matrix expect{{Rational(1), Rational(2)}, {Rational(0), Rational(0)}};
    CHECK(m.rref() == expect);
    CHECK(m.rank() == 1);
}

TEST_CASE("rref preserves the row space (mutual solve oracle)", "[exact_linear]") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_matrix(rng, 5, 5);
        Matrix r = m.rref();
        // every row of r solvable from rows of m and vice versa
        Matrix mt = m.transpose(), rt = r.transpose();
        for (std::size_t i = 0; i < 5; ++i) {
            CHECK(mt.solve(r.row(i)).has_value());
            CHECK(rt.solve(m.row(i)).has_value());
        }
        CHECK(r.rref() == r);  // idempotence
    }
}

TEST_CASE("kernel and image satisfy rank-nullity", "[exact_linear]") {
    Subspace k = Subspace::kernel(Matrix(3, 3));  // zero map on Q^3
    CHECK(k.dim() == 3);
    CHECK(Subspace::image(Matrix::identity(4)).dim() == 4);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_matrix(rng, 4, 6);
        Subspace ker = Subspace::kernel(m);
        Subspace im = Subspace::image(m);
        CHECK(ker.dim() + im.dim() == 6);
        for (std::size_t i = 0; i < ker.dim(); ++i)
            CHECK(is_zero(m.apply(ker.basis_vector(i))));
    }
}

TEST_CASE("solve returns a particular solution or reports absence", "[exact_linear]") {
    std::mt19937 rng(7);
    Matrix m = random_matrix(rng, 4, 6);
    Vec x = random_vec(rng, 6);
    Vec b = m.apply(x);
    auto sol = m.solve(b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);

    Matrix zero(2, 2);
    CHECK_FALSE(zero.solve(Vec{Rational(1), Rational(0)}).has_value());
}

TEST_CASE("subspace intersection and sum obey the dimension identity", "[exact_linear]") {
    std::size_t n = 6;
    std::mt19937 rng(2024);
    Subspace e12 = Subspace::span({unit_vec(3, 0), unit_vec(3, 1)}, 3);
    Subspace e23 = Subspace::span({unit_vec(3, 1), unit_vec(3, 2)}, 3);
    CHECK(intersect(e12, e23) == Subspace::line(unit_vec(3, 1)));
    CHECK(intersect(e12, e12) == e12);

    for (int trial = 0; trial < 10; ++trial) {
        Subspace a = Subspace::span({random_vec(rng, n), random_vec(rng, n), random_vec(rng, n)}, n);
        Subspace b = Subspace::span({random_vec(rng, n), random_vec(rng, n)}, n);
        Subspace s = a + b;
        Subspace i = intersect(a, b);
        CHECK(a.dim() + b.dim() == s.dim() + i.dim());
        CHECK(s.contains(a));
        CHECK(s.contains(b));
        CHECK(a.contains(i));
        CHECK(b.contains(i));
    }
}

TEST_CASE("canonical representation makes equality a data comparison", "[exact_linear]") {
    std::mt19937 rng(5);
    Vec v1 = random_vec(rng, 4), v2 = random_vec(rng, 4);
    Subspace a = Subspace::span({v1, v2}, 4);
    Subspace b = Subspace::span({v1 + v2, Rational(3) * v1}, 4);
    CHECK(a == b);
}

TEST_CASE("eigenspaces of diagonal matrices", "[exact_linear]") {
    Matrix d = Matrix::diagonal(Vec{Rational(1), Rational(1), Rational(2)});
    CHECK(eigenspace(d, Rational(1)).dim() == 2);
    CHECK(eigenspace(d, Rational(2)).dim() == 1);
    CHECK(eigenspace(d, Rational(5)).dim() == 0);
}

TEST_CASE("semisimple part of a nilpotent block vanishes", "[exact_linear]") {
    Matrix j(3, 3);
    j(0, 1) = Rational(1);
    j(1, 2) = Rational(1);
    CHECK(semisimple_part(j).is_zero());
    CHECK(minimal_polynomial(j).degree() == 3);  // x^3
}

TEST_CASE("semisimple part commutes and leaves a nilpotent remainder", "[exact_linear]") {
    // companion-style mix of semisimple and nilpotent parts
    Matrix m{{Rational(1), Rational(1), Rational(0)},
             {Rational(0), Rational(1), Rational(0)},
             {Rational(0), Rational(0), Rational(2)}};
    Matrix s = semisimple_part(m);
    Matrix n = m - s;
    CHECK(minimal_polynomial(s).squarefree_part() == minimal_polynomial(s));
    CHECK((s * n) == (n * s));
    Matrix nn = n * n * n;
    CHECK(nn.is_zero());
    CHECK(s == Matrix::diagonal(Vec{Rational(1), Rational(1), Rational(2)}));
}

TEST_CASE("minimal polynomial of the 11-dim spectrum has five distinct roots", "[exact_linear]") {
    Vec d;
    for (int k : {1, 1, 2, 2, 3, 3, 3, 4, 4, 5, 5}) d.push_back(Rational(33, 119) * Rational(k));
    Matrix m = Matrix::diagonal(d);
    Poly mu = minimal_polynomial(m);
    CHECK(mu.degree() == 5);
    auto roots = rational_roots(mu);
    REQUIRE(roots.size() == 5);
    for (int k = 1; k <= 5; ++k)
        CHECK(std::count(roots.begin(), roots.end(), Rational(33 * k, 119)) == 1);
}

TEST_CASE("polynomial division, gcd and squarefree part", "[exact_linear]") {
    // (x-1)^2 (x+2)
    Poly p = Poly::x_minus(Rational(1)) * Poly::x_minus(Rational(1)) * Poly::x_minus(Rational(-2));
    Poly sf = p.squarefree_part();
    CHECK(sf.degree() == 2);
    CHECK(sf.eval(Rational(1)).is_zero());
    CHECK(sf.eval(Rational(-2)).is_zero());
    auto [q, r] = Poly::divmod(p, Poly::x_minus(Rational(1)));
    CHECK(r.is_zero());
    CHECK(q.degree() == 2);
}

TEST_CASE("matrix inverse round trip", "[exact_linear]") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix m = test_helpers::random_sparse_invertible(rng, 6);
        auto inv = m.inverse();
        REQUIRE(inv.has_value());
        CHECK((m * *inv) == Matrix::identity(6));
    }
}
