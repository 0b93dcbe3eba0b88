#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "nila/family.hpp"
#include "nila/format.hpp"

using namespace nila;

namespace {

AlgebraDocument load_doc(const std::string& name) {
    std::ifstream in(std::filesystem::path(NILA_DATA_DIR) / "catalog" / (name + ".alg"));
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

LieAlgebra load(const std::string& name) { return to_lie_algebra(load_doc(name)); }

MetricLieAlgebra load_metric(const std::string& name) {
    AlgebraDocument doc = load_doc(name);
    auto b = to_bilinear_form(doc);
    REQUIRE(b.has_value());
    return MetricLieAlgebra(to_lie_algebra(doc), *b);
}

// D = e^1 (x) e_4 - e^2 (x) e_3 on neutral R^4
Matrix rotation_derivation() {
    Matrix d(4, 4);
    d(3, 0) = Rational(1);
    d(2, 1) = Rational(-1);
    return d;
}

}  // namespace

TEST_CASE("single extension of neutral R^4 is the 5-dim catalog algebra", "[constructions]") {
    MetricLieAlgebra r4 = neutral_abelian(2);
    MetricLieAlgebra ext = single_extension(r4, rotation_derivation());
    MetricLieAlgebra expect = load_metric("ext5");
    CHECK(ext.algebra == expect.algebra);
    CHECK(ext.metric.gram() == expect.metric.gram());
    // defining brackets
    auto e = [&](std::size_t i) { return unit_vec(5, i - 1); };
    CHECK(ext.algebra.bracket(e(1), e(2)) == e(5));
    CHECK(ext.algebra.bracket(e(5), e(1)) == e(4));
    CHECK(ext.algebra.bracket(e(5), e(2)) == Rational(-1) * e(3));
}

TEST_CASE("double extension of neutral R^4 is the 6-dim catalog algebra", "[constructions]") {
    MetricLieAlgebra r4 = neutral_abelian(2);
    MetricLieAlgebra ext = double_extension(r4, rotation_derivation());
    MetricLieAlgebra expect = load_metric("ext6");
    CHECK(ext.algebra == expect.algebra);
    CHECK(ext.metric.gram() == expect.metric.gram());
}

TEST_CASE("double extension by zero is a sum with a 2-dim abelian factor", "[constructions]") {
    MetricLieAlgebra h = load_metric("h12");
    MetricLieAlgebra ext = double_extension(h, Matrix(12, 12));
    CHECK(ext.dim() == 14);
    // both adjoined vectors are central
    CHECK(ext.algebra.center().contains(unit_vec(14, 12)));
    CHECK(ext.algebra.center().contains(unit_vec(14, 13)));
    AbelianSplit split = split_abelian_factor(ext.algebra);
    CHECK(split.abelian.dim() == 1);  // z pairs with e; only one direction leaves g'
}

TEST_CASE("extension preconditions are enforced", "[constructions]") {
    MetricLieAlgebra r4 = neutral_abelian(2);
    Matrix rank4(4, 4);
    rank4(3, 0) = rank4(2, 1) = Rational(1);
    rank4(1, 2) = rank4(0, 3) = Rational(-1);
    REQUIRE(rank4.rank() == 4);
    CHECK_THROWS_AS(single_extension(r4, rank4), std::invalid_argument);

    Matrix notskew(4, 4);
    notskew(2, 0) = Rational(1);  // e1 -> e3 pairs with e1 itself
    CHECK_THROWS_AS(single_extension(r4, notskew), std::invalid_argument);
    CHECK_THROWS_AS(double_extension(r4, notskew), std::invalid_argument);
}

TEST_CASE("cotangent of an abelian algebra is abelian with the pairing metric",
          "[constructions]") {
    MetricLieAlgebra t = cotangent(LieAlgebra::abelian(3));
    CHECK(t.dim() == 6);
    CHECK(t.algebra.derived_subalgebra().is_zero());
    CHECK(t.metric.eval(unit_vec(6, 0), unit_vec(6, 3)) == Rational(1));
}

TEST_CASE("cotangent of the free two-step algebra", "[constructions]") {
    auto fn = free_nilpotent(2, 2);
    MetricLieAlgebra t = cotangent(fn->algebra());
    CHECK(t.dim() == 6);
    // center = W_2 + W_1^*
    Subspace expected = Subspace::span({unit_vec(6, 2), unit_vec(6, 3), unit_vec(6, 4)}, 6);
    CHECK(t.algebra.center() == expected);
    // the dual part is an abelian ideal
    Subspace dual = Subspace::span({unit_vec(6, 3), unit_vec(6, 4), unit_vec(6, 5)}, 6);
    CHECK(t.algebra.is_ideal(dual));
    CHECK(t.algebra.bracket_subspaces(dual, dual).is_zero());
}

TEST_CASE("cotangent derived algebra fills the annihilator complement", "[constructions]") {
    auto fn = free_nilpotent(2, 3);
    MetricLieAlgebra t = cotangent(fn->algebra());
    // derived = W_2 + W_3 + W_2^* + W_1^*: coordinates 2,3,4 and 7,5,6
    std::vector<Vec> gens;
    for (std::size_t c : {2u, 3u, 4u, 5u, 6u, 7u}) gens.push_back(unit_vec(10, c));
    CHECK(t.algebra.derived_subalgebra() == Subspace::span(gens, 10));
}

TEST_CASE("cotangent preserves the nilpotency step", "[constructions]") {
    for (auto [m, s] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}}) {
        auto fn = free_nilpotent(m, s);
        MetricLieAlgebra t = cotangent(fn->algebra());
        CHECK(t.algebra.nilpotency_step() == s);
    }
    MetricLieAlgebra tg11 = cotangent(load("g11"));
    CHECK(tg11.algebra.nilpotency_step() == load("g11").nilpotency_step());
}

TEST_CASE("cotangent gradings pass graded_check", "[constructions]") {
    auto fn = free_nilpotent(2, 2);
    MetricLieAlgebra t = cotangent(fn->algebra());
    GradedLieAlgebra graded = cotangent_graded(*fn, t);
    // degrees (1,2,3,4) on (W1, W2, W2*, W1*)
    std::vector<int> degs;
    for (auto& [d, s] : graded.layers) degs.push_back(d);
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 2, 3, 4});
    CHECK_FALSE(graded_check(graded).has_value());
}

TEST_CASE("central extensions adjoin central vectors and undo by quotient", "[constructions]") {
    LieAlgebra n9 = load("n9");
    // omega = 0 adds a plain abelian direction
    LieAlgebra triv = central_extension(n9, Matrix(9, 9));
    CHECK(triv == direct_sum(n9, LieAlgebra::abelian(1)));

    // Heisenberg from R^2 and the canonical symplectic cocycle
    Matrix sympl(2, 2);
    sympl(0, 1) = Rational(1);
    sympl(1, 0) = Rational(-1);
    LieAlgebra heis = central_extension(LieAlgebra::abelian(2), sympl);
    CHECK(heis.bracket(unit_vec(3, 0), unit_vec(3, 1)) == unit_vec(3, 2));

    // the 10-dim catalog algebra is the extension of n9 pairing e1 with e9
    Matrix omega(9, 9);
    omega(0, 8) = Rational(-1);
    omega(8, 0) = Rational(1);
    LieAlgebra nt = central_extension(n9, omega);
    CHECK(nt == load("nt10"));
    QuotientResult q = quotient(nt, Subspace::line(unit_vec(10, 9)));
    CHECK(q.algebra == n9);

    // a non-closed two-form is rejected: pair e1 with e3 in n9
    Matrix bad(9, 9);
    bad(0, 2) = Rational(1);
    bad(2, 0) = Rational(-1);
    CHECK_THROWS_AS(central_extension(n9, bad), std::invalid_argument);
}

TEST_CASE("the identity mirage of h in itself passes everything", "[constructions]") {
    MetricLieAlgebra h = load_metric("h12");
    MirageWitness w{h, h, Matrix::identity(12)};
    MirageReport rep = mirage_check(w);
    CHECK(rep.m1);
    CHECK(rep.m2);
    CHECK(rep.m3);
    CHECK(rep.m4);
    CHECK(rep.m5 == MirageM5::central);
}

TEST_CASE("family members in low dimension", "[constructions]") {
    MetricLieAlgebra h = load_metric("h12");
    LieAlgebra n9 = load("n9");
    LieAlgebra nt10 = load("nt10");

    FamilyResult g12 = family(12, h);
    CHECK(g12.algebra.dim() == 12);
    CHECK(g12.algebra.algebra == h.algebra);
    CHECK(g12.normal_form == n9);
    CHECK(g12.abelian_dim == 0);

    FamilyResult g13 = family(13, h);
    CHECK(g13.algebra.dim() == 13);
    CHECK(g13.normal_form == nt10);
    CHECK(g13.abelian_dim == 0);
    CHECK(g13.center.dim() == 3);  // z(g13) = z(g12)

    FamilyResult g14 = family(14, h);
    CHECK(g14.algebra.dim() == 14);
    CHECK(g14.normal_form == direct_sum(n9, LieAlgebra::abelian(1)));

    FamilyResult g15 = family(15, h);
    CHECK(g15.normal_form == direct_sum(nt10, LieAlgebra::abelian(1)));

    FamilyResult g16 = family(16, h);
    CHECK(g16.normal_form == direct_sum(n9, LieAlgebra::abelian(2)));

    FamilyResult g17 = family(17, h);
    CHECK(g17.normal_form == direct_sum(nt10, LieAlgebra::abelian(2)));

    for (const FamilyResult* f : {&g12, &g13, &g14, &g15, &g16, &g17}) {
        INFO("dim " << f->algebra.dim());
        // metric validity is enforced by construction; the center must sit
        // inside the derived algebra and the mirage conditions must hold
        CHECK(f->algebra.algebra.derived_subalgebra().contains(f->center));
        MirageReport rep = mirage_check(f->mirage);
        CHECK(rep.m1);
        CHECK(rep.m2);
        CHECK(rep.m3);
        CHECK(rep.m4);
        CHECK(rep.m5 == MirageM5::central);
    }
}

TEST_CASE("family rejects k below twelve", "[constructions]") {
    MetricLieAlgebra h = load_metric("h12");
    CHECK_THROWS_AS(family(11, h), std::invalid_argument);
}
