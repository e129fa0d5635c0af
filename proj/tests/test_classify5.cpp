#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jjc/classify5.hpp"
#include "support.hpp"

using namespace jjc;
using namespace jjc::testing;

TEST_CASE("self-adjoint anti-derivations of H4")
{
    H4AntiderivationFamily fam = h4_antiderivation_family();
    CHECK_MESSAGE(fam.report.passed(), fam.report.summary());
    CHECK(fam.ader_basis.size() == 7);
    CHECK(fam.self_adjoint_basis.size() == 3);
    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const Rational a21 = small(rng), a31 = small(rng), a44 = small(rng);
        LinearMap d = fam.member(a21, a31, a44);
        CHECK(is_anti_derivation(h4(), d));
        CHECK(self_adjoint_wrt(h4_form(), d));
        CHECK(d(0, 0) == a44);
        CHECK(d(1, 1) == -2 * a44);
        CHECK(d(2, 2) == -2 * a44);
        CHECK((d * d).is_zero() == (sgn(a44) == 0));
    }
    CHECK(H4AntiderivationFamily::matrix(0, 1) == Mat{{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, -2, 0, 0}});
}

TEST_CASE("normalization of the H4 family")
{
    Normalization n1 = normalize_case(5, 2);
    CHECK(n1.name == "J5,1");
    CHECK(n1.scale == Rational(1, 2));
    CHECK(n1.t == Mat{{1, 0, 0, 0}, {0, 1, Rational(-5, 2), 0}, {0, 0, Rational(1, 2), 0}, {0, 0, 0, Rational(1, 2)}});
    CHECK(n1.report.passed());
    CHECK(cosymplectic_isomorphism_report(n1.source, j51_structure(), n1.witness).passed());
    CHECK(n1.printed_claims.find("printed_scale_pullback")->passed);
    CHECK_FALSE(n1.printed_claims.find("printed_scale_pushforward")->passed);

    Normalization n2 = normalize_case(3, 0);
    CHECK(n2.name == "J5,2");
    CHECK(n2.scale == Rational(1, 9));
    CHECK(n2.report.passed());
    CHECK_FALSE(n2.printed_claims.passed());

    Normalization n3 = normalize_case(0, 0);
    CHECK(n3.name == "J5,3");
    CHECK(n3.report.passed());
    CHECK(n3.source.algebra() == j53());
}

TEST_CASE("trivial base")
{
    TrivialBaseCensus c = trivial_base_census();
    REQUIRE(c.branches.size() == 3);
    CHECK(c.passed());
    CHECK(c.branches[0].outcome == "trivial");
    CHECK(c.branches[1].outcome == "degenerate");
    CHECK(c.branches[2].outcome == "J5,0");
    CHECK(c.branches[1].solution_basis.size() == 3);
    CHECK(c.branches[2].solution_basis.size() == 2);
    CHECK(c.printed_claims.find("printed_t_commutes")->passed);
    CHECK_FALSE(c.printed_claims.find("printed_t_pullback")->passed);
    // the printed T pulls e14 + e23 back to its negative
    Mat t{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    Mat w0 = BilinearForm::skew(4, {{1, 4, 1}, {2, 3, 1}}).matrix;
    CHECK(t.transpose() * w0 * t == Rational(-1) * w0);
}

TEST_CASE("distinction")
{
    Distinction d = pairwise_distinction();
    CHECK(d.pairwise_distinct);
    REQUIRE(d.fingerprints.size() == 3);
    CHECK(d.fingerprints[0].second.derived_dim == brute_derived_dim(j51()));
    CHECK(d.fingerprints[1].second.center_dim == brute_center_dim(j52()));
}

TEST_CASE("graded isomorphism search")
{
    const std::vector<Rational> entries = {0, Rational(1, 2), Rational(-1, 2), 1, -1, 2, -2};
    auto w = graded_isomorphism_search(j52(), j50(), entries);
    REQUIRE(w);
    CHECK(is_algebra_isomorphism({j52(), j50(), *w}));
    CHECK_FALSE(graded_isomorphism_search(j52(), j53(), entries));
    CHECK_THROWS_AS(graded_isomorphism_search(j51(), j51(), entries), std::invalid_argument);
    auto self = graded_isomorphism_search(j50(), j50(), {0, 1});
    REQUIRE(self);
    CHECK(is_algebra_isomorphism({j50(), j50(), *self}));
}

TEST_CASE("J5,0 and J5,2")
{
    Investigation inv = investigate_J50_J52();
    CHECK_MESSAGE(inv.summary.passed(), inv.summary.summary());
    CHECK(inv.alpha_of_printed_e1 == Rational(-1, 2));
    CHECK_FALSE(inv.printed_forward.find("algebra_morphism")->passed);
    CHECK_FALSE(inv.printed_backward.find("algebra_morphism")->passed);
    CHECK(is_algebra_isomorphism({j52(), j50(), corrected_phi()}));
    CHECK(inv.kernel_j50_abelian);
    CHECK_FALSE(inv.kernel_j52_abelian);
    CHECK_FALSE(inv.strict_isomorphism_possible);
    CHECK(inv.example_form_degenerate);
    CHECK(inv.transposed_reading.passed());
}

TEST_CASE("full census")
{
    Census c = full_census();
    CHECK_MESSAGE(c.report.passed(), c.report.summary());
    CHECK(c.grid.size() == 25);
    for (const auto& g : c.grid) {
        CHECK(g.verified);
        const char* expected = sgn(g.a31) != 0 ? "J5,1" : sgn(g.a21) != 0 ? "J5,2" : "J5,3";
        CHECK(g.name == expected);
    }
    CHECK(c.grid.front().a21 == -2);
    CHECK(c.grid.front().a31 == -2);
    for (const auto& e : c.catalog) CHECK(e.structure.reeb() == unit(5, 5));
}
