#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jjc/classify5.hpp"
#include "jjc/topform.hpp"
#include "support.hpp"

using namespace jjc;
using namespace jjc::testing;

namespace {

// Cyclic sum omega(x.y, z) + omega(y.z, x) + omega(z.x, y) on basis triples.
bool brute_closed(const Algebra& a, const Mat& w)
{
    const int n = a.dim();
    BilinearForm f{w, Symmetry::none};
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z) {
                Vec ex = unit(n, x), ey = unit(n, y), ez = unit(n, z);
                Rational s = f(table_product(a, ex, ey), ez) + f(table_product(a, ey, ez), ex) +
                             f(table_product(a, ez, ex), ey);
                if (sgn(s) != 0) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("form conventions")
{
    BilinearForm w = BilinearForm::skew(3, {{1, 2, 1}});
    CHECK(w(unit(3, 1), unit(3, 2)) == 1);
    CHECK(w(unit(3, 2), unit(3, 1)) == -1);
    BilinearForm u = wedge(LinearForm::dual(3, 1), LinearForm::dual(3, 2));
    CHECK(u == w);
    BilinearForm s = BilinearForm::symmetric(2, {{1, 2, 3}});
    CHECK(s.matrix(1, 0) == 3);
    CHECK_THROWS_AS(BilinearForm::skew(3, {{2, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BilinearForm::from_matrix(Mat{{0, 1}, {1, 0}}, Symmetry::skew), std::invalid_argument);
    CHECK(w.contract_left(unit(3, 1)).coeffs == Vec{0, 1, 0});
}

TEST_CASE("catalog structures")
{
    for (const auto& item : catalog_items()) {
        Report r = cosymplectic_report(item.algebra, item.alpha, item.omega);
        const bool closed = brute_closed(item.algebra, item.omega.matrix);
        CHECK(r.find("omega_closed")->passed == closed);
        const bool top = sgn(brute_top(item.alpha.coeffs, item.omega.matrix)) != 0;
        CHECK(r.find("nondegenerate")->passed == top);
        if (item.name == "B3") {
            // omega(e1.e1, e1) three times = 3 omega(e2, e1) = -3
            CHECK_FALSE(closed);
            CHECK_FALSE(r.passed());
            CHECK(r.find("alpha_closed")->passed);
            CHECK(failures(r) == 1);
        } else {
            CHECK(r.passed());
            CosymplecticStructure s = CosymplecticStructure::make(item.algebra, item.alpha, item.omega);
            CHECK(s.reeb() == unit(5, 5));
        }
    }
    CHECK_THROWS_AS(CosymplecticStructure::make(b3(), LinearForm::dual(3, 3), BilinearForm::skew(3, {{1, 2, 1}})),
                    ConditionError);
}

TEST_CASE("random forms on B3 are never cosymplectic")
{
    // ker alpha must be a 2-dim symplectic JJ-algebra; for every alpha and
    // omega with small entries the conditions fail.
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        LinearForm alpha{random_vec(rng, 3, 0.7)};
        BilinearForm omega{random_skew(rng, 3, 0.7), Symmetry::skew};
        CHECK_FALSE(is_cosymplectic(b3(), alpha, omega));
    }
}

TEST_CASE("symplectic forms on H4")
{
    CHECK(is_symplectic(h4(), h4_form()));
    CHECK(is_symplectic(h4(), h4_form(3)));
    BilinearForm printed = BilinearForm::skew(4, {{1, 2, 1}, {2, 3, 2}});
    Report r = symplectic_report(h4(), printed);
    CHECK_FALSE(r.find("nondegenerate")->passed);
    CHECK(sgn(laplace_det(printed.matrix)) == 0);
    CHECK_THROWS_AS(cosymplectic_report(h4(), LinearForm::dual(4, 4), h4_form()), std::invalid_argument);
}

TEST_CASE("Reeb vector of random structures")
{
    Rng rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        CosymplecticStructure s = random_cosymplectic(rng, 2 * uniform(rng, 1, 3) + 1);
        const Vec& xi = s.reeb();
        CHECK(s.alpha()(xi) == 1);
        for (int j = 1; j <= s.dim(); ++j) CHECK(sgn(s.omega()(xi, unit(s.dim(), j))) == 0);
        CHECK(reeb_report(s.algebra(), s.alpha(), s.omega(), xi).passed());
        auto solved = solve_reeb(s.alpha(), s.omega());
        REQUIRE(solved);
        CHECK(*solved == xi);
    }
}

TEST_CASE("psi matrix and omega_phi")
{
    Mat psi = psi_matrix(LinearForm::dual(3, 3), BilinearForm::skew(3, {{1, 2, 1}}));
    CHECK(psi == Mat{{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}});
    LinearMap phi(2, 2);
    phi(0, 1) = 1;
    BilinearForm t = omega_phi(BilinearForm::skew(2, {{1, 2, 1}}), phi);
    CHECK(t.symmetry == Symmetry::symmetric);
    CHECK(t.matrix.is_symmetric());
    // omega(phi e2, e2) twice, with phi e2 = e1
    CHECK(t.matrix(1, 1) == 2);
}

TEST_CASE("self-adjointness")
{
    CHECK(self_adjoint_wrt(h4_form(), H4AntiderivationFamily::matrix(2, -1)));
    CHECK_FALSE(self_adjoint_wrt(h4_form(), Mat{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
}

TEST_CASE("cosymplectic isomorphism report")
{
    Rng rng(33);
    CosymplecticStructure s = j51_structure();
    CHECK(cosymplectic_isomorphism_report(s, s, Mat::identity(5)).passed());
    Report printed = cosymplectic_isomorphism_report(j50_structure(), j52_structure(), printed_phi());
    CHECK_FALSE(printed.find("alpha_compatible")->passed);
    for (int trial = 0; trial < 10; ++trial) {
        Mat p = random_invertible(rng, 5);
        CosymplecticStructure moved = transport(s, p);
        CHECK(cosymplectic_isomorphism_report(moved, s, p).passed());
    }
}
