#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jjc/topform.hpp"
#include "support.hpp"

using namespace jjc;
using namespace jjc::testing;

TEST_CASE("rational text form")
{
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(parse_rational("+5")) == "5");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK(to_string(make_rational(2, -6)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("determinant agrees with Laplace expansion")
{
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 0, 6));
        Mat a = random_matrix(rng, n, n, 0.6);
        CHECK(determinant(a) == laplace_det(a));
    }
    CHECK(determinant(Mat{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("skew determinant is the square of the Pfaffian")
{
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = static_cast<std::size_t>(2 * uniform(rng, 1, 4));
        Mat a = random_skew(rng, n, 0.6);
        const Rational pf = pfaffian(a);
        CHECK(determinant(a) == pf * pf);
    }
}

TEST_CASE("inverse and rank")
{
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 6));
        Mat a = random_invertible(rng, n);
        auto inv = inverse(a);
        REQUIRE(inv);
        CHECK(a * *inv == Mat::identity(n));
        CHECK(*inv * a == Mat::identity(n));
        CHECK(rank(a) == n);
    }
    CHECK_FALSE(inverse(Mat{{1, 2}, {2, 4}}));
    CHECK(rank(Mat{{1, 2}, {2, 4}}) == 1);
    CHECK(inverse(Mat(0, 0)).has_value());
}

TEST_CASE("solve_linear reproduces the right-hand side")
{
    Rng rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 6));
        const std::size_t c = static_cast<std::size_t>(uniform(rng, 1, 6));
        Mat a = random_matrix(rng, r, c);
        Vec b = a * random_vec(rng, c);
        auto x = solve_linear(a, b);
        REQUIRE(x);
        CHECK(a * *x == b);
    }
    CHECK_FALSE(solve_linear(Mat{{1, 1}, {1, 1}}, {1, 2}));
}

TEST_CASE("kernel basis is independent, annihilated and of the right size")
{
    Rng rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 6));
        const std::size_t c = static_cast<std::size_t>(uniform(rng, 1, 7));
        Mat a = random_matrix(rng, r, c, 0.4);
        std::vector<Vec> ker = kernel_basis(a);
        CHECK(ker.size() == c - rank(a));
        for (const Vec& v : ker) CHECK(is_zero(a * v));
        if (!ker.empty()) CHECK(rank(Mat::from_columns(c, ker)) == ker.size());
    }
}

TEST_CASE("rref pivots and fixed pivot rule")
{
    Echelon e = rref(Mat{{0, 2, 4}, {1, 1, 1}, {2, 2, 2}});
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.reduced.row(0) == Vec{1, 0, -1});
    CHECK(e.reduced.row(1) == Vec{0, 1, 2});
    CHECK(is_zero(e.reduced.row(2)));
}

TEST_CASE("span basis and coordinates")
{
    std::vector<Vec> vs = {{1, 1, 0}, {2, 2, 0}, {0, 0, 1}};
    CHECK(span_basis(3, vs).size() == 2);
    Mat basis = Mat::from_columns(3, {Vec{1, 1, 0}, Vec{0, 0, 1}});
    auto c = coordinates(basis, {3, 3, -1});
    REQUIRE(c);
    CHECK(*c == Vec{3, -1});
    CHECK_FALSE(coordinates(basis, {1, 0, 0}));
}

TEST_CASE("alternating sum matches a brute-force permutation sum")
{
    Rng rng(16);
    for (int n : {1, 3, 5, 7}) {
        for (int trial = 0; trial < 10; ++trial) {
            Vec alpha = random_vec(rng, n, 0.6);
            Mat omega = random_skew(rng, n, 0.6);
            CHECK(alternating_sum_top(alpha, omega) == brute_top(alpha, omega));
        }
    }
    CHECK(alternating_sum_top(unit(5, 5), omega5().matrix) == brute_top(unit(5, 5), omega5().matrix));
    CHECK_THROWS_AS(alternating_sum_top(zero_vec(4), Mat(4, 4)), std::invalid_argument);
    CHECK_THROWS_AS(alternating_sum_top(zero_vec(13), Mat(13, 13)), std::invalid_argument);
}

TEST_CASE("alternating sum is nonzero exactly when the Psi matrix is invertible")
{
    Rng rng(17);
    for (int n : {3, 5, 7}) {
        for (int trial = 0; trial < 60; ++trial) {
            Vec alpha = random_vec(rng, n, coin(rng) ? 0.3 : 0.8);
            Mat omega = random_skew(rng, n, coin(rng) ? 0.3 : 0.8);
            const bool top = sgn(alternating_sum_top(alpha, omega)) != 0;
            const bool psi = sgn(determinant(psi_matrix(LinearForm{alpha}, BilinearForm{omega, Symmetry::skew}))) != 0;
            CHECK(top == psi);
        }
    }
}
