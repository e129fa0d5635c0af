#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace jjc;
using namespace jjc::testing;

namespace {

// Linear constraints on the row-major entries of D for D(x.y) = s (D x . y + x . D y).
std::size_t solution_dim(const Algebra& a, int s)
{
    const int n = a.dim();
    std::vector<Vec> rows;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                Vec row = zero_vec(static_cast<std::size_t>(n) * n);
                // k-th coordinate of D(e_i e_j) - s (D e_i . e_j + e_i . D e_j)
                for (int m = 1; m <= n; ++m) row[(k - 1) * n + (m - 1)] += a.coeff(i, j, m);
                for (int m = 1; m <= n; ++m) {
                    row[(m - 1) * n + (i - 1)] -= s * a.coeff(m, j, k);
                    row[(m - 1) * n + (j - 1)] -= s * a.coeff(i, m, k);
                }
                rows.push_back(row);
            }
    return static_cast<std::size_t>(n) * n - rank(Mat::from_rows(static_cast<std::size_t>(n) * n, rows));
}

bool brute_anti(const Algebra& a, const LinearMap& d, int s)
{
    const int n = a.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Vec lhs = d * table_product(a, unit(n, i), unit(n, j));
            Vec rhs = add(table_product(a, d.col(i - 1), unit(n, j)), table_product(a, unit(n, i), d.col(j - 1)));
            if (lhs != scaled(s, rhs)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("anti-derivation and derivation spaces")
{
    for (const auto& item : catalog_items()) {
        std::vector<LinearMap> ad = ader_space(item.algebra);
        std::vector<LinearMap> de = der_space(item.algebra);
        CHECK(ad.size() == solution_dim(item.algebra, -1));
        CHECK(de.size() == solution_dim(item.algebra, 1));
        for (const auto& d : ad) {
            CHECK(is_anti_derivation(item.algebra, d));
            CHECK(brute_anti(item.algebra, d, -1));
        }
        for (const auto& d : de) {
            CHECK(is_derivation(item.algebra, d));
            CHECK(brute_anti(item.algebra, d, 1));
        }
    }
    CHECK(ader_space(h4()).size() == solution_dim(h4(), -1));
    CHECK(ader_space(h4()).size() == 7);
    CHECK(ader_space(Algebra::trivial(3)).size() == 9);
}

TEST_CASE("flatten is row-major and inverts unflatten")
{
    Mat m{{1, 2}, {3, 4}};
    CHECK(flatten(m) == Vec{1, 2, 3, 4});
    CHECK(unflatten(2, flatten(m)) == m);
}

TEST_CASE("left multiplication")
{
    CHECK(left_mult(h4(), unit(4, 1)).col(0) == unit(4, 2));
    CHECK(left_mult(h4(), unit(4, 1)).col(2) == unit(4, 4));
    CHECK(left_mult(h4(), unit(4, 2)).is_zero());
}

TEST_CASE("admissible pairs on H4")
{
    LinearMap d = H4AntiderivationFamily::matrix(1, 1);
    CHECK(check_admissible_pair(h4(), {d, zero_vec(4)}).passed());
    CHECK(check_admissible_pair(h4(), {d, unit(4, 4)}).passed());

    Report r = check_admissible_pair(h4(), {d, unit(4, 2)});
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.find("a_in_kernel")->passed);

    // a = e1 lies in ker D for D = 0 but L_{e1} != 0
    Report s = check_admissible_pair(h4(), {LinearMap(4, 4), unit(4, 1)});
    CHECK(s.find("a_in_kernel")->passed);
    CHECK_FALSE(s.find("square_relation")->passed);

    Report t = check_admissible_pair(h4(), {Mat::identity(4), zero_vec(4)});
    CHECK_FALSE(t.find("anti_derivation")->passed);
}

TEST_CASE("extended pair conditions")
{
    const Algebra a = Algebra::trivial(2);
    const BilinearForm theta = BilinearForm::symmetric(2, {{1, 1, 1}});
    LinearMap phi(2, 2);
    phi(1, 0) = 1;  // e1 -> e2
    LinearForm lambda = LinearForm::zero(2);
    Report r = check_extended_pair(a, theta, phi, lambda, zero_vec(2));
    CHECK(r.passed());
    Report bad = check_extended_pair(a, theta, phi, LinearForm::zero(2), unit(2, 1));
    CHECK_FALSE(bad.find("theta_a")->passed);
    CHECK_THROWS_AS(check_extended_pair(a, BilinearForm::skew(2, {{1, 2, 1}}), phi, lambda, zero_vec(2)),
                    std::invalid_argument);
}
