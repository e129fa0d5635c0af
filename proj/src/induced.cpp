#include "jjc/induced.hpp"

#include "jjc/operators.hpp"

#include <string>

namespace jjc {

namespace {

// Product p with  M^T p(i, j) = rhs(i, j) where rhs_k = F(e_i, e_j . e_k).
Algebra solve_product(const Algebra& a, const Mat& form, const char* what)
{
    const int n = a.dim();
    Mat mt = form.transpose();
    Algebra out(n, false);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Vec rhs = zero_vec(n);
            for (int k = 1; k <= n; ++k)
                for (int m = 1; m <= n; ++m) {
                    const Rational& c = a.coeff(j, k, m);
                    if (sgn(c) != 0) rhs[k - 1] += c * form(i - 1, m - 1);
                }
            auto x = solve_linear(mt, rhs);
            if (!x) throw InternalError(std::string(what) + ": defining system inconsistent");
            out.set_product(i, j, *x);
        }
    return out;
}

std::string pair_label(int i, int j) { return "(" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

}  // namespace

Algebra odot_product(const Algebra& a, const BilinearForm& omega)
{
    Report r = symplectic_report(a, omega);
    if (!r.passed()) throw ConditionError(r);
    return solve_product(a, omega.matrix, "odot_product");
}

Algebra star_product(const CosymplecticStructure& s)
{
    return solve_product(s.algebra(), psi_matrix(s.alpha(), s.omega()), "star_product");
}

Report star_relations_report(const CosymplecticStructure& s)
{
    const Algebra& a = s.algebra();
    const int n = a.dim();
    const Vec& xi = s.reeb();
    const Algebra star = star_product(s);
    const Mat basis = kernel_matrix(s.alpha());
    const int m = static_cast<int>(basis.cols());

    Report r;
    std::string where;
    for (int i = 0; i < m && where.empty(); ++i)
        for (int j = 1; j <= n && where.empty(); ++j)
            if (sgn(s.alpha()(multiply(a, basis.col(i), unit(n, j)))) != 0)
                where = "h-basis vector " + std::to_string(i + 1) + " times e" + std::to_string(j);
    r.add("kernel_ideal", where.empty(), where);
    if (!where.empty()) return r;

    const Algebra h = restrict_to_subalgebra(a, basis);
    const BilinearForm omega_h = restrict_form(s.omega(), basis);
    Report hs = symplectic_report(h, omega_h);
    r.add("kernel_symplectic", hs.passed(), hs.summary());
    if (!hs.passed()) return r;

    const Algebra odot = odot_product(h, omega_h);
    std::string pr1, alpha_star;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            Vec x = basis.col(i - 1);
            Vec y = basis.col(j - 1);
            Vec lhs = multiply(star, x, y);
            Rational corr = s.omega()(x, multiply(a, y, xi));
            Vec rhs = add(basis * odot.product(i, j), scaled(corr, xi));
            if (pr1.empty() && lhs != rhs) pr1 = "h-basis pair " + pair_label(i, j);
            if (alpha_star.empty() && s.alpha()(lhs) != corr) alpha_star = "h-basis pair " + pair_label(i, j);
        }
    r.add("pr1", pr1.empty(), pr1);
    r.add("alpha_of_star", alpha_star.empty(), alpha_star);

    std::string right, left;
    for (int i = 1; i <= n; ++i) {
        Vec x = unit(n, i);
        if (right.empty() && multiply(star, x, xi) != multiply(a, x, xi)) right = "e" + std::to_string(i);
        if (left.empty() && !is_zero(multiply(star, xi, x))) left = "e" + std::to_string(i);
    }
    r.add("pr2_right", right.empty(), "x * xi != x . xi at " + right);
    r.add("pr2_left", left.empty(), "xi * x != 0 at " + left);
    r.add("right_skew", is_right_skew(star), "star product is not right-skew-symmetric");

    // L_xi maps h into h (h is an ideal); express it in the h basis
    Mat dh(m, m);
    for (int j = 0; j < m; ++j) {
        auto c = coordinates(basis, multiply(a, xi, basis.col(j)));
        if (!c) throw InternalError("L_xi does not preserve ker alpha");
        dh.set_col(j, *c);
    }
    r.add("xi_antiderivation", is_anti_derivation(odot, dh), "L_xi is not an anti-derivation of (h, odot)");
    return r;
}

}  // namespace jjc
