#include "jjc/operators.hpp"

#include <stdexcept>
#include <string>

namespace jjc {

namespace {

void require_square(const Algebra& a, const LinearMap& d, const char* what)
{
    const auto n = static_cast<std::size_t>(a.dim());
    if (d.rows() != n || d.cols() != n)
        throw std::invalid_argument(std::string(what) + ": map must be " + std::to_string(n) + "x" +
                                    std::to_string(n));
}

// sign = +1 checks derivations, -1 anti-derivations
bool leibniz_holds(const Algebra& a, const LinearMap& d, int sign)
{
    require_square(a, d, "derivation check");
    const int n = a.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Vec lhs = d * a.product(i, j);
            Vec rhs = add(multiply(a, d.col(i - 1), unit(n, j)), multiply(a, unit(n, i), d.col(j - 1)));
            if (sign < 0) rhs = scaled(-1, rhs);
            if (lhs != rhs) return false;
        }
    return true;
}

/*
 * Linear system in the n^2 unknowns D(r, c) (row-major index r*n + c):
 * for each basis pair (i, j) and output coordinate k,
 *   sum_l c_ijl D(k, l) - sign * (sum_l D(l, i) c_ljk + sum_l D(l, j) c_ilk) = 0.
 */
std::vector<LinearMap> leibniz_space(const Algebra& a, int sign)
{
    const int n = a.dim();
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    Mat sys(nn * n, nn);
    std::size_t row = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k, ++row) {
                for (int l = 1; l <= n; ++l) {
                    sys(row, (k - 1) * n + (l - 1)) += a.coeff(i, j, l);
                    if (sign > 0) {
                        sys(row, (l - 1) * n + (i - 1)) -= a.coeff(l, j, k);
                        sys(row, (l - 1) * n + (j - 1)) -= a.coeff(i, l, k);
                    } else {
                        sys(row, (l - 1) * n + (i - 1)) += a.coeff(l, j, k);
                        sys(row, (l - 1) * n + (j - 1)) += a.coeff(i, l, k);
                    }
                }
            }
    std::vector<LinearMap> out;
    for (const Vec& v : kernel_basis(sys)) out.push_back(unflatten(n, v));
    return out;
}

}  // namespace

LinearMap left_mult(const Algebra& a, const Vec& x) { return left_mult_matrix(a, x); }

bool is_derivation(const Algebra& a, const LinearMap& d) { return leibniz_holds(a, d, +1); }

bool is_anti_derivation(const Algebra& a, const LinearMap& d) { return leibniz_holds(a, d, -1); }

std::vector<LinearMap> ader_space(const Algebra& a) { return leibniz_space(a, -1); }

std::vector<LinearMap> der_space(const Algebra& a) { return leibniz_space(a, +1); }

Vec flatten(const LinearMap& m)
{
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

LinearMap unflatten(int n, const Vec& v)
{
    if (v.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("unflatten: length is not n^2");
    LinearMap m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = v[static_cast<std::size_t>(r) * n + c];
    return m;
}

Report check_admissible_pair(const Algebra& alg, const AdmissiblePair& p)
{
    require_square(alg, p.phi, "admissible pair");
    if (p.a.size() != static_cast<std::size_t>(alg.dim()))
        throw std::invalid_argument("admissible pair: vector a has the wrong length");
    Report r;
    r.add("anti_derivation", is_anti_derivation(alg, p.phi), "phi is not an anti-derivation");
    r.add("a_in_kernel", is_zero(p.phi * p.a), "phi(a) != 0");
    Mat rhs = Rational(-1, 2) * left_mult(alg, p.a);
    r.add("square_relation", p.phi * p.phi == rhs, "phi^2 != -1/2 L_a");
    return r;
}

Report check_extended_pair(const Algebra& alg, const BilinearForm& theta, const LinearMap& phi,
                           const LinearForm& lambda, const Vec& a)
{
    if (theta.symmetry != Symmetry::symmetric)
        throw std::invalid_argument("check_extended_pair: theta must be symmetric");
    const int n = alg.dim();
    if (theta.dim() != n || lambda.dim() != n)
        throw std::invalid_argument("check_extended_pair: form dimension mismatch");
    require_square(alg, phi, "check_extended_pair");

    Report r;
    r.add("lambda_a", sgn(lambda(a)) == 0, "lambda(a) = " + to_string(lambda(a)));

    std::string where;
    for (int i = 1; i <= n && where.empty(); ++i)
        for (int j = 1; j <= n && where.empty(); ++j) {
            Rational lhs = lambda(alg.product(i, j));
            Rational rhs = -theta(phi.col(i - 1), unit(n, j)) - theta(phi.col(j - 1), unit(n, i));
            if (lhs != rhs) where = "fails at (e" + std::to_string(i) + ", e" + std::to_string(j) + ")";
        }
    r.add("lambda_product", where.empty(), where);

    where.clear();
    for (int i = 1; i <= n && where.empty(); ++i) {
        Rational lhs = theta(a, unit(n, i));
        Rational rhs = -2 * lambda(phi.col(i - 1));
        if (lhs != rhs) where = "fails at e" + std::to_string(i);
    }
    r.add("theta_a", where.empty(), where);

    r.merge(check_admissible_pair(alg, {phi, a}), "pair");
    return r;
}

}  // namespace jjc
