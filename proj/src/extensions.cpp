#include "jjc/extensions.hpp"

#include <stdexcept>
#include <string>

namespace jjc {

namespace {

// Copy of an n x n form matrix into a larger square matrix at `offset`.
Mat pad(const Mat& m, int size, int offset)
{
    Mat out(size, size);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i + offset, j + offset) = m(i, j);
    return out;
}

Vec pad(const Vec& v, int size, int offset)
{
    Vec out = zero_vec(size);
    for (std::size_t i = 0; i < v.size(); ++i) out[i + offset] = v[i];
    return out;
}

void require_dim(std::size_t got, int want, const char* what)
{
    if (got != static_cast<std::size_t>(want))
        throw std::invalid_argument(std::string(what) + ": expected size " + std::to_string(want) + ", got " +
                                    std::to_string(got));
}

void require_map(const LinearMap& m, int n, const char* what)
{
    if (m.rows() != static_cast<std::size_t>(n) || m.cols() != static_cast<std::size_t>(n))
        throw std::invalid_argument(std::string(what) + ": map must be " + std::to_string(n) + "x" +
                                    std::to_string(n));
}

// First basis triple where the cyclic sum of theta(x.y, z) is nonzero.
std::string cocycle_violation(const Algebra& a, const Mat& theta)
{
    const int n = a.dim();
    auto g = [&](int i, int j, int k) {
        Rational s = 0;
        for (int l = 1; l <= n; ++l) s += a.coeff(i, j, l) * theta(l - 1, k - 1);
        return s;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (sgn(g(i, j, k) + g(k, i, j) + g(j, k, i)) != 0)
                    return "(e" + std::to_string(i) + ", e" + std::to_string(j) + ", e" + std::to_string(k) + ")";
    return {};
}

LinearForm half_contraction(const BilinearForm& omega, const Vec& av)
{
    // x -> 1/2 omega(a, x)
    return {scaled(Rational(1, 2), omega.contract_left(av).coeffs)};
}

std::string first_nonzero(const Vec& v, const std::string& what)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) return what + " nonzero at e" + std::to_string(i + 1);
    return {};
}

BilinearForm extended_omega(const BilinearForm& omega)
{
    const int n = omega.dim();
    const int big = n + 2;
    Mat m = pad(omega.matrix, big, 1);
    m(0, big - 1) += 1;  // d* ^ e* (d, e) = 1
    m(big - 1, 0) -= 1;
    return {m, Symmetry::skew};
}

struct Extracted {
    Algebra base;
    BilinearForm theta;
    LinearMap phi;
    LinearForm lambda;
    Vec a;
    LinearForm alpha;
    BilinearForm omega;
    Rational alpha_e;
};

// Everything below assumes the transported basis (d, base..., e).
Report structural_checks(const Algebra& t, const BilinearForm& omega)
{
    const int big = t.dim();
    const int m = big - 2;
    Report r;
    std::string where;
    for (int j = 1; j <= big && where.empty(); ++j)
        for (int k = 1; k <= big && where.empty(); ++k)
            if (sgn(t.coeff(big, j, k)) != 0 || sgn(t.coeff(j, big, k)) != 0) where = "e.e" + std::to_string(j);
    r.add("e_central", where.empty(), where);
    r.add("commutative", is_commutative(t), "product is not commutative");

    where.clear();
    for (int i = 2; i <= m + 1 && where.empty(); ++i)
        for (int j = 2; j <= m + 1 && where.empty(); ++j)
            if (sgn(t.coeff(i, j, 1)) != 0) where = "base pair (" + std::to_string(i - 1) + ", " + std::to_string(j - 1) + ")";
    r.add("base_products", where.empty(), where.empty() ? "" : "d-component in product of " + where);

    where.clear();
    for (int i = 2; i <= m + 1 && where.empty(); ++i)
        if (sgn(t.coeff(1, i, 1)) != 0) where = "d-component in d.x for base vector " + std::to_string(i - 1);
    r.add("d_action", where.empty(), where);

    r.add("d_square", sgn(t.coeff(1, 1, 1)) == 0 && sgn(t.coeff(1, 1, big)) == 0,
          "d.d has a d- or e-component");

    bool shape = omega.matrix(0, big - 1) == 1;
    for (int i = 1; i <= m; ++i)
        shape = shape && sgn(omega.matrix(0, i)) == 0 && sgn(omega.matrix(big - 1, i)) == 0;
    r.add("omega_shape", shape, "omega~ is not omega + d* ^ e* relative to the splitting");
    return r;
}

Extracted extract(const Algebra& t, const LinearForm& alpha, const BilinearForm& omega)
{
    const int big = t.dim();
    const int m = big - 2;
    Extracted x{Algebra(m, true), BilinearForm::zero(m, Symmetry::symmetric), LinearMap(m, m), LinearForm::zero(m),
                zero_vec(m), LinearForm::zero(m), BilinearForm::zero(m, Symmetry::skew), alpha.coeffs[big - 1]};
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            for (int k = 1; k <= m; ++k) x.base.set(i, j, k, t.coeff(i + 1, j + 1, k + 1));
            x.theta.matrix(i - 1, j - 1) = t.coeff(i + 1, j + 1, big);
            x.phi(j - 1, i - 1) = t.coeff(1, i + 1, j + 1);
            x.omega.matrix(i - 1, j - 1) = omega.matrix(i, j);
        }
        x.lambda.coeffs[i - 1] = t.coeff(1, i + 1, big);
        x.a[i - 1] = t.coeff(1, 1, i + 1);
        x.alpha.coeffs[i - 1] = alpha.coeffs[i];
    }
    return x;
}

}  // namespace

Algebra central_extension_product(const Algebra& a, const BilinearForm& theta)
{
    const int n = a.dim();
    require_dim(theta.matrix.rows(), n, "central extension");
    Algebra out = append_null_line(a);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.set(i, j, n + 1, theta.matrix(i - 1, j - 1));
    return out;
}

Algebra central_extension(const Algebra& a, const BilinearForm& theta)
{
    Report r;
    bool sym = theta.symmetry == Symmetry::symmetric && theta.matrix.is_symmetric();
    r.add("theta_symmetric", sym, "theta is not symmetric");
    std::string where = cocycle_violation(a, theta.matrix);
    r.add("theta_cocycle", where.empty(), "cyclic sum theta(x.y, z) nonzero at " + where);
    if (!r.passed()) throw ConditionError(r);
    Algebra out = central_extension_product(a, theta);
    if (!is_jacobi_jordan(a) || is_jacobi_jordan(out)) return out;
    throw InternalError("central extension by a cocycle is not a JJ-algebra");
}

Algebra double_extension_product(const Algebra& a, const BilinearForm& theta, const LinearMap& phi,
                                 const LinearForm& lambda, const Vec& av)
{
    const int n = a.dim();
    const int big = n + 2;
    require_dim(theta.matrix.rows(), n, "double extension theta");
    require_map(phi, n, "double extension phi");
    require_dim(lambda.coeffs.size(), n, "double extension lambda");
    require_dim(av.size(), n, "double extension a");
    Algebra out(big, a.commutative_hint());
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            for (int k = 1; k <= n; ++k) out.set(i + 1, j + 1, k + 1, a.coeff(i, j, k));
            out.set(i + 1, j + 1, big, theta.matrix(i - 1, j - 1));
        }
        Vec dx = pad(phi.col(i - 1), big, 1);
        dx[big - 1] = lambda.coeffs[i - 1];
        out.set_symmetric_product(1, i + 1, dx);
    }
    out.set_product(1, 1, pad(av, big, 1));
    return out;
}

Report check_double_extension_datum(const Algebra& a, const BilinearForm& theta, const LinearMap& d,
                                    const Vec& av)
{
    const int n = a.dim();
    require_map(d, n + 1, "double extension datum D");
    require_dim(av.size(), n, "double extension datum a");
    Report r;
    bool sym = theta.matrix.is_symmetric();
    r.add("theta_symmetric", sym, "theta is not symmetric");
    std::string where = cocycle_violation(a, theta.matrix);
    r.add("theta_cocycle", where.empty(), "cyclic sum theta(x.y, z) nonzero at " + where);
    r.add("d_kills_e", is_zero(d.col(n)), "D(e) != 0");

    Algebra jt = central_extension_product(a, theta);
    Report cp = check_admissible_pair(jt, {d, pad(av, n + 1, 0)});
    r.merge(cp, "cp");

    if (sym && where.empty() && is_zero(d.col(n))) {
        LinearMap phi(n, n);
        LinearForm lambda = LinearForm::zero(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) phi(i, j) = d(i, j);
            lambda.coeffs[i] = d(n, i);
        }
        BilinearForm th{theta.matrix, Symmetry::symmetric};
        if (check_extended_pair(a, th, phi, lambda, av).passed() != cp.passed())
            throw InternalError("double extension datum: (cp) and the (theta, phi, lambda, a) system disagree");
    }
    return r;
}

Algebra jj_double_extension(const Algebra& a, const BilinearForm& theta, const LinearMap& d, const Vec& av)
{
    Report r = check_double_extension_datum(a, theta, d, av);
    if (!r.passed()) throw ConditionError(r);
    const int n = a.dim();
    LinearMap phi(n, n);
    LinearForm lambda = LinearForm::zero(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) phi(i, j) = d(i, j);
        lambda.coeffs[i] = d(n, i);
    }
    Algebra out = double_extension_product(a, theta, phi, lambda, av);
    if (is_jacobi_jordan(a) && !is_jacobi_jordan(out))
        throw InternalError("double extension of admissible data is not a JJ-algebra");
    return out;
}

ExtensionResult symplectic_double_extension(const Algebra& a, const BilinearForm& omega, const LinearMap& phi,
                                            const Vec& av)
{
    const int n = a.dim();
    require_map(phi, n, "symplectic double extension");
    require_dim(av.size(), n, "symplectic double extension a");
    Report r;
    r.merge(symplectic_report(a, omega), "base");
    BilinearForm theta = omega_phi(omega, phi);
    LinearForm lambda = half_contraction(omega, av);
    std::string where;
    for (int i = 1; i <= n && where.empty(); ++i)
        if (sgn(omega(phi.col(i - 1), av)) != 0) where = "omega(phi(e" + std::to_string(i) + "), a) != 0";
    r.add("omega_phi_a", where.empty(), where);
    where = cocycle_violation(a, theta.matrix);
    r.add("theta_cocycle", where.empty(), "omega_phi cyclic sum nonzero at " + where);
    r.merge(check_extended_pair(a, theta, phi, lambda, av), "c0");
    if (!r.passed()) throw ConditionError(r);

    ExtensionResult out{double_extension_product(a, theta, phi, lambda, av), std::nullopt, extended_omega(omega), 1,
                        n + 2};
    if (is_jacobi_jordan(a) && !(is_jacobi_jordan(out.algebra) && is_symplectic(out.algebra, *out.omega)))
        throw InternalError("symplectic double extension failed its postcondition");
    return out;
}

Report case1_report(const CosymplecticStructure& s, const LinearMap& phi, const Vec& av)
{
    const Algebra& a = s.algebra();
    const int n = a.dim();
    require_map(phi, n, "case-1 extension");
    require_dim(av.size(), n, "case-1 extension a");
    Report r;
    r.add("alpha_phi", is_zero(phi.transpose() * s.alpha().coeffs),
          first_nonzero(phi.transpose() * s.alpha().coeffs, "alpha o phi"));
    std::string where;
    for (int i = 1; i <= n && where.empty(); ++i)
        if (sgn(s.omega()(phi.col(i - 1), av)) != 0) where = "omega(phi(e" + std::to_string(i) + "), a) != 0";
    r.add("omega_phi_a", where.empty(), where);
    r.add("alpha_a", sgn(s.alpha()(av)) == 0, "alpha(a) = " + to_string(s.alpha()(av)));
    BilinearForm theta = omega_phi(s.omega(), phi);
    where = cocycle_violation(a, theta.matrix);
    r.add("theta_cocycle", where.empty(), "omega_phi cyclic sum nonzero at " + where);
    r.merge(check_extended_pair(a, theta, phi, half_contraction(s.omega(), av), av), "c0");
    return r;
}

ExtensionResult cosymplectic_double_extension_case1(const CosymplecticStructure& s, const LinearMap& phi,
                                                    const Vec& av, const Rational& t)
{
    Report r = case1_report(s, phi, av);
    if (!r.passed()) throw ConditionError(r);
    const int n = s.dim();
    Algebra alg = double_extension_product(s.algebra(), omega_phi(s.omega(), phi), phi,
                                           half_contraction(s.omega(), av), av);
    LinearForm alpha{pad(s.alpha().coeffs, n + 2, 1)};
    alpha.coeffs[0] = t;
    ExtensionResult out{std::move(alg), alpha, extended_omega(s.omega()), 1, n + 2};
    if (!is_jacobi_jordan(out.algebra) || !is_cosymplectic(out.algebra, *out.alpha, *out.omega))
        throw InternalError("case-1 extension failed its postcondition");
    return out;
}

Report case2_report(const CosymplecticStructure& s, const LinearMap& phi, const Vec& av)
{
    const Algebra& a = s.algebra();
    const int n = a.dim();
    require_map(phi, n, "case-2 extension");
    require_dim(av.size(), n, "case-2 extension a");
    Report r;
    r.add("omega_phi_zero", omega_phi(s.omega(), phi).matrix.is_zero(), "omega_phi != 0");
    r.add("alpha_a", sgn(s.alpha()(av)) == 0, "alpha(a) = " + to_string(s.alpha()(av)));
    LinearForm lambda = half_contraction(s.omega(), av);
    Vec rel = add(lambda.coeffs, phi.transpose() * s.alpha().coeffs);
    r.add("lambda_relation", is_zero(rel), first_nonzero(rel, "1/2 omega(a, .) + alpha o phi"));
    r.merge(check_extended_pair(a, BilinearForm::zero(n, Symmetry::symmetric), phi, lambda, av), "c0");
    return r;
}

ExtensionResult cosymplectic_double_extension_case2(const CosymplecticStructure& s, const LinearMap& phi,
                                                    const Vec& av, const Rational& t)
{
    Report r = case2_report(s, phi, av);
    if (!r.passed()) throw ConditionError(r);
    const int n = s.dim();
    Algebra alg = double_extension_product(s.algebra(), BilinearForm::zero(n, Symmetry::symmetric), phi,
                                           half_contraction(s.omega(), av), av);
    LinearForm alpha{pad(s.alpha().coeffs, n + 2, 1)};
    alpha.coeffs[0] = t;
    alpha.coeffs[n + 1] = 1;
    ExtensionResult out{std::move(alg), alpha, extended_omega(s.omega()), 1, n + 2};
    if (!is_jacobi_jordan(out.algebra) || !is_cosymplectic(out.algebra, *out.alpha, *out.omega))
        throw InternalError("case-2 extension failed its postcondition");
    return out;
}

Suspension suspend(const Algebra& a, const LinearForm& alpha, const BilinearForm& omega)
{
    const int n = a.dim();
    require_dim(alpha.coeffs.size(), n, "suspend alpha");
    require_dim(omega.matrix.rows(), n, "suspend omega");
    LinearForm ax{pad(alpha.coeffs, n + 1, 0)};
    BilinearForm big{pad(omega.matrix, n + 1, 0), Symmetry::skew};
    big = big + wedge(ax, LinearForm::dual(n + 1, n + 1));
    big.symmetry = omega.symmetry;
    return {append_null_line(a), big};
}

Suspension suspension(const CosymplecticStructure& s)
{
    Suspension out = suspend(s.algebra(), s.alpha(), s.omega());
    if (!is_symplectic(out.algebra, out.omega)) throw InternalError("suspension of a cosymplectic structure is not symplectic");
    return out;
}

CosymplecticStructure unsuspend(const Algebra& ext, const BilinearForm& big_omega, const LinearForm& alpha,
                                const BilinearForm& omega)
{
    const int big = ext.dim();
    const int n = big - 1;
    if (n < 0) throw std::invalid_argument("unsuspend: empty algebra");
    require_dim(alpha.coeffs.size(), n, "unsuspend alpha");
    require_dim(omega.matrix.rows(), n, "unsuspend omega");
    Report r;
    bool null_line = true;
    for (int j = 1; j <= big; ++j)
        for (int k = 1; k <= big; ++k)
            null_line = null_line && sgn(ext.coeff(big, j, k)) == 0 && sgn(ext.coeff(j, big, k)) == 0;
    bool closed_base = true;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) closed_base = closed_base && sgn(ext.coeff(i, j, big)) == 0;
    r.add("e_null", null_line && closed_base, "the last basis vector is not a null direct summand");
    if (!r.passed()) throw ConditionError(r);

    Mat basis(big, n);
    for (int i = 0; i < n; ++i) basis(i, i) = 1;
    Algebra base = restrict_to_subalgebra(ext, basis);
    r.add("decomposition", suspend(base, alpha, omega).omega.matrix == big_omega.matrix,
          "Omega != omega + alpha ^ e*");
    if (!r.passed()) throw ConditionError(r);
    r.merge(symplectic_report(ext, big_omega), "suspension");
    if (!r.passed()) throw ConditionError(r);
    Report c = cosymplectic_report(base, alpha, omega);
    if (!c.passed()) throw InternalError("symplectic suspension over a non-cosymplectic base: " + c.summary());
    return CosymplecticStructure::make(std::move(base), alpha, omega);
}

Report correspondence_report(const Algebra& h, const BilinearForm& omega_h, const LinearMap& d)
{
    require_map(d, h.dim(), "correspondence");
    Report r;
    r.merge(symplectic_report(h, omega_h), "symplectic");
    r.add("anti_derivation", is_anti_derivation(h, d), "D is not an anti-derivation");
    r.add("square_zero", (d * d).is_zero(), "D^2 != 0");
    r.add("self_adjoint", self_adjoint_wrt(omega_h, d), "omega_h(Dx, y) != omega_h(x, Dy)");
    return r;
}

CosymplecticStructure cosymplectic_from_symplectic(const Algebra& h, const BilinearForm& omega_h, const LinearMap& d)
{
    Report r = correspondence_report(h, omega_h, d);
    if (!r.passed()) throw ConditionError(r);
    const int m = h.dim();
    Algebra j = append_null_line(h);
    for (int i = 1; i <= m; ++i) j.set_symmetric_product(m + 1, i, pad(d.col(i - 1), m + 1, 0));
    LinearForm alpha = LinearForm::dual(m + 1, m + 1);
    BilinearForm omega{pad(omega_h.matrix, m + 1, 0), Symmetry::skew};
    Report c = cosymplectic_report(j, alpha, omega);
    if (!c.passed() || !is_jacobi_jordan(j))
        throw InternalError("symplectic data with admissible D did not give a cosymplectic JJ-algebra: " + c.summary());
    return CosymplecticStructure::make(std::move(j), std::move(alpha), std::move(omega));
}

SymplecticData symplectic_from_cosymplectic(const CosymplecticStructure& s)
{
    const Algebra& a = s.algebra();
    Mat basis = kernel_matrix(s.alpha());
    const int m = static_cast<int>(basis.cols());
    Algebra h = restrict_to_subalgebra(a, basis);
    BilinearForm omega_h = restrict_form(s.omega(), basis);
    LinearMap d(m, m);
    for (int j = 0; j < m; ++j) {
        auto c = coordinates(basis, multiply(a, s.reeb(), basis.col(j)));
        if (!c) throw InternalError("xi.x left ker alpha");
        d.set_col(j, *c);
    }
    Report r = correspondence_report(h, omega_h, d);
    if (!r.passed()) throw InternalError("restriction to ker alpha: " + r.summary());
    return {std::move(h), std::move(omega_h), std::move(d), std::move(basis)};
}

Report odd_family_report(int n, const std::vector<Rational>& phis, const std::vector<Rational>& as)
{
    if (n < 1) throw std::invalid_argument("odd_family: n must be at least 1");
    require_dim(phis.size(), 2 * n, "odd_family phi list");
    require_dim(as.size(), 2 * n, "odd_family a list");
    Report r;
    for (int i = 1; i <= n; ++i) {
        Rational lhs = phis[n + i - 1] * as[i - 1];
        Rational rhs = phis[i - 1] * as[n + i - 1];
        r.add("compatible_" + std::to_string(i), lhs == rhs,
              "phi_" + std::to_string(n + i) + " a_" + std::to_string(i) + " = " + to_string(lhs) + " != phi_" +
                  std::to_string(i) + " a_" + std::to_string(n + i) + " = " + to_string(rhs));
    }
    return r;
}

ExtensionResult odd_family(int n, const std::vector<Rational>& phis, const std::vector<Rational>& as)
{
    Report r = odd_family_report(n, phis, as);
    if (!r.passed()) throw ConditionError(r);
    const int m = 2 * n + 1;
    std::vector<FormTerm> terms;
    for (int i = 1; i <= n; ++i) terms.push_back({i, i + n, Rational(1)});
    CosymplecticStructure base =
        CosymplecticStructure::make(Algebra::trivial(m), LinearForm::dual(m, m), BilinearForm::skew(m, terms));
    LinearMap phi(m, m);
    Vec av = zero_vec(m);
    for (int i = 0; i < 2 * n; ++i) {
        phi(i, m - 1) = phis[i];
        av[i] = as[i];
    }
    ExtensionResult ext = cosymplectic_double_extension_case1(base, phi, av, Rational(0));

    // (d, base..., e) -> (base..., e, d)
    const int big = m + 2;
    Mat p(big, big);
    for (int k = 0; k < m; ++k) p(k + 1, k) = 1;
    p(big - 1, big - 2) = 1;
    p(0, big - 1) = 1;
    ExtensionResult out;
    out.algebra = change_basis(ext.algebra, p);
    out.alpha = LinearForm{p.transpose() * ext.alpha->coeffs};
    out.omega = BilinearForm{p.transpose() * ext.omega->matrix * p, Symmetry::skew};
    out.d_index = big;
    out.e_index = big - 1;
    if (!is_cosymplectic(out.algebra, *out.alpha, *out.omega))
        throw InternalError("relabelled family lost the cosymplectic property");
    return out;
}

Report verify_double_extension_decomposition(const Algebra& a, const LinearForm& alpha, const BilinearForm& omega,
                                             const Vec& d, const Vec& e, const Mat& base_subspace)
{
    const int big = a.dim();
    const int m = big - 2;
    Report r;
    bool shape_ok = m >= 1 && base_subspace.rows() == static_cast<std::size_t>(big) &&
                    base_subspace.cols() == static_cast<std::size_t>(m) && d.size() == static_cast<std::size_t>(big) &&
                    e.size() == static_cast<std::size_t>(big);
    r.add("shape", shape_ok, "splitting vectors do not match the dimension");
    if (!shape_ok) return r;

    Mat p(big, big);
    p.set_col(0, d);
    for (int i = 0; i < m; ++i) p.set_col(i + 1, base_subspace.col(i));
    p.set_col(big - 1, e);
    bool invertible = sgn(determinant(p)) != 0;
    r.add("basis", invertible, "d, base and e are not a basis");
    if (!invertible) return r;

    Algebra t = change_basis(a, p);
    LinearForm ta{p.transpose() * alpha.coeffs};
    BilinearForm tw{p.transpose() * omega.matrix * p, Symmetry::skew};
    r.merge(structural_checks(t, tw));
    if (!r.passed()) return r;

    Extracted x = extract(t, ta, tw);
    if (m % 2 == 0) {
        r.add("base_odd", false, "base has even dimension");
        return r;
    }
    r.merge(cosymplectic_report(x.base, x.alpha, x.omega), "base");
    r.merge(check_extended_pair(x.base, x.theta, x.phi, x.lambda, x.a), "c0");

    r.add("c1_theta", x.alpha_e == 0 || x.theta.matrix.is_zero(), "theta(x, y) alpha~(e) != 0");
    Vec c1 = add(x.phi.transpose() * x.alpha.coeffs, scaled(x.alpha_e, x.lambda.coeffs));
    r.add("c1_lambda", is_zero(c1), first_nonzero(c1, "alpha o phi + alpha~(e) lambda"));
    r.add("c1_alpha_a", sgn(x.alpha(x.a)) == 0, "alpha(a) != 0");

    r.add("c2_theta", x.theta.matrix == omega_phi(x.omega, x.phi).matrix, "theta != omega_phi");
    Vec c2 = sub(scaled(2, x.lambda.coeffs), x.omega.contract_left(x.a).coeffs);
    r.add("c2_lambda", is_zero(c2), first_nonzero(c2, "2 lambda - omega(a, .)"));
    std::string where;
    for (int i = 1; i <= m && where.empty(); ++i)
        if (sgn(x.omega(x.phi.col(i - 1), x.a)) != 0) where = "omega(phi(e" + std::to_string(i) + "), a) != 0";
    r.add("c2_omega_phi_a", where.empty(), where);
    return r;
}

Report verify_double_extension_decomposition(const CosymplecticStructure& s, int d_index, int e_index)
{
    const int big = s.dim();
    if (d_index < 1 || e_index < 1 || d_index > big || e_index > big || d_index == e_index)
        throw std::invalid_argument("decomposition: d and e must be distinct basis indices");
    std::vector<Vec> base;
    for (int i = 1; i <= big; ++i)
        if (i != d_index && i != e_index) base.push_back(unit(big, i));
    return verify_double_extension_decomposition(s.algebra(), s.alpha(), s.omega(), unit(big, d_index),
                                                 unit(big, e_index), Mat::from_columns(big, base));
}

std::optional<Decomposition> find_double_extension_decomposition(const CosymplecticStructure& s)
{
    const int big = s.dim();
    if (big < 3) return std::nullopt;
    const Algebra& a = s.algebra();
    std::vector<Vec> candidates;
    for (int i = 1; i <= big; ++i) {
        Vec u = unit(big, i);
        bool central = true;
        for (int j = 1; j <= big && central; ++j) central = is_zero(a.product(i, j));
        if (central) candidates.push_back(u);
    }
    for (const Vec& z : center(a)) candidates.push_back(z);

    const Mat& w = s.omega().matrix;
    auto attempt = [&](const Vec& d, const Vec& e) -> std::optional<Decomposition> {
        Mat rows = Mat::from_rows(big, {w.transpose() * d, w.transpose() * e});
        Mat base = Mat::from_columns(big, kernel_basis(rows));
        if (base.cols() != static_cast<std::size_t>(big - 2)) return std::nullopt;
        if (verify_double_extension_decomposition(a, s.alpha(), s.omega(), d, e, base).passed())
            return Decomposition{d, e, base};
        return std::nullopt;
    };
    for (const Vec& e : candidates) {
        // shifts u with omega(u, e) = 0 keep omega(d, e) = 1
        std::vector<Vec> shifts = kernel_basis(Mat::from_rows(big, {w * e}));
        const bool wide = big <= 7;
        for (int k = 1; k <= big; ++k) {
            Rational c = s.omega()(unit(big, k), e);
            if (sgn(c) == 0) continue;
            Vec d0 = scaled(1 / c, unit(big, k));
            if (auto found = attempt(d0, e)) return found;
            if (!wide) continue;
            // coefficients in {-1, 0, 1} on the shift basis, counted in base 3
            std::size_t total = 1;
            for (std::size_t i = 0; i < shifts.size(); ++i) total *= 3;
            for (std::size_t code = 1; code < total; ++code) {
                Vec d = d0;
                std::size_t rest = code;
                for (const Vec& u : shifts) {
                    int digit = static_cast<int>(rest % 3) - 1;
                    rest /= 3;
                    if (digit != 0) axpy(Rational(digit), u, d);
                }
                if (auto found = attempt(d, e)) return found;
            }
        }
    }
    return std::nullopt;
}

CosymplecticStructure decomposition_base(const CosymplecticStructure& s, const Decomposition& dec)
{
    Report r = verify_double_extension_decomposition(s.algebra(), s.alpha(), s.omega(), dec.d, dec.e, dec.base);
    if (!r.passed()) throw ConditionError(r);
    const int big = s.dim();
    Mat p(big, big);
    p.set_col(0, dec.d);
    for (int i = 0; i < big - 2; ++i) p.set_col(i + 1, dec.base.col(i));
    p.set_col(big - 1, dec.e);
    Algebra t = change_basis(s.algebra(), p);
    Extracted x = extract(t, LinearForm{p.transpose() * s.alpha().coeffs},
                          BilinearForm{p.transpose() * s.omega().matrix * p, Symmetry::skew});
    return CosymplecticStructure::make(std::move(x.base), std::move(x.alpha), std::move(x.omega));
}

}  // namespace jjc
