#include "jjc/forms.hpp"

#include <stdexcept>
#include <string>

namespace jjc {

namespace {

void require_dim(int got, int want, const char* what)
{
    if (got != want)
        throw std::invalid_argument(std::string(what) + ": dimension " + std::to_string(got) + " does not match " +
                                    std::to_string(want));
}

void require_symmetry(const BilinearForm& f, Symmetry s, const char* what)
{
    if (f.symmetry != s)
        throw std::invalid_argument(std::string(what) + (s == Symmetry::skew ? ": form must be skew-symmetric"
                                                                             : ": form must be symmetric"));
}

bool matches(const Mat& m, Symmetry s)
{
    switch (s) {
    case Symmetry::skew: return m.is_skew();
    case Symmetry::symmetric: return m.is_symmetric();
    case Symmetry::none: return true;
    }
    return false;
}

void check_term(int dim, const FormTerm& t)
{
    if (t.i < 1 || t.j < 1 || t.i > dim || t.j > dim)
        throw std::out_of_range("form term index outside 1.." + std::to_string(dim));
}

}  // namespace

Rational LinearForm::operator()(const Vec& x) const
{
    require_dim(static_cast<int>(x.size()), dim(), "LinearForm");
    return dot(coeffs, x);
}

BilinearForm BilinearForm::skew(int dim, const std::vector<FormTerm>& terms)
{
    BilinearForm f{Mat(dim, dim), Symmetry::skew};
    for (const auto& t : terms) {
        check_term(dim, t);
        if (t.i >= t.j) throw std::invalid_argument("skew form term needs i < j");
        f.matrix(t.i - 1, t.j - 1) += t.c;
        f.matrix(t.j - 1, t.i - 1) -= t.c;
    }
    return f;
}

BilinearForm BilinearForm::symmetric(int dim, const std::vector<FormTerm>& terms)
{
    BilinearForm f{Mat(dim, dim), Symmetry::symmetric};
    for (const auto& t : terms) {
        check_term(dim, t);
        if (t.i > t.j) throw std::invalid_argument("symmetric form term needs i <= j");
        f.matrix(t.i - 1, t.j - 1) += t.c;
        if (t.i != t.j) f.matrix(t.j - 1, t.i - 1) += t.c;
    }
    return f;
}

BilinearForm BilinearForm::from_matrix(Mat m, Symmetry s)
{
    if (!m.is_square()) throw std::invalid_argument("bilinear form matrix must be square");
    if (!matches(m, s)) throw std::invalid_argument("bilinear form matrix does not have the declared symmetry");
    return {std::move(m), s};
}

Rational BilinearForm::operator()(const Vec& x, const Vec& y) const
{
    require_dim(static_cast<int>(x.size()), dim(), "BilinearForm");
    require_dim(static_cast<int>(y.size()), dim(), "BilinearForm");
    return dot(x, matrix * y);
}

LinearForm BilinearForm::contract_left(const Vec& x) const
{
    require_dim(static_cast<int>(x.size()), dim(), "BilinearForm");
    return {matrix.transpose() * x};
}

BilinearForm wedge(const LinearForm& u, const LinearForm& v)
{
    require_dim(u.dim(), v.dim(), "wedge");
    const int n = u.dim();
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = u.coeffs[i] * v.coeffs[j] - u.coeffs[j] * v.coeffs[i];
    return {m, Symmetry::skew};
}

BilinearForm operator+(const BilinearForm& a, const BilinearForm& b)
{
    Symmetry s = a.symmetry == b.symmetry ? a.symmetry : Symmetry::none;
    return {a.matrix + b.matrix, s};
}

BilinearForm restrict_form(const BilinearForm& f, const Mat& basis)
{
    return {basis.transpose() * f.matrix * basis, f.symmetry};
}

LinearForm restrict_form(const LinearForm& f, const Mat& basis)
{
    return {basis.transpose() * f.coeffs};
}

Mat kernel_matrix(const LinearForm& f)
{
    std::vector<Vec> ker = kernel_basis(Mat::from_rows(f.dim(), {f.coeffs}));
    return Mat::from_columns(f.dim(), ker);
}

bool cyclic_sum_vanishes(const Algebra& a, const BilinearForm& f)
{
    const int n = a.dim();
    require_dim(f.dim(), n, "cyclic sum");
    // g(i, j, k) = f(e_i . e_j, e_k)
    auto g = [&](int i, int j, int k) {
        Rational s = 0;
        for (int l = 1; l <= n; ++l) {
            const Rational& c = a.coeff(i, j, l);
            if (sgn(c) != 0) s += c * f.matrix(l - 1, k - 1);
        }
        return s;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (sgn(g(i, j, k) + g(k, i, j) + g(j, k, i)) != 0) return false;
    return true;
}

bool is_cocycle(const Algebra& a, const BilinearForm& theta)
{
    require_symmetry(theta, Symmetry::symmetric, "is_cocycle");
    return cyclic_sum_vanishes(a, theta);
}

Report symplectic_report(const Algebra& a, const BilinearForm& omega)
{
    require_symmetry(omega, Symmetry::skew, "is_symplectic");
    require_dim(omega.dim(), a.dim(), "is_symplectic");
    Report r;
    r.add("closed", cyclic_sum_vanishes(a, omega), "cyclic sum omega(x.y, z) does not vanish");
    r.add("nondegenerate", sgn(determinant(omega.matrix)) != 0, "det(omega) = 0");
    return r;
}

bool is_symplectic(const Algebra& a, const BilinearForm& omega) { return symplectic_report(a, omega).passed(); }

Report cosymplectic_report(const Algebra& a, const LinearForm& alpha, const BilinearForm& omega)
{
    const int n = a.dim();
    if (n % 2 == 0) throw std::invalid_argument("is_cosymplectic: dimension must be odd");
    require_symmetry(omega, Symmetry::skew, "is_cosymplectic");
    require_dim(alpha.dim(), n, "is_cosymplectic");
    require_dim(omega.dim(), n, "is_cosymplectic");

    Report r;
    std::string where;
    for (int i = 1; i <= n && where.empty(); ++i)
        for (int j = i; j <= n && where.empty(); ++j)
            if (sgn(alpha(a.product(i, j))) != 0)
                where = "alpha(e" + std::to_string(i) + ".e" + std::to_string(j) + ") != 0";
    r.add("alpha_closed", where.empty(), where);
    r.add("omega_closed", cyclic_sum_vanishes(a, omega), "cyclic sum omega(x.y, z) does not vanish");
    r.add("nondegenerate", sgn(determinant(psi_matrix(alpha, omega))) != 0, "alpha ^ omega^n = 0");
    return r;
}

bool is_cosymplectic(const Algebra& a, const LinearForm& alpha, const BilinearForm& omega)
{
    return cosymplectic_report(a, alpha, omega).passed();
}

Mat psi_matrix(const LinearForm& alpha, const BilinearForm& omega)
{
    require_dim(alpha.dim(), omega.dim(), "psi_matrix");
    const int n = alpha.dim();
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = omega.matrix(i, j) + alpha.coeffs[i] * alpha.coeffs[j];
    return m;
}

std::optional<Vec> solve_reeb(const LinearForm& alpha, const BilinearForm& omega)
{
    // Psi(x)(e_j) = sum_i x_i M(i, j), so Psi(x) = alpha reads M^T x = alpha.
    Mat mt = psi_matrix(alpha, omega).transpose();
    if (sgn(determinant(mt)) == 0) return std::nullopt;
    return solve_linear(mt, alpha.coeffs);
}

BilinearForm omega_phi(const BilinearForm& omega, const LinearMap& phi)
{
    require_dim(static_cast<int>(phi.rows()), omega.dim(), "omega_phi");
    require_dim(static_cast<int>(phi.cols()), omega.dim(), "omega_phi");
    // omega(phi e_i, e_j) = (phi^T M)(i, j)
    Mat p = phi.transpose() * omega.matrix;
    return BilinearForm::from_matrix(p + p.transpose(), Symmetry::symmetric);
}

bool self_adjoint_wrt(const BilinearForm& omega, const LinearMap& d)
{
    require_dim(static_cast<int>(d.rows()), omega.dim(), "self_adjoint_wrt");
    require_dim(static_cast<int>(d.cols()), omega.dim(), "self_adjoint_wrt");
    return d.transpose() * omega.matrix == omega.matrix * d;
}

Report reeb_report(const Algebra& a, const LinearForm& alpha, const BilinearForm& omega, const Vec& xi)
{
    Report r;
    r.add("alpha_xi", alpha(xi) == 1, "alpha(xi) = " + to_string(alpha(xi)));
    r.add("omega_xi", is_zero(omega.contract_left(xi).coeffs), "omega(xi, .) != 0");
    r.add("xi_squared", is_zero(multiply(a, xi, xi)), "xi.xi != 0");
    return r;
}

CosymplecticStructure CosymplecticStructure::make(Algebra a, LinearForm alpha, BilinearForm omega)
{
    Report r = cosymplectic_report(a, alpha, omega);
    if (!r.passed()) throw ConditionError(r);
    auto xi = solve_reeb(alpha, omega);
    if (!xi) throw InternalError("Reeb vector: Psi singular on a validated structure");
    Report post = reeb_report(a, alpha, omega, *xi);
    if (!post.passed()) throw InternalError("Reeb vector postcondition failed: " + post.summary());
    return CosymplecticStructure(std::move(a), std::move(alpha), std::move(omega), std::move(*xi));
}

Report cosymplectic_isomorphism_report(const CosymplecticStructure& s1, const CosymplecticStructure& s2,
                                       const Mat& phi)
{
    if (phi.rows() != static_cast<std::size_t>(s2.dim()) || phi.cols() != static_cast<std::size_t>(s1.dim()))
        throw std::invalid_argument("cosymplectic isomorphism: matrix shape does not match the structures");
    Report r;
    r.add("algebra_morphism", is_algebra_morphism({s1.algebra(), s2.algebra(), phi}), "phi(x.y) != phi(x).phi(y)");
    r.add("invertible", phi.is_square() && sgn(determinant(phi)) != 0, "phi is not invertible");
    r.add("omega_compatible", phi.transpose() * s2.omega().matrix * phi == s1.omega().matrix,
          "omega2(phi x, phi y) != omega1(x, y)");
    std::string where;
    LinearForm pulled{phi.transpose() * s2.alpha().coeffs};
    for (int i = 0; i < s1.dim() && where.empty(); ++i)
        if (pulled.coeffs[i] != s1.alpha().coeffs[i])
            where = "alpha2(phi(e" + std::to_string(i + 1) + ")) = " + to_string(pulled.coeffs[i]) +
                    ", alpha1(e" + std::to_string(i + 1) + ") = " + to_string(s1.alpha().coeffs[i]);
    r.add("alpha_compatible", where.empty(), where);
    r.add("reeb_to_reeb", phi * s1.reeb() == s2.reeb(), "phi(xi1) != xi2");
    return r;
}

}  // namespace jjc
