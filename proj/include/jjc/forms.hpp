#ifndef JJC_FORMS_HPP
#define JJC_FORMS_HPP

#include "jjc/algebra.hpp"
#include "jjc/report.hpp"

#include <vector>

namespace jjc {

using LinearMap = Mat;

/// Coefficient c on e^{ij} (skew) or on the (i, j) slot (symmetric), 1-based.
struct FormTerm {
    int i;
    int j;
    Rational c;
};

struct LinearForm {
    Vec coeffs;  // coeffs[i-1] = form(e_i)

    static LinearForm zero(int dim) { return {zero_vec(dim)}; }
    /// e^i scaled by 1
    static LinearForm dual(int dim, int i) { return {unit(dim, i)}; }

    int dim() const { return static_cast<int>(coeffs.size()); }
    Rational operator()(const Vec& x) const;
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

enum class Symmetry { skew, symmetric, none };

/*
 * matrix(i-1, j-1) = form(e_i, e_j). A skew term c e^{ij} sets
 * matrix(i,j) = c and matrix(j,i) = -c, so that
 * e^i ^ e^j (e_k, e_l) = d_ik d_jl - d_il d_jk.
 */
struct BilinearForm {
    Mat matrix;
    Symmetry symmetry = Symmetry::none;

    static BilinearForm zero(int dim, Symmetry s) { return {Mat(dim, dim), s}; }
    /// Sum of c e^{ij}; each term needs i < j.
    static BilinearForm skew(int dim, const std::vector<FormTerm>& terms);
    /// Sets (i, j) and (j, i) to c; each term needs i <= j.
    static BilinearForm symmetric(int dim, const std::vector<FormTerm>& terms);
    /// Throws std::invalid_argument if the matrix does not have the declared symmetry.
    static BilinearForm from_matrix(Mat m, Symmetry s);

    int dim() const { return static_cast<int>(matrix.rows()); }
    Rational operator()(const Vec& x, const Vec& y) const;
    /// The linear form y -> form(x, y).
    LinearForm contract_left(const Vec& x) const;
    friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
};

/// u ^ v as a skew form: (u ^ v)(x, y) = u(x) v(y) - u(y) v(x).
BilinearForm wedge(const LinearForm& u, const LinearForm& v);
BilinearForm operator+(const BilinearForm& a, const BilinearForm& b);

/// Pull back along the columns of `basis`: B^T M B, and the form restricted
/// the same way.
BilinearForm restrict_form(const BilinearForm& f, const Mat& basis);
LinearForm restrict_form(const LinearForm& f, const Mat& basis);

/// Columns form the reduced echelon basis of ker f.
Mat kernel_matrix(const LinearForm& f);

/// sum_cyc f(x.y, z) = 0 on all basis triples.
bool cyclic_sum_vanishes(const Algebra& a, const BilinearForm& f);

/// Throws std::invalid_argument unless theta is declared symmetric.
bool is_cocycle(const Algebra& a, const BilinearForm& theta);

/// Checks "closed" then "nondegenerate". Odd dimension simply fails the
/// second check. Throws unless omega is declared skew.
Report symplectic_report(const Algebra& a, const BilinearForm& omega);
bool is_symplectic(const Algebra& a, const BilinearForm& omega);

/// Checks "alpha_closed", "omega_closed", "nondegenerate" in that order.
/// Non-degeneracy of alpha ^ omega^n is decided by det(Psi).
/// Throws on even dimension, shape mismatch, or omega not declared skew.
Report cosymplectic_report(const Algebra& a, const LinearForm& alpha, const BilinearForm& omega);
bool is_cosymplectic(const Algebra& a, const LinearForm& alpha, const BilinearForm& omega);

/// M(i,j) = omega(e_i, e_j) + alpha(e_i) alpha(e_j)
Mat psi_matrix(const LinearForm& alpha, const BilinearForm& omega);

/// Solution of Psi(xi) = alpha; nullopt when Psi is singular.
std::optional<Vec> solve_reeb(const LinearForm& alpha, const BilinearForm& omega);

/// (x, y) -> omega(phi x, y) + omega(phi y, x). Symmetric whatever phi is.
BilinearForm omega_phi(const BilinearForm& omega, const LinearMap& phi);

/// omega(D e_i, e_j) = omega(e_i, D e_j) for all i, j.
bool self_adjoint_wrt(const BilinearForm& omega, const LinearMap& d);

class CosymplecticStructure {
public:
    /// Validates with cosymplectic_report; throws ConditionError on failure.
    static CosymplecticStructure make(Algebra a, LinearForm alpha, BilinearForm omega);

    const Algebra& algebra() const { return algebra_; }
    const LinearForm& alpha() const { return alpha_; }
    const BilinearForm& omega() const { return omega_; }
    const Vec& reeb() const { return reeb_; }
    int dim() const { return algebra_.dim(); }

private:
    CosymplecticStructure(Algebra a, LinearForm alpha, BilinearForm omega, Vec reeb)
        : algebra_(std::move(a)), alpha_(std::move(alpha)), omega_(std::move(omega)), reeb_(std::move(reeb)) {}

    Algebra algebra_;
    LinearForm alpha_;
    BilinearForm omega_;
    Vec reeb_;
};

/// alpha(xi) = 1, omega(xi, .) = 0, xi.xi = 0
Report reeb_report(const Algebra& a, const LinearForm& alpha, const BilinearForm& omega, const Vec& xi);

/// Reeb vector of a validated structure (cached at construction).
inline const Vec& reeb_vector(const CosymplecticStructure& s) { return s.reeb(); }

/*
 * phi : s1 -> s2 (columns are images). Checks "algebra_morphism",
 * "invertible", "omega_compatible" (omega2(phi x, phi y) = omega1(x, y)),
 * "alpha_compatible" (alpha2 o phi = alpha1) and "reeb_to_reeb".
 */
Report cosymplectic_isomorphism_report(const CosymplecticStructure& s1, const CosymplecticStructure& s2,
                                       const Mat& phi);

}  // namespace jjc

#endif
