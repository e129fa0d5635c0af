#ifndef JJC_EXTENSIONS_HPP
#define JJC_EXTENSIONS_HPP

#include "jjc/forms.hpp"
#include "jjc/operators.hpp"

#include <optional>
#include <vector>

namespace jjc {

/*
 * Double extensions use the basis (d, base..., e): d = e_1, the base vector
 * e_i becomes e_{i+1}, and e = e_{n+2}.
 */
struct ExtensionResult {
    Algebra algebra;
    std::optional<LinearForm> alpha;
    std::optional<BilinearForm> omega;
    int d_index = 0;  // 1-based, 0 when absent
    int e_index = 0;
};

/// x ._theta y = x.y + theta(x, y) e with e appended last. No checks.
Algebra central_extension_product(const Algebra& a, const BilinearForm& theta);
/// Checked version: theta symmetric and a cocycle, else ConditionError
/// naming the violating triple.
Algebra central_extension(const Algebra& a, const BilinearForm& theta);

/// x.y + theta(x,y) e,  d.x = phi(x) + lambda(x) e,  d.d = a. No checks.
Algebra double_extension_product(const Algebra& a, const BilinearForm& theta, const LinearMap& phi,
                                 const LinearForm& lambda, const Vec& av);

/*
 * Conditions on a datum (theta, D, a) with D an endomorphism of the central
 * extension (base..., e):
 *   "theta_symmetric", "theta_cocycle", "d_kills_e" (D(e) = 0), then the
 *   admissible-pair checks of (D, a) on the central extension, prefixed "cp".
 * The equivalent compatibility system for (theta, phi, lambda, a) is
 * evaluated as well; disagreement throws InternalError.
 */
Report check_double_extension_datum(const Algebra& a, const BilinearForm& theta, const LinearMap& d,
                                    const Vec& av);

/// Checked construction; ConditionError carries the report above.
Algebra jj_double_extension(const Algebra& a, const BilinearForm& theta, const LinearMap& d, const Vec& av);

/// Product with theta = omega_phi, lambda = 1/2 omega(a, .), and
/// omega~ = omega + d* ^ e*.
ExtensionResult symplectic_double_extension(const Algebra& a, const BilinearForm& omega, const LinearMap& phi,
                                            const Vec& av);

/// Diagnosis used by the builder below; passes exactly when it would succeed.
Report case1_report(const CosymplecticStructure& s, const LinearMap& phi, const Vec& av);
/// alpha~ = (t, alpha, 0), omega~ = omega + d* ^ e*, product as above.
ExtensionResult cosymplectic_double_extension_case1(const CosymplecticStructure& s, const LinearMap& phi,
                                                    const Vec& av, const Rational& t);

Report case2_report(const CosymplecticStructure& s, const LinearMap& phi, const Vec& av);
/// theta = 0, lambda = 1/2 omega(a, .) = -alpha o phi, alpha~ = (t, alpha, 1).
ExtensionResult cosymplectic_double_extension_case2(const CosymplecticStructure& s, const LinearMap& phi,
                                                    const Vec& av, const Rational& t);

struct Suspension {
    Algebra algebra;  // base (+) <e>, e last
    BilinearForm omega;
};
/// Omega = omega + alpha ^ e* on base (+) <e>, whatever the input.
Suspension suspend(const Algebra& a, const LinearForm& alpha, const BilinearForm& omega);
/// Same construction on a valid structure; the result is checked symplectic.
Suspension suspension(const CosymplecticStructure& s);
/// Converse: requires e = last basis vector to annihilate everything and
/// Omega = omega + alpha ^ e*; returns the validated structure.
CosymplecticStructure unsuspend(const Algebra& ext, const BilinearForm& big_omega, const LinearForm& alpha,
                                const BilinearForm& omega);

/// Checks "symplectic", "anti_derivation", "square_zero", "self_adjoint".
Report correspondence_report(const Algebra& h, const BilinearForm& omega_h, const LinearMap& d);
/// (h..., xi) with xi.x = D(x), xi.xi = 0, alpha = e^{2n+1}, omega = omega_h.
CosymplecticStructure cosymplectic_from_symplectic(const Algebra& h, const BilinearForm& omega_h,
                                                   const LinearMap& d);

struct SymplecticData {
    Algebra h;
    BilinearForm omega_h;
    LinearMap d;
    Mat embedding;  // columns: basis of ker alpha in the ambient coordinates
};
/// h = ker alpha with basis kernel_matrix(alpha), D = L_xi restricted.
SymplecticData symplectic_from_cosymplectic(const CosymplecticStructure& s);

/// Compatibility phi_{n+i} a_i = phi_i a_{n+i}; reports "compatible_<i>".
Report odd_family_report(int n, const std::vector<Rational>& phis, const std::vector<Rational>& as);
/*
 * Case-1 extension of (K^{2n+1}, e^{2n+1}, sum e^{i,i+n}) with
 * phi(e_{2n+1}) = sum phi_i e_i and a = sum a_i e_i, relabelled as
 * (base..., e, d) so that alpha~ = e^{2n+1}.
 */
ExtensionResult odd_family(int n, const std::vector<Rational>& phis, const std::vector<Rational>& as);

/*
 * Checks that the structure decomposes as <d> (+) J (+) <e> along the given
 * vectors (base_subspace columns span J) with the double-extension product
 * and form shape. Extracted data: theta, phi, lambda, a from the table.
 */
Report verify_double_extension_decomposition(const Algebra& a, const LinearForm& alpha, const BilinearForm& omega,
                                             const Vec& d, const Vec& e, const Mat& base_subspace);
/// Index form: d, e are basis vectors, the base is spanned by the others.
Report verify_double_extension_decomposition(const CosymplecticStructure& s, int d_index, int e_index);

struct Decomposition {
    Vec d;
    Vec e;
    Mat base;
};
/// Best-effort search: e from central vectors, d among rescaled basis vectors
/// pairing to 1 with e, base = omega~-orthogonal of {d, e}.
std::optional<Decomposition> find_double_extension_decomposition(const CosymplecticStructure& s);

/// The base (J, alpha, omega) carried by a decomposition, expressed in the
/// basis of its columns.
CosymplecticStructure decomposition_base(const CosymplecticStructure& s, const Decomposition& dec);

}  // namespace jjc

#endif
