#ifndef JJC_INDUCED_HPP
#define JJC_INDUCED_HPP

#include "jjc/forms.hpp"

namespace jjc {

/// x (.) y defined by omega(x (.) y, z) = omega(x, y.z). Throws ConditionError
/// when (a, omega) is not symplectic.
Algebra odot_product(const Algebra& a, const BilinearForm& omega);

/// x * y defined by Psi(x * y)(z) = Psi(x)(y.z).
Algebra star_product(const CosymplecticStructure& s);

/*
 * Relations between * and the (.) product of h = ker alpha, with h given by
 * kernel_matrix(alpha):
 *   "kernel_ideal"      h is an ideal
 *   "kernel_symplectic" (h, omega|h) is symplectic
 *   "pr1"               x * y = x (.) y + omega(x, y.xi) xi on h x h
 *   "alpha_of_star"     alpha(x * y) = omega(x, y.xi) on h x h
 *   "pr2_right"         x * xi = x . xi
 *   "pr2_left"          xi * x = 0
 *   "right_skew"        * is right-skew-symmetric
 *   "xi_antiderivation" L_xi restricted to h is an anti-derivation of (h, (.))
 */
Report star_relations_report(const CosymplecticStructure& s);

}  // namespace jjc

#endif
