#ifndef JJC_OPERATORS_HPP
#define JJC_OPERATORS_HPP

#include "jjc/algebra.hpp"
#include "jjc/forms.hpp"
#include "jjc/report.hpp"

#include <vector>

namespace jjc {

/// Matrix of y -> x . y
LinearMap left_mult(const Algebra& a, const Vec& x);

/// D(x.y) = D(x).y + x.D(y) on basis pairs.
bool is_derivation(const Algebra& a, const LinearMap& d);
/// D(x.y) = -D(x).y - x.D(y) on basis pairs.
bool is_anti_derivation(const Algebra& a, const LinearMap& d);

/// Basis of Ader(A). Unknowns are the entries D(r, c) in row-major order, so
/// the basis is the reduced echelon null-space basis of that ordering.
std::vector<LinearMap> ader_space(const Algebra& a);
std::vector<LinearMap> der_space(const Algebra& a);

/// Row-major flattening used by ader_space / der_space.
Vec flatten(const LinearMap& m);
LinearMap unflatten(int n, const Vec& v);

struct AdmissiblePair {
    LinearMap phi;
    Vec a;
};

/// Checks "anti_derivation", "a_in_kernel", "square_relation" (phi^2 = -1/2 L_a).
Report check_admissible_pair(const Algebra& alg, const AdmissiblePair& p);

/*
 * Compatibility of the extension data (theta, phi, lambda, a):
 *   "lambda_a":        lambda(a) = 0
 *   "lambda_product":  lambda(x.y) = -theta(phi x, y) - theta(phi y, x)
 *   "theta_a":         theta(a, x) = -2 lambda(phi x)
 * followed by the admissible-pair checks prefixed "pair.".
 * Throws std::invalid_argument unless theta is declared symmetric.
 */
Report check_extended_pair(const Algebra& alg, const BilinearForm& theta, const LinearMap& phi,
                           const LinearForm& lambda, const Vec& a);

}  // namespace jjc

#endif
