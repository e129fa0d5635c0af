#ifndef JJC_TOPFORM_HPP
#define JJC_TOPFORM_HPP

#include "jjc/linalg.hpp"

namespace jjc {

/// Largest dimension accepted by alternating_sum_top.
inline constexpr std::size_t kMaxTopFormDim = 11;

/*
 * Unnormalized value of alpha ^ omega^n on (e_1, ..., e_{2n+1}):
 *
 *   sum over sigma in S_dim of sign(sigma) * alpha(e_sigma(1))
 *                              * prod_i omega(e_sigma(2i), e_sigma(2i+1))
 *
 * alpha holds alpha(e_i), omega holds omega(e_i, e_j). The sum runs over the
 * whole symmetric group; branches whose partial product is already zero are
 * skipped, which does not change the value. Throws std::invalid_argument for
 * even dim or dim > kMaxTopFormDim.
 */
Rational alternating_sum_top(const Vec& alpha, const Mat& omega);

}  // namespace jjc

#endif
