#include "jjc/topform.hpp"

#include <stdexcept>
#include <string>

namespace jjc {

namespace {

struct TopFormSum {
    const Vec& alpha;
    const Mat& omega;
    std::size_t dim;
    std::vector<bool> used;
    Rational total = 0;

    // Inversions added by appending v after the already placed entries.
    int inversions_with_placed(std::size_t v) const
    {
        int inv = 0;
        for (std::size_t u = v + 1; u < dim; ++u)
            if (used[u]) ++inv;
        return inv;
    }

    void place_pairs(std::size_t pos, const Rational& partial, int parity)
    {
        if (pos == dim) {
            if (parity % 2 == 0)
                total += partial;
            else
                total -= partial;
            return;
        }
        for (std::size_t a = 0; a < dim; ++a) {
            if (used[a]) continue;
            const int pa = inversions_with_placed(a);
            used[a] = true;
            for (std::size_t b = 0; b < dim; ++b) {
                if (used[b] || omega(a, b) == 0) continue;
                const int pb = inversions_with_placed(b);
                used[b] = true;
                place_pairs(pos + 2, Rational(partial * omega(a, b)), parity + pa + pb);
                used[b] = false;
            }
            used[a] = false;
        }
    }
};

}  // namespace

Rational alternating_sum_top(const Vec& alpha, const Mat& omega)
{
    const std::size_t dim = alpha.size();
    if (dim % 2 == 0) throw std::invalid_argument("alternating_sum_top: dimension must be odd, got " + std::to_string(dim));
    if (dim > kMaxTopFormDim)
        throw std::invalid_argument("alternating_sum_top: dimension " + std::to_string(dim) + " exceeds " +
                                    std::to_string(kMaxTopFormDim));
    if (omega.rows() != dim || omega.cols() != dim)
        throw std::invalid_argument("alternating_sum_top: form shape does not match dimension");

    TopFormSum s{alpha, omega, dim, std::vector<bool>(dim, false)};
    for (std::size_t first = 0; first < dim; ++first) {
        if (alpha[first] == 0) continue;
        s.used[first] = true;
        s.place_pairs(1, alpha[first], 0);
        s.used[first] = false;
    }
    return s.total;
}

}  // namespace jjc
