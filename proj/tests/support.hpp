#ifndef JJC_TESTS_SUPPORT_HPP
#define JJC_TESTS_SUPPORT_HPP

// Seeded generators and brute-force oracles shared by the unit, property and
// acceptance tests. Oracles here deliberately avoid the library routines they
// are used to check.

#include "jjc/catalog.hpp"
#include "jjc/classify5.hpp"
#include "jjc/extensions.hpp"
#include "jjc/operators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace jjc::testing {

using Rng = std::mt19937;

inline Rational pick(Rng& rng, const std::vector<Rational>& pool)
{
    return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

inline Rational small(Rng& rng)
{
    static const std::vector<Rational> pool = {-2, -1, Rational(-1, 2), 0, Rational(1, 2), 1, 2};
    return pick(rng, pool);
}

inline Rational small_nonzero(Rng& rng)
{
    static const std::vector<Rational> pool = {-2, -1, Rational(-1, 2), Rational(1, 2), 1, 2, 3};
    return pick(rng, pool);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Mat random_matrix(Rng& rng, std::size_t r, std::size_t c, double density = 0.5)
{
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (coin(rng, density)) m(i, j) = small(rng);
    return m;
}

inline Vec random_vec(Rng& rng, std::size_t n, double density = 0.5)
{
    Vec v = zero_vec(n);
    for (auto& x : v)
        if (coin(rng, density)) x = small(rng);
    return v;
}

/// Unit upper times unit lower triangular with random off-diagonal entries.
inline Mat random_invertible(Rng& rng, std::size_t n)
{
    Mat u = Mat::identity(n), l = Mat::identity(n), d = Mat::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        d(i, i) = small_nonzero(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng, 0.4)) u(i, j) = small(rng);
            if (coin(rng, 0.4)) l(j, i) = small(rng);
        }
    }
    return u * d * l;
}

inline Mat random_skew(Rng& rng, std::size_t n, double density = 0.5)
{
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng, density)) {
                m(i, j) = small(rng);
                m(j, i) = -m(i, j);
            }
    return m;
}

// ---- oracles ----

/// Laplace expansion along the first row.
inline Rational laplace_det(const Mat& a)
{
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (sgn(a(0, c)) == 0) continue;
        Mat minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = a(i, j);
        Rational term = a(0, c) * laplace_det(minor);
        total += (c % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

/// Pfaffian by expansion along the first row.
inline Rational pfaffian(const Mat& a)
{
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n % 2 == 1) return 0;
    Rational total = 0;
    for (std::size_t j = 1; j < n; ++j) {
        if (sgn(a(0, j)) == 0) continue;
        std::vector<std::size_t> keep;
        for (std::size_t k = 1; k < n; ++k)
            if (k != j) keep.push_back(k);
        Mat minor(n - 2, n - 2);
        for (std::size_t r = 0; r < keep.size(); ++r)
            for (std::size_t c = 0; c < keep.size(); ++c) minor(r, c) = a(keep[r], keep[c]);
        Rational term = a(0, j) * pfaffian(minor);
        total += (j % 2 == 1) ? term : Rational(-term);
    }
    return total;
}

inline int permutation_sign(const std::vector<int>& p)
{
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/// alpha(e_s1) prod omega(e_s(2i), e_s(2i+1)) summed over all permutations.
inline Rational brute_top(const Vec& alpha, const Mat& omega)
{
    const int n = static_cast<int>(alpha.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational total = 0;
    do {
        Rational term = alpha[p[0]];
        for (int i = 1; i + 1 < n && sgn(term) != 0; i += 2) term *= omega(p[i], p[i + 1]);
        if (sgn(term) != 0) total += permutation_sign(p) * term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

/// (e_i . e_j)_k straight from the coefficient table.
inline Vec table_product(const Algebra& a, const Vec& x, const Vec& y)
{
    const int n = a.dim();
    Vec out = zero_vec(n);
    for (int i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            for (int k = 0; k < n; ++k) out[k] += x[i] * y[j] * a.coeff(i + 1, j + 1, k + 1);
        }
    }
    return out;
}

/// Commutativity plus the cyclic Jacobi sum on all basis triples.
inline bool brute_jj(const Algebra& a)
{
    const int n = a.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (a.coeff(i, j, k) != a.coeff(j, i, k)) return false;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z) {
                Vec ex = unit(n, x), ey = unit(n, y), ez = unit(n, z);
                Vec s = add(add(table_product(a, ex, table_product(a, ey, ez)),
                                table_product(a, ey, table_product(a, ez, ex))),
                            table_product(a, ez, table_product(a, ex, ey)));
                if (!is_zero(s)) return false;
            }
    return true;
}

/// dim of span{e_i . e_j}
inline int brute_derived_dim(const Algebra& a)
{
    std::vector<Vec> cols;
    for (int i = 1; i <= a.dim(); ++i)
        for (int j = 1; j <= a.dim(); ++j) cols.push_back(table_product(a, unit(a.dim(), i), unit(a.dim(), j)));
    if (cols.empty()) return 0;
    return static_cast<int>(rank(Mat::from_columns(a.dim(), cols)));
}

/// dim {z : z . e_j = 0 for all j}
inline int brute_center_dim(const Algebra& a)
{
    const int n = a.dim();
    Mat rows(static_cast<std::size_t>(n) * n, n);
    for (int j = 1; j <= n; ++j)
        for (int z = 1; z <= n; ++z)
            for (int k = 1; k <= n; ++k) rows((j - 1) * n + (k - 1), z - 1) = a.coeff(z, j, k);
    return n - static_cast<int>(rank(rows));
}

// ---- structure generators ----

/// Transport (a, alpha, omega) along an invertible P (new basis = columns of P).
inline CosymplecticStructure transport(const CosymplecticStructure& s, const Mat& p)
{
    LinearForm alpha{p.transpose() * s.alpha().coeffs};
    BilinearForm omega{p.transpose() * s.omega().matrix * p, Symmetry::skew};
    return CosymplecticStructure::make(change_basis(s.algebra(), p), alpha, omega);
}

inline LinearMap random_ader(Rng& rng, const std::vector<LinearMap>& basis, std::size_t n)
{
    LinearMap phi(n, n);
    if (basis.empty()) return phi;
    const int terms = uniform(rng, 1, 3);
    for (int k = 0; k < terms; ++k) {
        const auto& b = basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)];
        phi = phi + small_nonzero(rng) * b;
    }
    return phi;
}

inline Vec random_central(Rng& rng, const Algebra& a)
{
    Vec v = zero_vec(a.dim());
    for (const Vec& z : center(a))
        if (coin(rng)) axpy(small(rng), z, v);
    return v;
}

/// One case-1 or case-2 step with random data; falls back to phi = 0, a = 0.
inline CosymplecticStructure random_extension_step(Rng& rng, const CosymplecticStructure& s)
{
    const std::size_t n = static_cast<std::size_t>(s.dim());
    const std::vector<LinearMap> ader = ader_space(s.algebra());
    const bool case2 = coin(rng, 0.3);
    const Rational t = small(rng);
    for (int attempt = 0; attempt < 40; ++attempt) {
        LinearMap phi = coin(rng, 0.15) ? LinearMap(n, n) : random_ader(rng, ader, n);
        Vec av = coin(rng) ? zero_vec(n) : random_central(rng, s.algebra());
        Report r = case2 ? case2_report(s, phi, av) : case1_report(s, phi, av);
        if (!r.passed()) continue;
        ExtensionResult e = case2 ? cosymplectic_double_extension_case2(s, phi, av, t)
                                  : cosymplectic_double_extension_case1(s, phi, av, t);
        return CosymplecticStructure::make(e.algebra, *e.alpha, *e.omega);
    }
    ExtensionResult e = cosymplectic_double_extension_case1(s, LinearMap(n, n), zero_vec(n), t);
    return CosymplecticStructure::make(e.algebra, *e.alpha, *e.omega);
}

/// Compatible odd-family parameters: (a_i, a_{n+i}) proportional to (phi_i, phi_{n+i}).
inline void random_family_parameters(Rng& rng, int n, std::vector<Rational>& phis, std::vector<Rational>& as)
{
    phis.assign(2 * n, 0);
    as.assign(2 * n, 0);
    for (int i = 0; i < n; ++i) {
        phis[i] = small(rng);
        phis[n + i] = small(rng);
        if (sgn(phis[i]) == 0 && sgn(phis[n + i]) == 0) {
            as[i] = small(rng);
            as[n + i] = small(rng);
        } else {
            const Rational c = small(rng);
            as[i] = c * phis[i];
            as[n + i] = c * phis[n + i];
        }
    }
}

/// Cosymplectic structure of the given odd dimension (3..9) built by
/// extensions, the odd family or the correspondence, then moved by a random
/// change of basis.
inline CosymplecticStructure random_cosymplectic(Rng& rng, int dim)
{
    CosymplecticStructure s = trivial_structure(3);
    const int route = uniform(rng, 0, 2);
    if (route == 1 && dim >= 5) {
        const int n = (dim - 3) / 2;
        std::vector<Rational> phis, as;
        random_family_parameters(rng, n, phis, as);
        ExtensionResult e = odd_family(n, phis, as);
        s = CosymplecticStructure::make(e.algebra, *e.alpha, *e.omega);
    } else if (route == 2 && dim >= 5) {
        LinearMap d = H4AntiderivationFamily::matrix(small(rng), small(rng));
        s = cosymplectic_from_symplectic(h4(), h4_form(small_nonzero(rng)), d);
    } else if (coin(rng) && dim >= 5) {
        s = trivial_structure(5);
    }
    while (s.dim() < dim) s = random_extension_step(rng, s);
    return transport(s, random_invertible(rng, static_cast<std::size_t>(s.dim())));
}

// ---- double-extension data ----

struct Datum {
    Algebra base;
    BilinearForm theta;  // symmetric on the base
    LinearMap d;         // endomorphism of base (+) <e>
    Vec a;               // in the base
};

inline Datum random_admissible_datum(Rng& rng)
{
    const int choice = uniform(rng, 0, 3);
    if (choice == 0) {  // trivial base: D = u v^T with v(u) = v(e) = v(a) = 0, theta solved for
        const int n = uniform(rng, 2, 5);
        Vec u = random_vec(rng, n + 1), v = random_vec(rng, n + 1), a = random_vec(rng, n, 0.3);
        v[n] = 0;
        auto orthogonalize = [&](Vec& w) {  // w -= v(w)/v_i0 e_i0 so that v(w) = 0
            const Rational vw = dot(v, w);
            for (std::size_t i = 0; i < v.size() && sgn(vw) != 0; ++i)
                if (sgn(v[i]) != 0) {
                    w[i] -= vw / v[i];
                    break;
                }
        };
        orthogonalize(u);
        Vec ae = a;
        ae.push_back(0);
        orthogonalize(ae);
        a.assign(ae.begin(), ae.begin() + n);
        Mat d(n + 1, n + 1);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) d(i, j) = u[i] * v[j];
        // symmetric theta with theta(phi x, y) + theta(x, phi y) = 0 and theta(a, .) = 0
        std::vector<BilinearForm> units;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) units.push_back(BilinearForm::symmetric(n, {{i, j, 1}}));
        Mat phi(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) phi(i, j) = d(i, j);
        Mat sys(static_cast<std::size_t>(n) * n + n, units.size());
        for (std::size_t k = 0; k < units.size(); ++k) {
            Mat c = phi.transpose() * units[k].matrix + units[k].matrix * phi;
            Vec ta = units[k].matrix * a;
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) sys(i * n + j, k) = c(i, j);
                sys(static_cast<std::size_t>(n) * n + i, k) = ta[i];
            }
        }
        Mat th(n, n);
        for (const Vec& w : kernel_basis(sys))
            if (coin(rng)) {
                const Rational c = small(rng);
                for (std::size_t k = 0; k < units.size(); ++k) th = th + (c * w[k]) * units[k].matrix;
            }
        return {Algebra::trivial(n), BilinearForm::from_matrix(th, Symmetry::symmetric), d, a};
    }
    if (choice == 1) {  // H4 with the nilpotent family, theta = 0, a in <e4>
        LinearMap f = H4AntiderivationFamily::matrix(small(rng), small(rng));
        Mat d(5, 5);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) d(i, j) = f(i, j);
        Vec a = zero_vec(4);
        a[3] = small(rng);
        return {h4(), BilinearForm::zero(4, Symmetry::symmetric), d, a};
    }
    // J5,x or B3 base: random square-zero anti-derivation from the kernel of L_a constraints
    const std::vector<Algebra> bases = {b3(), j51(), j52(), j53(), j50()};
    const Algebra base = bases[std::uniform_int_distribution<std::size_t>(0, bases.size() - 1)(rng)];
    const std::size_t n = static_cast<std::size_t>(base.dim());
    const std::vector<LinearMap> ader = ader_space(base);
    for (int attempt = 0; attempt < 60; ++attempt) {
        LinearMap phi = random_ader(rng, ader, n);
        if (!(phi * phi).is_zero()) continue;
        Mat d(n + 1, n + 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d(i, j) = phi(i, j);
        Vec a = zero_vec(n);
        for (const Vec& z : center(base))
            if (is_zero(phi * z) && coin(rng)) axpy(small(rng), z, a);
        return {base, BilinearForm::zero(static_cast<int>(n), Symmetry::symmetric), d, a};
    }
    Mat d(n + 1, n + 1);
    return {base, BilinearForm::zero(static_cast<int>(n), Symmetry::symmetric), d, zero_vec(n)};
}

inline LinearMap datum_phi(const Datum& x)
{
    const std::size_t n = static_cast<std::size_t>(x.base.dim());
    LinearMap phi(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) phi(i, j) = x.d(i, j);
    return phi;
}

inline LinearForm datum_lambda(const Datum& x)
{
    const std::size_t n = static_cast<std::size_t>(x.base.dim());
    LinearForm l = LinearForm::zero(static_cast<int>(n));
    for (std::size_t j = 0; j < n; ++j) l.coeffs[j] = x.d(n, j);
    return l;
}

/// Unchecked double-extension table of a datum.
inline Algebra datum_product(const Datum& x)
{
    return double_extension_product(x.base, x.theta, datum_phi(x), datum_lambda(x), x.a);
}

inline int failures(const Report& r)
{
    int count = 0;
    for (const auto& c : r.checks())
        if (!c.passed) ++count;
    return count;
}

}  // namespace jjc::testing

#endif
