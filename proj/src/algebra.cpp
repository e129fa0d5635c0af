#include "jjc/algebra.hpp"

#include "jjc/report.hpp"

#include <stdexcept>
#include <string>

namespace jjc {

namespace {

void require_len(const Algebra& a, const Vec& v, const char* what)
{
    if (v.size() != static_cast<std::size_t>(a.dim()))
        throw std::invalid_argument(std::string(what) + ": vector length " + std::to_string(v.size()) +
                                    " does not match algebra dimension " + std::to_string(a.dim()));
}

// Multiplication by a basis vector on the left: e_i . v
Vec mul_basis_left(const Algebra& a, int i, const Vec& v)
{
    const int n = a.dim();
    Vec out = zero_vec(n);
    for (int l = 1; l <= n; ++l) {
        if (sgn(v[l - 1]) == 0) continue;
        for (int k = 1; k <= n; ++k) {
            const Rational& c = a.coeff(i, l, k);
            if (sgn(c) != 0) out[k - 1] += v[l - 1] * c;
        }
    }
    return out;
}

Vec mul_basis_right(const Algebra& a, const Vec& v, int j)
{
    const int n = a.dim();
    Vec out = zero_vec(n);
    for (int l = 1; l <= n; ++l) {
        if (sgn(v[l - 1]) == 0) continue;
        for (int k = 1; k <= n; ++k) {
            const Rational& c = a.coeff(l, j, k);
            if (sgn(c) != 0) out[k - 1] += v[l - 1] * c;
        }
    }
    return out;
}

template <class F>
bool all_basis_triples(int n, F&& f)
{
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (!f(i, j, k)) return false;
    return true;
}

// (e_i . e_j) . e_k + e_i . (e_j . e_k), the anti-associator on basis vectors.
Vec basis_anti_associator(const Algebra& a, int i, int j, int k)
{
    return add(mul_basis_left(a, i, a.product(j, k)), mul_basis_right(a, a.product(i, j), k));
}

}  // namespace

Algebra::Algebra(int dim, bool commutative_hint)
    : dim_(dim), commutative_hint_(commutative_hint)
{
    if (dim < 0) throw std::invalid_argument("Algebra: negative dimension");
    c_.assign(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
}

std::size_t Algebra::index(int i, int j, int k) const
{
    if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
        throw std::out_of_range("Algebra: basis index out of range 1.." + std::to_string(dim_));
    return (static_cast<std::size_t>(i - 1) * dim_ + (j - 1)) * dim_ + (k - 1);
}

Algebra Algebra::from_terms(int dim, const std::vector<ProductTerm>& terms, bool commutative)
{
    Algebra a(dim, commutative);
    std::vector<char> seen(static_cast<std::size_t>(dim) * dim * dim, 0);
    for (const auto& t : terms) {
        std::size_t slot = a.index(t.i, t.j, t.k);
        if (seen[slot])
            throw std::invalid_argument("Algebra: duplicate entry for e" + std::to_string(t.i) + ".e" +
                                        std::to_string(t.j) + " on e" + std::to_string(t.k));
        seen[slot] = 1;
        a.c_[slot] = t.c;
        if (commutative && t.i != t.j) {
            std::size_t mirror = a.index(t.j, t.i, t.k);
            if (seen[mirror])
                throw std::invalid_argument("Algebra: entry for e" + std::to_string(t.j) + ".e" +
                                            std::to_string(t.i) + " given twice under mirroring");
            seen[mirror] = 1;
            a.c_[mirror] = t.c;
        }
    }
    return a;
}

Vec Algebra::product(int i, int j) const
{
    Vec v(dim_);
    for (int k = 1; k <= dim_; ++k) v[k - 1] = coeff(i, j, k);
    return v;
}

void Algebra::set_product(int i, int j, const Vec& v)
{
    if (v.size() != static_cast<std::size_t>(dim_)) throw std::invalid_argument("set_product: bad length");
    for (int k = 1; k <= dim_; ++k) set(i, j, k, v[k - 1]);
}

void Algebra::set_symmetric_product(int i, int j, const Vec& v)
{
    set_product(i, j, v);
    set_product(j, i, v);
}

void Algebra::validate() const
{
    if (commutative_hint_ && !is_commutative(*this))
        throw std::invalid_argument("Algebra: declared commutative but the table is not symmetric");
}

Vec multiply(const Algebra& a, const Vec& x, const Vec& y)
{
    require_len(a, x, "multiply");
    require_len(a, y, "multiply");
    const int n = a.dim();
    Vec out = zero_vec(n);
    for (int i = 1; i <= n; ++i) {
        if (sgn(x[i - 1]) == 0) continue;
        for (int j = 1; j <= n; ++j) {
            if (sgn(y[j - 1]) == 0) continue;
            Rational s = x[i - 1] * y[j - 1];
            for (int k = 1; k <= n; ++k) {
                const Rational& c = a.coeff(i, j, k);
                if (sgn(c) != 0) out[k - 1] += s * c;
            }
        }
    }
    return out;
}

Mat left_mult_matrix(const Algebra& a, const Vec& x)
{
    require_len(a, x, "left_mult");
    const int n = a.dim();
    Mat m(n, n);
    for (int j = 1; j <= n; ++j) m.set_col(j - 1, multiply(a, x, unit(n, j)));
    return m;
}

Vec jacobiator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z)
{
    Vec s = multiply(a, x, multiply(a, y, z));
    s = add(s, multiply(a, y, multiply(a, z, x)));
    return add(s, multiply(a, z, multiply(a, x, y)));
}

Vec anti_associator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z)
{
    return add(multiply(a, x, multiply(a, y, z)), multiply(a, multiply(a, x, y), z));
}

bool is_commutative(const Algebra& a)
{
    const int n = a.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (a.coeff(i, j, k) != a.coeff(j, i, k)) return false;
    return true;
}

bool is_trivial(const Algebra& a)
{
    return all_basis_triples(a.dim(), [&](int i, int j, int k) { return sgn(a.coeff(i, j, k)) == 0; });
}

bool is_jacobi_jordan(const Algebra& a)
{
    if (!is_commutative(a)) return false;
    const int n = a.dim();
    // cyclic sum is symmetric in its arguments for a commutative product
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k) {
                Vec s = mul_basis_left(a, i, a.product(j, k));
                s = add(s, mul_basis_left(a, j, a.product(k, i)));
                s = add(s, mul_basis_left(a, k, a.product(i, j)));
                if (!is_zero(s)) return false;
            }
    return true;
}

bool is_anti_associative(const Algebra& a)
{
    return all_basis_triples(a.dim(), [&](int i, int j, int k) { return is_zero(basis_anti_associator(a, i, j, k)); });
}

bool is_right_skew(const Algebra& a)
{
    return all_basis_triples(a.dim(), [&](int i, int j, int k) {
        return is_zero(add(basis_anti_associator(a, i, j, k), basis_anti_associator(a, i, k, j)));
    });
}

bool is_left_skew(const Algebra& a)
{
    return all_basis_triples(a.dim(), [&](int i, int j, int k) {
        return is_zero(add(basis_anti_associator(a, i, j, k), basis_anti_associator(a, j, i, k)));
    });
}

bool satisfies_admissibility_identity(const Algebra& a)
{
    return all_basis_triples(a.dim(), [&](int i, int j, int k) {
        Vec s = basis_anti_associator(a, i, j, k);
        s = add(s, basis_anti_associator(a, j, k, i));
        s = add(s, basis_anti_associator(a, k, i, j));
        s = add(s, basis_anti_associator(a, i, k, j));
        s = add(s, basis_anti_associator(a, k, j, i));
        s = add(s, basis_anti_associator(a, j, i, k));
        return is_zero(s);
    });
}

bool is_admissible_jj(const Algebra& a)
{
    bool by_identity = satisfies_admissibility_identity(a);
    bool by_symmetrization = is_jacobi_jordan(symmetrize(a));
    if (by_identity != by_symmetrization)
        throw InternalError("admissibility: cyclic identity and symmetrization disagree");
    return by_symmetrization;
}

Algebra symmetrize(const Algebra& a)
{
    const int n = a.dim();
    Algebra s(n, true);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) s.set(i, j, k, a.coeff(i, j, k) + a.coeff(j, i, k));
    return s;
}

bool jordan_identity_holds(const Algebra& a)
{
    if (!is_commutative(a)) throw std::invalid_argument("jordan_identity_holds: algebra is not commutative");
    const int n = a.dim();
    std::vector<Vec> xs;
    for (int i = 1; i <= n; ++i) {
        xs.push_back(unit(n, i));
        for (int j = i + 1; j <= n; ++j) {
            xs.push_back(add(unit(n, i), unit(n, j)));
            for (int k = j + 1; k <= n; ++k) xs.push_back(add(add(unit(n, i), unit(n, j)), unit(n, k)));
        }
    }
    for (const Vec& x : xs) {
        Vec x2 = multiply(a, x, x);
        for (int j = 1; j <= n; ++j) {
            Vec y = unit(n, j);
            Vec lhs = multiply(a, x2, multiply(a, y, x));
            Vec rhs = multiply(a, multiply(a, x2, y), x);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

std::vector<Vec> center(const Algebra& a)
{
    const int n = a.dim();
    // rows: coefficient of e_k in z.e_j and in e_j.z, as linear functions of z
    Mat m(2 * static_cast<std::size_t>(n) * n, n);
    std::size_t r = 0;
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            for (int l = 1; l <= n; ++l) {
                m(r, l - 1) = a.coeff(l, j, k);
                m(r + 1, l - 1) = a.coeff(j, l, k);
            }
            r += 2;
        }
    return kernel_basis(m);
}

std::vector<Vec> derived_subalgebra(const Algebra& a)
{
    const int n = a.dim();
    std::vector<Vec> prods;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) prods.push_back(a.product(i, j));
    return span_basis(n, prods);
}

namespace {

std::vector<Vec> product_span(const Algebra& a, const std::vector<Vec>& u, const std::vector<Vec>& v)
{
    std::vector<Vec> out;
    for (const Vec& x : u)
        for (const Vec& y : v) out.push_back(multiply(a, x, y));
    return out;
}

}  // namespace

InvariantFingerprint fingerprint(const Algebra& a)
{
    const int n = a.dim();
    InvariantFingerprint f;
    f.dim = n;
    f.derived_dim = static_cast<int>(derived_subalgebra(a).size());
    f.center_dim = static_cast<int>(center(a).size());

    // powers[k] is a basis of J^k
    std::vector<std::vector<Vec>> powers(2);
    for (int i = 1; i <= n; ++i) powers[1].push_back(unit(n, i));
    int previous = n;
    for (int k = 2; k <= n + 1; ++k) {
        std::vector<Vec> gens;
        for (int i = 1; i < k; ++i) {
            std::vector<Vec> p = product_span(a, powers[i], powers[k - i]);
            gens.insert(gens.end(), p.begin(), p.end());
        }
        powers.push_back(span_basis(n, gens));
        int d = static_cast<int>(powers.back().size());
        f.power_dims.push_back(d);
        if (d == previous || d == 0) break;
        previous = d;
    }
    return f;
}

bool is_algebra_morphism(const AlgebraMorphism& phi)
{
    const int n = phi.source.dim();
    const int m = phi.target.dim();
    if (phi.matrix.rows() != static_cast<std::size_t>(m) || phi.matrix.cols() != static_cast<std::size_t>(n))
        throw std::invalid_argument("is_algebra_morphism: matrix shape does not match source/target dimensions");
    std::vector<Vec> images;
    for (int i = 0; i < n; ++i) images.push_back(phi.matrix.col(i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Vec lhs = phi.matrix * phi.source.product(i, j);
            Vec rhs = multiply(phi.target, images[i - 1], images[j - 1]);
            if (lhs != rhs) return false;
        }
    return true;
}

bool is_algebra_isomorphism(const AlgebraMorphism& phi)
{
    if (phi.source.dim() != phi.target.dim()) return false;
    if (!is_algebra_morphism(phi)) return false;
    return sgn(determinant(phi.matrix)) != 0;
}

Algebra change_basis(const Algebra& a, const Mat& basis)
{
    const int n = a.dim();
    if (basis.rows() != static_cast<std::size_t>(n) || basis.cols() != static_cast<std::size_t>(n))
        throw std::invalid_argument("change_basis: basis matrix must be dim x dim");
    auto inv = inverse(basis);
    if (!inv) throw std::invalid_argument("change_basis: basis matrix is singular");
    Algebra out(n, a.commutative_hint());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            out.set_product(i, j, (*inv) * multiply(a, basis.col(i - 1), basis.col(j - 1)));
    return out;
}

Algebra restrict_to_subalgebra(const Algebra& a, const Mat& basis)
{
    if (basis.rows() != static_cast<std::size_t>(a.dim()))
        throw std::invalid_argument("restrict_to_subalgebra: basis rows do not match algebra dimension");
    const int m = static_cast<int>(basis.cols());
    if (rank(basis) != basis.cols()) throw std::invalid_argument("restrict_to_subalgebra: basis is dependent");
    Algebra out(m, a.commutative_hint());
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            auto coords = coordinates(basis, multiply(a, basis.col(i - 1), basis.col(j - 1)));
            if (!coords)
                throw std::invalid_argument("restrict_to_subalgebra: subspace is not closed under the product");
            out.set_product(i, j, *coords);
        }
    return out;
}

Algebra append_null_line(const Algebra& a)
{
    const int n = a.dim();
    Algebra out(n + 1, a.commutative_hint());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) out.set(i, j, k, a.coeff(i, j, k));
    return out;
}

}  // namespace jjc
