#ifndef JJC_ALGEBRA_HPP
#define JJC_ALGEBRA_HPP

#include "jjc/linalg.hpp"

#include <vector>

namespace jjc {

/// One structure constant: e_i . e_j has coefficient c on e_k (1-based).
struct ProductTerm {
    int i;
    int j;
    int k;
    Rational c;
};

/*
 * Finite-dimensional algebra given by dense structure constants
 *   e_i . e_j = sum_k c[i][j][k] e_k.
 *
 * Basis labels are 1-based. The commutative flag is a declared hint: builders
 * that set it mirror entries, and validate() checks the hint against the
 * table.
 */
class Algebra {
public:
    explicit Algebra(int dim = 0, bool commutative_hint = true);

    static Algebra trivial(int dim) { return Algebra(dim, true); }
    /// With commutative = true every (i, j, k) entry is mirrored to (j, i, k);
    /// repeated entries for the same slot are rejected.
    static Algebra from_terms(int dim, const std::vector<ProductTerm>& terms, bool commutative = true);

    int dim() const { return dim_; }
    bool commutative_hint() const { return commutative_hint_; }

    const Rational& coeff(int i, int j, int k) const { return c_[index(i, j, k)]; }
    void set(int i, int j, int k, const Rational& c) { c_[index(i, j, k)] = c; }

    /// e_i . e_j
    Vec product(int i, int j) const;
    void set_product(int i, int j, const Vec& v);
    /// Sets e_i . e_j and e_j . e_i.
    void set_symmetric_product(int i, int j, const Vec& v);

    /// Throws std::invalid_argument when the commutative hint is contradicted.
    void validate() const;

    friend bool operator==(const Algebra& a, const Algebra& b)
    {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

private:
    std::size_t index(int i, int j, int k) const;

    int dim_;
    bool commutative_hint_;
    std::vector<Rational> c_;
};

Vec multiply(const Algebra& a, const Vec& x, const Vec& y);
/// Matrix of y -> x . y (columns are images of basis vectors).
Mat left_mult_matrix(const Algebra& a, const Vec& x);

/// x.(y.z) + y.(z.x) + z.(x.y)
Vec jacobiator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z);
/// x.(y.z) + (x.y).z
Vec anti_associator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z);

bool is_commutative(const Algebra& a);
bool is_trivial(const Algebra& a);
bool is_jacobi_jordan(const Algebra& a);
bool is_anti_associative(const Algebra& a);
bool is_right_skew(const Algebra& a);
bool is_left_skew(const Algebra& a);

/// Cyclic criterion: sum_cyc (x,y,z) = - sum_cyc (x,z,y) on basis triples.
bool satisfies_admissibility_identity(const Algebra& a);
/// Symmetrization is a JJ-algebra. Cross-checked against the cyclic
/// criterion; throws InternalError if the two disagree.
bool is_admissible_jj(const Algebra& a);

/// x . y := x o y + y o x
Algebra symmetrize(const Algebra& a);

/// x^2.(y.x) = (x^2.y).x for x ranging over basis vectors and sums of two or
/// three distinct basis vectors (enough to pin the cubic dependence on x),
/// y over the basis. Throws std::invalid_argument on non-commutative input.
bool jordan_identity_holds(const Algebra& a);

/// Basis of {z : z.x = x.z = 0 for all x}.
std::vector<Vec> center(const Algebra& a);
/// Canonical basis of span{e_i . e_j}.
std::vector<Vec> derived_subalgebra(const Algebra& a);

/// Basis-independent invariants. power_dims lists dim J^2, dim J^3, ... with
/// J^k = sum_{i+j=k} J^i . J^j, stopping once the sequence stabilizes.
struct InvariantFingerprint {
    int dim = 0;
    int derived_dim = 0;
    int center_dim = 0;
    std::vector<int> power_dims;

    friend bool operator==(const InvariantFingerprint&, const InvariantFingerprint&) = default;
};
InvariantFingerprint fingerprint(const Algebra& a);

/// Linear map between algebras; column j is the image of source basis e_{j+1}.
struct AlgebraMorphism {
    Algebra source;
    Algebra target;
    Mat matrix;
};

/// phi(e_i . e_j) = phi(e_i) . phi(e_j) on all basis pairs. Throws on a
/// matrix whose shape does not match the algebras.
bool is_algebra_morphism(const AlgebraMorphism& phi);
/// Morphism, square and invertible.
bool is_algebra_isomorphism(const AlgebraMorphism& phi);

/// Structure constants in the basis formed by the columns of `basis`
/// (invertible). The result is isomorphic to `a` via `basis`.
Algebra change_basis(const Algebra& a, const Mat& basis);

/// Product restricted to the span of the columns of `basis`, expressed in
/// that basis. Throws std::invalid_argument if the span is not closed.
Algebra restrict_to_subalgebra(const Algebra& a, const Mat& basis);

/// a (+) <e> with e appended last and e annihilating everything.
Algebra append_null_line(const Algebra& a);

}  // namespace jjc

#endif
