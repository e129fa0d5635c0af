#ifndef JJC_LINALG_HPP
#define JJC_LINALG_HPP

#include "jjc/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace jjc {

/// Coordinates in a fixed basis. Storage is 0-based; basis labels used by the
/// algebra layer (e_1 ... e_n) are 1-based.
using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
/// The basis vector e_i of an n-dimensional space, i in 1..n.
Vec unit(std::size_t n, int i);

Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scaled(const Rational& c, const Vec& x);
/// y += c * x
void axpy(const Rational& c, const Vec& x, Vec& y);
Rational dot(const Vec& x, const Vec& y);
bool is_zero(const Vec& x);

/// Dense row-major rational matrix with explicit shape.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);
    Mat(std::initializer_list<std::initializer_list<Rational>> rows);

    static Mat identity(std::size_t n);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Mat from_columns(std::size_t rows, const std::vector<Vec>& cols);
    static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    void set_col(std::size_t c, const Vec& v);
    void set_row(std::size_t r, const Vec& v);

    Mat transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_skew() const;

    friend bool operator==(const Mat& a, const Mat& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Rational& c, const Mat& a);
Vec operator*(const Mat& a, const Vec& x);

/// Reduced row echelon form with the fixed pivot rule: columns are scanned
/// left to right and the pivot is the lowest-indexed remaining row with a
/// nonzero entry in that column.
struct Echelon {
    Mat reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
Echelon rref(Mat a);

std::size_t rank(const Mat& a);

/// Some x with a * x = b, free variables set to zero; nullopt when the
/// system is inconsistent. Throws std::invalid_argument on shape mismatch.
std::optional<Vec> solve_linear(const Mat& a, const Vec& b);

/// Null-space basis, one vector per free column (in column order), each with
/// a 1 in its free column: the reduced echelon basis. Empty for trivial kernel.
std::vector<Vec> kernel_basis(const Mat& a);

/// Exact determinant. Rows are cleared of denominators and reduced with
/// fraction-free (Bareiss) elimination. Throws on non-square input.
Rational determinant(const Mat& a);

/// Inverse of a square matrix, nullopt when singular.
std::optional<Mat> inverse(const Mat& a);

/// Canonical basis (nonzero rows of the reduced echelon form) of the span of
/// the given vectors of length n.
std::vector<Vec> span_basis(std::size_t n, const std::vector<Vec>& vectors);

/// Coordinates of v in the basis given by the columns of `basis`, nullopt if
/// v is not in their span.
std::optional<Vec> coordinates(const Mat& basis, const Vec& v);

}  // namespace jjc

#endif
