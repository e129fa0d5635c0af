#include "jjc/linalg.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace jjc {

namespace {

void require_same_size(const Vec& x, const Vec& y, const char* what)
{
    if (x.size() != y.size())
        throw std::invalid_argument(std::string(what) + ": length mismatch " + std::to_string(x.size()) + " vs " +
                                    std::to_string(y.size()));
}

}  // namespace

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit(std::size_t n, int i)
{
    if (i < 1 || static_cast<std::size_t>(i) > n)
        throw std::out_of_range("basis index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    Vec v = zero_vec(n);
    v[static_cast<std::size_t>(i - 1)] = 1;
    return v;
}

Vec add(const Vec& x, const Vec& y)
{
    require_same_size(x, y, "add");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

Vec sub(const Vec& x, const Vec& y)
{
    require_same_size(x, y, "sub");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

Vec scaled(const Rational& c, const Vec& x)
{
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
}

void axpy(const Rational& c, const Vec& x, Vec& y)
{
    require_same_size(x, y, "axpy");
    if (c == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) y[i] += c * x[i];
}

Rational dot(const Vec& x, const Vec& y)
{
    require_same_size(x, y, "dot");
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0 && y[i] != 0) s += x[i] * y[i];
    return s;
}

bool is_zero(const Vec& x)
{
    for (const auto& v : x)
        if (v != 0) return false;
    return true;
}

// --- Mat --------------------------------------------------------------------

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("Mat: ragged initializer");
        for (const auto& v : r) data_.push_back(v);
    }
}

Mat Mat::identity(std::size_t n)
{
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<Vec>& cols)
{
    Mat m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
    return m;
}

Mat Mat::from_rows(std::size_t cols, const std::vector<Vec>& rows)
{
    Mat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Vec Mat::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Mat::col(std::size_t c) const
{
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Mat::set_col(std::size_t c, const Vec& v)
{
    if (v.size() != rows_) throw std::invalid_argument("Mat::set_col: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Mat::set_row(std::size_t r, const Vec& v)
{
    if (v.size() != cols_) throw std::invalid_argument("Mat::set_row: length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

Mat Mat::transpose() const
{
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Mat::is_zero() const
{
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

bool Mat::is_symmetric() const
{
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

bool Mat::is_skew() const
{
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            if ((*this)(r, c) != -(*this)(c, r)) return false;
    return true;
}

Mat operator+(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("Mat +: shape mismatch");
    Mat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Mat operator-(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("Mat -: shape mismatch");
    Mat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

Mat operator*(const Mat& a, const Mat& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("Mat *: shape mismatch");
    Mat r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

Mat operator*(const Rational& c, const Mat& a)
{
    Mat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
    return r;
}

Vec operator*(const Mat& a, const Vec& x)
{
    if (a.cols() != x.size()) throw std::invalid_argument("Mat * Vec: shape mismatch");
    Vec r = zero_vec(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0 && x[k] != 0) r[i] += a(i, k) * x[k];
    return r;
}

// --- elimination ------------------------------------------------------------

Echelon rref(Mat a)
{
    Echelon e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));

        const Rational inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;

        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            const Rational f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (a(row, c) != 0) a(r, c) -= f * a(row, c);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.reduced = std::move(a);
    return e;
}

std::size_t rank(const Mat& a) { return rref(a).pivots.size(); }

std::optional<Vec> solve_linear(const Mat& a, const Vec& b)
{
    if (a.rows() != b.size())
        throw std::invalid_argument("solve_linear: " + std::to_string(a.rows()) + " rows but rhs of length " +
                                    std::to_string(b.size()));
    Mat aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const Echelon e = rref(std::move(aug));
    Vec x = zero_vec(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, a.cols());
    }
    return x;
}

std::vector<Vec> kernel_basis(const Mat& a)
{
    const Echelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(a.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const Mat& a)
{
    if (!a.is_square()) throw std::invalid_argument("determinant: non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    // Clear denominators row by row; det(a) = det(m) / prod(scale).
    std::vector<mpz_class> m(n * n);
    mpz_class scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < n; ++c) m[r * n + c] = a(r, c).get_num() * (l / a(r, c).get_den());
        scale *= l;
    }

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap * n + k] == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m[k * n + c], m[swap * n + c]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i * n + j] = t;
            }
        }
        prev = m[k * n + k];
    }
    Rational det(m[(n - 1) * n + (n - 1)] * sign, scale);
    det.canonicalize();
    return det;
}

std::optional<Mat> inverse(const Mat& a)
{
    if (!a.is_square()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return Mat();
    Mat aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = 1;
    }
    const Echelon e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

std::vector<Vec> span_basis(std::size_t n, const std::vector<Vec>& vectors)
{
    if (vectors.empty()) return {};
    const Echelon e = rref(Mat::from_rows(n, vectors));
    std::vector<Vec> basis;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis.push_back(e.reduced.row(r));
    return basis;
}

std::optional<Vec> coordinates(const Mat& basis, const Vec& v) { return solve_linear(basis, v); }

}  // namespace jjc
