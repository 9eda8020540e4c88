#include "greenseq/matrix.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "greenseq/errors.hpp"

namespace greenseq {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::diagonal(const std::vector<i64>& d) {
    Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = d[i];
    return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<i64>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Mat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw Error("ragged matrix literal");
        int j = 0;
        for (i64 v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix product shape mismatch");
    Mat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            i64 v = (*this)(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += v * rhs(k, j);
        }
    return out;
}

Mat Mat::operator+(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix sum shape mismatch");
    Mat out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) += rhs(i, j);
    return out;
}

Mat Mat::operator-(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix difference shape mismatch");
    Mat out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) -= rhs(i, j);
    return out;
}

Mat Mat::operator-() const {
    Mat out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = -out(i, j);
    return out;
}

std::vector<i64> Mat::col(int j) const {
    std::vector<i64> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<i64> Mat::row(int i) const {
    std::vector<i64> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

std::vector<i64> Mat::mul(const std::vector<i64>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw Error("matrix-vector shape mismatch");
    std::vector<i64> y(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
}

bool Mat::operator<(const Mat& rhs) const {
    if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
    if (cols_ != rhs.cols_) return cols_ < rhs.cols_;
    return a_ < rhs.a_;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rows_; ++i) {
        if (i) os << ',';
        os << '[';
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

i64 det(const Mat& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    Mat a = m;
    i64 sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  /* division exact (Bareiss) */
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rat::Rat(i64 n, i64 d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rat Rat::operator+(const Rat& r) const { return Rat(num * r.den + r.num * den, den * r.den); }
Rat Rat::operator-(const Rat& r) const { return Rat(num * r.den - r.num * den, den * r.den); }
Rat Rat::operator*(const Rat& r) const { return Rat(num * r.num, den * r.den); }
Rat Rat::operator/(const Rat& r) const {
    if (r.num == 0) throw Error("rational division by zero");
    return Rat(num * r.den, den * r.num);
}

RatMat::RatMat(const Mat& m) : RatMat(m.rows(), m.cols()) {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = Rat(m(i, j));
}

RatMat RatMat::transposed() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix product shape mismatch");
    RatMat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rhs.cols_; ++j) {
            Rat acc(0);
            for (int k = 0; k < cols_; ++k) acc = acc + (*this)(i, k) * rhs(k, j);
            out(i, j) = acc;
        }
    return out;
}

RatMat inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    int n = m.rows();
    RatMat a = m;
    RatMat inv(n, n);
    for (int i = 0; i < n; ++i) inv(i, i) = Rat(1);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!a(i, k).is_zero()) { p = i; break; }
        if (p < 0) throw SingularMatrix("singular matrix in exact inverse");
        if (p != k)
            for (int j = 0; j < n; ++j) { std::swap(a(k, j), a(p, j)); std::swap(inv(k, j), inv(p, j)); }
        Rat piv = a(k, k);
        for (int j = 0; j < n; ++j) { a(k, j) = a(k, j) / piv; inv(k, j) = inv(k, j) / piv; }
        for (int i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            Rat f = a(i, k);
            for (int j = 0; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(k, j);
                inv(i, j) = inv(i, j) - f * inv(k, j);
            }
        }
    }
    return inv;
}

Mat to_integer(const RatMat& m, const char* what) {
    Mat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& r = m(i, j);
            if (!r.is_integer())
                throw NonIntegralResult(std::string(what) + ": non-integral entry " +
                                        std::to_string(r.num) + "/" + std::to_string(r.den));
            out(i, j) = r.num;
        }
    return out;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMat& m) {
    int rows = m.rows(), cols = m.cols();
    RatMat a = m;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
        Rat piv = a(r, c);
        for (int j = 0; j < cols; ++j) a(r, j) = a(r, j) / piv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rat f = a(i, c);
            for (int j = 0; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[c] = Rat(1);
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a(static_cast<int>(i), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace greenseq
