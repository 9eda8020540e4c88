#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace greenseq {

using i64 = long long;

/*
 * Dense row-major integer matrix.  Everything in this library is desk scale
 * (rank <= 8, entries far below 2^40), so int64 arithmetic is exact.
 */
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, i64 fill = 0)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

    static Mat identity(int n);
    static Mat diagonal(const std::vector<i64>& d);
    static Mat from_rows(std::initializer_list<std::initializer_list<i64>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    i64& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    i64 operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Mat transposed() const;
    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat operator-() const;

    std::vector<i64> col(int j) const;
    std::vector<i64> row(int i) const;
    std::vector<i64> mul(const std::vector<i64>& x) const;

    bool operator==(const Mat& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }
    bool operator!=(const Mat& rhs) const { return !(*this == rhs); }
    bool operator<(const Mat& rhs) const;  /* lexicographic; total order for map keys */

    std::string to_string() const;  /* row-major: [[0,-1],[2,0]] */

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<i64> a_;
};

/* Exact determinant of a square integer matrix (fraction-free Bareiss). */
i64 det(const Mat& m);

/* Reduced fraction with positive denominator. */
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d);

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    Rat operator+(const Rat& r) const;
    Rat operator-(const Rat& r) const;
    Rat operator*(const Rat& r) const;
    Rat operator/(const Rat& r) const;
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
    bool operator==(const Rat& r) const { return num == r.num && den == r.den; }
    bool operator!=(const Rat& r) const { return !(*this == r); }
};

/* Dense rational matrix; only used for the exact solves. */
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    explicit RatMat(const Mat& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RatMat transposed() const;
    RatMat operator*(const RatMat& rhs) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

/* Exact inverse; throws SingularMatrix. */
RatMat inverse(const RatMat& m);

/* Integer content check; throws NonIntegralResult when any entry has den != 1. */
Mat to_integer(const RatMat& m, const char* what);

/* Basis of the rational kernel (list of length-n columns). Deterministic. */
std::vector<std::vector<Rat>> kernel_basis(const RatMat& m);

}  // namespace greenseq
