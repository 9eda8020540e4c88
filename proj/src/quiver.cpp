#include "greenseq/quiver.hpp"

#include <algorithm>
#include <string>

#include "greenseq/errors.hpp"

namespace greenseq {

const QuiverSpec& validate_quiver(const QuiverSpec& q) {
    if (q.n < 1) throw InvalidInput("quiver rank must be at least 1");
    if (static_cast<int>(q.d.size()) != q.n) throw BadSymmetrizer("symmetrizer length != n");
    for (i64 di : q.d)
        if (di < 1) throw BadSymmetrizer("symmetrizer entries must be positive integers");
    if (q.b0.rows() != q.n || q.b0.cols() != q.n) throw InvalidInput("b0 must be n x n");
    for (int i = 0; i < q.n; ++i)
        if (q.b0(i, i) != 0) throw NonzeroDiagonal("b0 has a nonzero diagonal entry");
    for (int i = 0; i < q.n; ++i)
        for (int j = i + 1; j < q.n; ++j)
            if (q.d[i] * q.b0(i, j) != -q.d[j] * q.b0(j, i))
                throw NotSkewSymmetrizable("diag(d) * b0 is not skew-symmetric at (" +
                                           std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    return q;
}

namespace {

/* Kahn's algorithm over edges "j must precede i"; smallest vertex first. */
std::vector<int> topo_order(int n, const std::vector<std::pair<int, int>>& before) {
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (auto [j, i] : before) {
        succ[j].push_back(i);
        ++indeg[i];
    }
    std::vector<int> order;
    std::vector<bool> used(n, false);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!used[v] && indeg[v] == 0) { pick = v; break; }
        if (pick < 0) return {};
        used[pick] = true;
        order.push_back(pick);
        for (int w : succ[pick]) --indeg[w];
    }
    return order;
}

}  // namespace

std::vector<int> triangular_order(const Mat& e) {
    int n = e.rows();
    std::vector<std::pair<int, int>> before;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && e(i, j) != 0) before.emplace_back(j, i);  /* j before i */
    std::vector<int> order = topo_order(n, before);
    if (order.empty() && n > 0) throw CyclicQuiver("Euler matrix admits no triangular vertex order");
    return order;
}

EulerData euler_from_b0(const QuiverSpec& q0) {
    const QuiverSpec& q = validate_quiver(q0);
    int n = q.n;
    {
        std::vector<std::pair<int, int>> before;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (q.b0(i, j) > 0) before.emplace_back(j, i);
        if (topo_order(n, before).empty() && n > 0)
            throw CyclicQuiver("b0 orientation has a directed cycle; no hereditary order exists");
    }
    EulerData ed;
    ed.d = q.d;
    ed.e = Mat(n, n);
    for (int i = 0; i < n; ++i) {
        ed.e(i, i) = q.d[i];
        for (int j = 0; j < n; ++j)
            if (i != j) ed.e(i, j) = -std::max<i64>(0, q.d[i] * q.b0(i, j));
    }
    ed.l = Mat(n, n);
    ed.r = Mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            /* divisibility is forced by skew-symmetrizability */
            if (ed.e(i, j) % q.d[j] != 0 || ed.e(i, j) % q.d[i] != 0)
                throw NonIntegralResult("Euler factorization not integral");
            ed.l(i, j) = ed.e(i, j) / q.d[j];
            ed.r(i, j) = ed.e(i, j) / q.d[i];
        }
    if (det(ed.l) != 1 || det(ed.r) != 1) throw Error("Euler factors are not unipotent");
    if (ed.l.transposed() - ed.r != q.b0) throw Error("Euler data does not reproduce b0");
    if (Mat::diagonal(q.d) * q.b0 != ed.e.transposed() - ed.e)
        throw Error("Euler data does not symmetrize b0");
    return ed;
}

EulerData euler_from_explicit(const QuiverSpec& q0, const Mat& e) {
    const QuiverSpec& q = validate_quiver(q0);
    int n = q.n;
    if (e.rows() != n || e.cols() != n) throw InvalidInput("explicit Euler matrix must be n x n");
    for (int i = 0; i < n; ++i)
        if (e(i, i) != q.d[i]) throw InvalidInput("explicit Euler matrix diagonal must equal d");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (e(i, j) > 0 || e(j, i) > 0)
                throw InvalidInput("explicit Euler matrix must be nonpositive off the diagonal");
            if (e(i, j) != 0 && e(j, i) != 0)
                throw InvalidInput("explicit Euler matrix has a 2-cycle between vertices " +
                                   std::to_string(i + 1) + " and " + std::to_string(j + 1));
        }
    if (Mat::diagonal(q.d) * q.b0 != e.transposed() - e)
        throw InvalidInput("explicit Euler matrix does not satisfy D*b0 = E^t - E");
    EulerData ed;
    ed.d = q.d;
    ed.e = e;
    ed.l = Mat(n, n);
    ed.r = Mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (e(i, j) % q.d[j] != 0 || e(i, j) % q.d[i] != 0)
                throw InvalidInput("explicit Euler matrix is not divisible by the symmetrizer");
            ed.l(i, j) = e(i, j) / q.d[j];
            ed.r(i, j) = e(i, j) / q.d[i];
        }
    if (det(ed.l) != 1 || det(ed.r) != 1)
        throw InvalidInput("explicit Euler matrix factors are not unipotent");
    if (ed.l.transposed() - ed.r != q.b0)
        throw InvalidInput("explicit Euler matrix does not reproduce b0 as L^t - R");
    triangular_order(e);  /* throws CyclicQuiver when not an acyclic orientation */
    return ed;
}

i64 euler_pairing(const EulerData& ed, const DimVector& x, const DimVector& y) {
    int n = ed.n();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw InvalidInput("pairing vectors must have length n");
    std::vector<i64> ey = ed.e.mul(y);
    i64 acc = 0;
    for (int i = 0; i < n; ++i) acc += x[i] * ey[i];
    return acc;
}

namespace {

std::vector<DimVector> scaled_inverse_columns(const EulerData& ed, bool transpose, const char* what) {
    RatMat inv = inverse(RatMat(transpose ? ed.e.transposed() : ed.e));
    Mat m = to_integer(inv * RatMat(Mat::diagonal(ed.d)), what);
    std::vector<DimVector> cols;
    for (int j = 0; j < ed.n(); ++j) {
        DimVector v = m.col(j);
        for (int i = 0; i < ed.n(); ++i)
            if (v[i] < 0) throw Error(std::string(what) + ": negative entry");
        if (v[j] < 1) throw Error(std::string(what) + ": vanishing top coordinate");
        cols.push_back(std::move(v));
    }
    return cols;
}

}  // namespace

std::vector<DimVector> projective_dims(const EulerData& ed) {
    return scaled_inverse_columns(ed, true, "projective dims");
}

std::vector<DimVector> injective_dims(const EulerData& ed) {
    return scaled_inverse_columns(ed, false, "injective dims");
}

}  // namespace greenseq
