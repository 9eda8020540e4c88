#include "greenseq/seed.hpp"

#include <cstdlib>
#include <string>

#include "greenseq/errors.hpp"

namespace greenseq {

Seed initial_seed(const QuiverSpec& q0) {
    const QuiverSpec& q = validate_quiver(q0);
    return Seed{q.b0, Mat::identity(q.n)};
}

namespace {

inline i64 mutated_entry(i64 mij, bool in_row_k, bool in_col_k, i64 mik, i64 bkj) {
    if (in_row_k || in_col_k) return -mij;
    if ((mik > 0 && bkj > 0) || (mik < 0 && bkj < 0)) return mij + mik * (bkj < 0 ? -bkj : bkj);
    return mij;
}

}  // namespace

Seed mutate(const Seed& s, MutationIndex k1) {
    const int n = s.n();
    if (k1 < 1 || k1 > n) throw PreconditionViolated("mutation index out of range");
    const int k = k1 - 1;
    Seed t{Mat(n, n), Mat(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t.b(i, j) = mutated_entry(s.b(i, j), i == k, j == k, s.b(i, k), s.b(k, j));
            t.c(i, j) = mutated_entry(s.c(i, j), false, j == k, s.c(i, k), s.b(k, j));
        }
    return t;
}

bool is_green(const Seed& s, MutationIndex k1) {
    const int n = s.n();
    if (k1 < 1 || k1 > n) throw PreconditionViolated("mutation index out of range");
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
        i64 v = s.c(i, k1 - 1);
        if (v < 0) return false;
        if (v > 0) nonzero = true;
    }
    return nonzero;
}

bool is_final(const Seed& s) {
    for (int i = 0; i < s.n(); ++i)
        for (int j = 0; j < s.n(); ++j)
            if (s.c(i, j) > 0) return false;
    return true;
}

std::vector<DimVector> dims_from_seed(const EulerData& ed, const Seed& s) {
    const int n = s.n();
    if (ed.n() != n) throw PreconditionViolated("Euler data rank does not match seed");
    i64 dc = det(s.c);
    if (dc != 1 && dc != -1) throw SingularC("c-matrix determinant is " + std::to_string(dc));
    Mat gamma = -s.c;
    /* V^t E Gamma = D  =>  V = (E Gamma)^-t D */
    RatMat v = inverse(RatMat(ed.e * gamma)).transposed() * RatMat(Mat::diagonal(ed.d));
    Mat vi = to_integer(v, "dims_from_seed");
    std::vector<DimVector> cols;
    cols.reserve(n);
    for (int j = 0; j < n; ++j) cols.push_back(vi.col(j));
    return cols;
}

Seed swap_labels(const Seed& s, MutationIndex j1, MutationIndex k1) {
    const int n = s.n();
    if (j1 < 1 || j1 > n || k1 < 1 || k1 > n)
        throw PreconditionViolated("bad label swap indices");
    if (j1 == k1) return s;
    const int j = j1 - 1, k = k1 - 1;
    auto sw = [&](int t) { return t == j ? k : t == k ? j : t; };
    Seed out{Mat(n, n), Mat(n, n)};
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            out.b(r, c) = s.b(sw(r), sw(c));
            out.c(r, c) = s.c(r, sw(c));  /* C rows live in the fixed initial basis */
        }
    return out;
}

bool nz_consistent(const std::vector<i64>& d, const Seed& before, const Seed& after) {
    const int n = before.n();
    if (after.n() != n || static_cast<int>(d.size()) != n)
        throw PreconditionViolated("rank mismatch in consistency check");
    RatMat x = inverse(RatMat(before.c)) * RatMat(after.c);
    RatMat dm(Mat::diagonal(d));
    RatMat lhs = inverse(dm) * x.transposed() * dm * RatMat(before.b) * x;
    Mat li;
    try {
        li = to_integer(lhs, "mutation consistency");
    } catch (const NonIntegralResult&) {
        return false;
    }
    return li == after.b;
}

}  // namespace greenseq
