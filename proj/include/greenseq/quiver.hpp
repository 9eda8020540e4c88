#pragma once

#include <vector>

#include "greenseq/matrix.hpp"

namespace greenseq {

using DimVector = std::vector<i64>;

/*
 * Valued quiver input: symmetrizer diagonal d (d_i >= 1) and exchange matrix
 * b0 with zero diagonal such that diag(d) * b0 is skew-symmetric.
 */
struct QuiverSpec {
    int n = 0;
    std::vector<i64> d;
    Mat b0;
};

/* Throws BadSymmetrizer / NonzeroDiagonal / NotSkewSymmetrizable. Returns its input. */
const QuiverSpec& validate_quiver(const QuiverSpec& q);

/*
 * Euler form data of the hereditary algebra attached to an acyclic b0:
 * E = L*D = D*R with L, R unipotent integer matrices, L^t - R = b0,
 * and diag(d) * b0 = E^t - E.
 */
struct EulerData {
    Mat e, l, r;
    std::vector<i64> d;
    int n() const { return e.rows(); }
};

/* Off-diagonal E_ij = -max(0, d_i * b0_ij); throws CyclicQuiver when the
 * digraph with an edge i -> j for b0_ij > 0 has a directed cycle. */
EulerData euler_from_b0(const QuiverSpec& q);

/* Accepts an explicitly supplied Euler matrix and checks every invariant
 * against q; throws InvalidInput on any mismatch. */
EulerData euler_from_explicit(const QuiverSpec& q, const Mat& e);

/* <x,y> = x^t E y, exact. */
i64 euler_pairing(const EulerData& ed, const DimVector& x, const DimVector& y);

/* dim P_i = d_i * (E^-t e_i) and dim I_i = d_i * (E^-1 e_i): columns of
 * E^-t * D and E^-1 * D, asserted integral and entrywise >= 0. */
std::vector<DimVector> projective_dims(const EulerData& ed);
std::vector<DimVector> injective_dims(const EulerData& ed);

/* Vertex order making E lower triangular (so supp P_i lies at positions <= i);
 * smallest-index-first tie break, throws CyclicQuiver when none exists. */
std::vector<int> triangular_order(const Mat& e);

}  // namespace greenseq
