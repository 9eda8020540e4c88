#pragma once

#include <vector>

#include "greenseq/quiver.hpp"

namespace greenseq {

/* Mutation directions are 1-based throughout the public interface. */
using MutationIndex = int;

/*
 * Extended exchange matrix [B; C] split into its two n x n halves.
 * Value semantics; mutation returns a fresh seed.
 */
struct Seed {
    Mat b, c;

    int n() const { return b.rows(); }
    bool operator==(const Seed& rhs) const { return b == rhs.b && c == rhs.c; }
    bool operator!=(const Seed& rhs) const { return !(*this == rhs); }
    bool operator<(const Seed& rhs) const { return c != rhs.c ? c < rhs.c : b < rhs.b; }
};

/* [b0 | I]. */
Seed initial_seed(const QuiverSpec& q);

/* Matrix mutation at direction k applied to all 2n rows of [B; C]. */
Seed mutate(const Seed& s, MutationIndex k);

/* Column k of C is entrywise >= 0 and nonzero. */
bool is_green(const Seed& s, MutationIndex k);

/* C has no positive entry. */
bool is_final(const Seed& s);

/*
 * Dimension-vector columns V solving V^t E Gamma = D with Gamma = -C,
 * asserted integral; throws SingularC when |det C| != 1.
 */
std::vector<DimVector> dims_from_seed(const EulerData& ed, const Seed& s);

/* Relabel directions j <-> k: swap columns j,k of both halves and rows j,k of B. */
Seed swap_labels(const Seed& s, MutationIndex j, MutationIndex k);

/* One-step consistency: B' = D^-1 X^t D B X with X = C^-1 C' across a mutation. */
bool nz_consistent(const std::vector<i64>& d, const Seed& before, const Seed& after);

}  // namespace greenseq
