#pragma once

#include <optional>
#include <vector>

#include "greenseq/search.hpp"

namespace greenseq {

/* ell value standing for an unbounded alternating side. */
constexpr int kEllInfinite = -1;

/*
 * Local rank-2 polygon at a seed where both j and k are green: the two
 * maximal alternating green runs starting with j resp. k.  One run always has
 * length 2; the other has length ell with |b_jk * b_kj| = 0,1,2,3,>=4 giving
 * ell = 2,3,4,6,infinite.  Finite sides close up to the same seed, for
 * ell = 3 up to the j <-> k relabel.
 */
struct PolygonProfile {
    MutationIndex j = 0, k = 0;
    i64 product = 0;
    int ell = 0; /* 2, 3, 4, 6 or kEllInfinite */
    std::vector<MutationIndex> short_side;          /* length 2 */
    std::vector<MutationIndex> long_side;           /* length ell; empty when infinite */
    Seed base;                                      /* seed the polygon is anchored at */
    Seed short_end;                                 /* seed after the short side */
    std::optional<Seed> long_end;                   /* absent when infinite */
};

/* Throws NotGreen unless both directions are green; AlternationMismatch when
 * the simulated runs contradict the product table. */
PolygonProfile polygon_profile(const Seed& s, MutationIndex j, MutationIndex k);

/*
 * Rank-2 identity for the weight-(1,2) configuration: with b_jk = -1 and
 * b_kj = 2 (both green), mutating (j,k) and (k,j,k,j) land on the same
 * extended exchange matrix.  Throws PreconditionViolated off the configuration.
 */
bool verify_c2_identity(const Seed& s, MutationIndex j, MutationIndex k);

enum class DeformDirection { short_to_long, long_to_short };

struct DeformationEdge {
    Mgs target;
    int position = 0; /* 0-based offset of the replaced block */
    MutationIndex j = 0, k = 0;
    int ell = 0;
    DeformDirection direction = DeformDirection::short_to_long;
};

/*
 * All elementary polygonal deformations of one maximal green sequence: at
 * every position and green pair whose finite polygon side matches the index
 * block, swap in the other side (transposing j,k in the tail when ell = 3)
 * and replay from the initial seed.  Length change is ell - 2 in absolute
 * value.  Throws ReplayFailed when a rebuilt sequence is not a valid MGS.
 */
std::vector<DeformationEdge> elementary_deformations(const Mgs& m);

struct ClassPartition {
    std::vector<std::vector<int>> classes;                    /* indices into report.mgs, each sorted */
    std::vector<std::vector<MutationIndex>> representatives;  /* lex-least index sequence per class */
};

/* Union-find over the complete MGS set under elementary deformations. */
ClassPartition deformation_classes(const SearchReport& report);

}  // namespace greenseq
