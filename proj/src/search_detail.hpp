#pragma once

#include <set>
#include <vector>

#include "greenseq/search.hpp"

namespace greenseq::detail {

struct RawEdge {
    CanonicalSeed from, to;
    MutationIndex label;
    bool operator<(const RawEdge& rhs) const {
        if (from != rhs.from) return from < rhs.from;
        if (to != rhs.to) return to < rhs.to;
        return label < rhs.label;
    }
};

/* Per-subtree results; sets keep the visited-graph bookkeeping deduplicated. */
struct Accum {
    std::vector<Mgs> hits;
    long truncated = 0;
    std::set<CanonicalSeed> nodes;
    std::set<RawEdge> edges;

    void merge(Accum&& o);
};

enum class NodeKind { hit, dead_end, truncated, expand };

/* Shared per-node logic: sign-coherence guard, stop test, green fan-out. */
NodeKind classify_node(const Seed& s, int depth, const SearchOptions& opt,
                       std::vector<MutationIndex>& greens_out);

/* Plain recursive engine; state vectors are the current path. */
void dfs_serial(std::vector<MutationIndex>& idx, std::vector<Seed>& trail,
                std::vector<CanonicalSeed>& ctrail, const SearchOptions& opt, Accum& acc);

/* Guard used on every visited seed: each c-column all >= 0 or all <= 0. */
void check_sign_coherent(const Seed& s);

SearchReport finalize(Accum&& acc, const SearchOptions& opt);

/* OpenMP task fan-out; falls back to dfs_serial without OpenMP. */
Accum run_parallel(const Seed& root, const SearchOptions& opt);

}  // namespace greenseq::detail
