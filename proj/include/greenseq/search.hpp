#pragma once

#include <functional>
#include <map>
#include <vector>

#include "greenseq/seed.hpp"

namespace greenseq {

/*
 * Canonical representative of a seed under direction relabeling: columns of C
 * sorted in decreasing lexicographic order (top row first), with the same
 * permutation conjugating B.  Two seeds carry the same unlabeled cluster
 * exactly when their canonical forms coincide.
 */
struct CanonicalSeed {
    Seed seed;

    bool operator==(const CanonicalSeed& rhs) const { return seed == rhs.seed; }
    bool operator!=(const CanonicalSeed& rhs) const { return seed != rhs.seed; }
    bool operator<(const CanonicalSeed& rhs) const { return seed < rhs.seed; }
};

CanonicalSeed canonicalize(const Seed& s);

/* Trail of seeds with trail[t+1] = mutate(trail[t], indices[t]), each step green. */
struct GreenPath {
    std::vector<MutationIndex> indices;
    std::vector<Seed> trail;

    int length() const { return static_cast<int>(indices.size()); }
    const Seed& last() const { return trail.back(); }
    bool operator==(const GreenPath& rhs) const { return indices == rhs.indices && trail == rhs.trail; }
};

/* A green path whose final seed has no positive c-entry. */
using Mgs = GreenPath;

struct GraphEdge {
    int from = 0, to = 0;
    MutationIndex label = 0;
    bool operator==(const GraphEdge& rhs) const { return from == rhs.from && to == rhs.to && label == rhs.label; }
    bool operator<(const GraphEdge& rhs) const {
        if (from != rhs.from) return from < rhs.from;
        if (to != rhs.to) return to < rhs.to;
        return label < rhs.label;
    }
};

struct SearchReport {
    std::vector<Mgs> mgs;          /* stop-hits in lexicographic index order, capped at max_count */
    long mgs_total = 0;            /* uncapped number of stop-hits */
    bool complete = true;          /* no branch hit the depth bound */
    bool mgs_certified = false;    /* truncated run whose MGS set was reproduced at doubled depth */
    long truncated_branches = 0;
    bool overflow = false;         /* mgs list truncated by max_count */
    std::map<int, long> length_hist;
    std::vector<CanonicalSeed> nodes;  /* every seed encountered, canonicalized, sorted */
    std::vector<GraphEdge> edges;      /* indices into nodes, sorted */
    int max_depth = 0;
};

struct SearchOptions {
    int max_depth = 0;
    long max_count = 1'000'000;
    bool parallel = false;
    std::function<bool(const Seed&)> stop;  /* defaults to is_final */
};

/*
 * Depth-first enumeration of green paths from [b0 | I]; children are explored
 * in increasing direction order, so the report is deterministic and identical
 * for the serial and the task-parallel engine.
 */
SearchReport enumerate_green_paths(const QuiverSpec& q, const SearchOptions& opt);

/* enumerate_green_paths with stop = is_final plus the maximal-green-sequence
 * postconditions on every hit (ends in the initial cluster's final form,
 * every direction mutated, length >= n). */
SearchReport enumerate_mgs(const QuiverSpec& q, int max_depth, bool parallel = false,
                           long max_count = 1'000'000);

/*
 * The MGS set of a report is settled when the search ran to exhaustion
 * (complete) or, failing that — affine quivers always carry infinite green
 * paths, so exhaustion is unattainable there — when an identical set was
 * found again at doubled depth (mgs_certified).
 */
bool mgs_set_settled(const SearchReport& report);

/* Lengths present form an integer interval; requires a settled report. */
bool no_gap(const SearchReport& report);

/* Smallest l0 with count(len <= l0) > 0 and count(len <= l0) = count(len <= l0 + 1). */
int empirical_max_from_hist(const std::map<int, long>& hist);

/* Runs at depth and 2*depth, demands completeness and identical MGS sets,
 * then applies the plateau rule; throws IncompleteSearch otherwise. */
int empirical_max_length(const QuiverSpec& q, int depth, bool parallel = false);

struct ExchangeGraph {
    std::vector<CanonicalSeed> nodes;
    std::vector<GraphEdge> edges;
};

ExchangeGraph export_exchange_graph(const SearchReport& report);

struct StabilityResult {
    SearchReport base;     /* run at max_depth */
    SearchReport doubled;  /* run at 2 * max_depth */
    bool stable = false;   /* identical MGS index sequences */
};

StabilityResult enumerate_mgs_with_stability(const QuiverSpec& q, int max_depth,
                                             bool parallel = false, long max_count = 1'000'000);

}  // namespace greenseq
