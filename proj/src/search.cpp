#include "greenseq/search.hpp"

#include <algorithm>
#include <numeric>

#include "greenseq/errors.hpp"
#include "search_detail.hpp"

namespace greenseq {

CanonicalSeed canonicalize(const Seed& s) {
    const int n = s.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    /* decreasing lexicographic on c-columns; ties impossible while |det C| = 1 */
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        for (int i = 0; i < n; ++i) {
            if (s.c(i, a) != s.c(i, b)) return s.c(i, a) > s.c(i, b);
        }
        return false;
    });
    Seed t{Mat(n, n), Mat(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t.b(i, j) = s.b(perm[i], perm[j]);
            t.c(i, j) = s.c(i, perm[j]);
        }
    return CanonicalSeed{t};
}

namespace detail {

void Accum::merge(Accum&& o) {
    if (hits.empty()) {
        hits = std::move(o.hits);
    } else {
        hits.insert(hits.end(), std::make_move_iterator(o.hits.begin()),
                    std::make_move_iterator(o.hits.end()));
    }
    truncated += o.truncated;
    nodes.merge(o.nodes);
    edges.merge(o.edges);
}

void check_sign_coherent(const Seed& s) {
    const int n = s.n();
    for (int j = 0; j < n; ++j) {
        bool pos = false, neg = false;
        for (int i = 0; i < n; ++i) {
            if (s.c(i, j) > 0) pos = true;
            if (s.c(i, j) < 0) neg = true;
        }
        if (pos && neg) throw Error("sign coherence violated on a green path");
    }
}

NodeKind classify_node(const Seed& s, int depth, const SearchOptions& opt,
                       std::vector<MutationIndex>& greens_out) {
    check_sign_coherent(s);
    if (opt.stop(s)) return NodeKind::hit;
    greens_out.clear();
    for (MutationIndex k = 1; k <= s.n(); ++k)
        if (is_green(s, k)) greens_out.push_back(k);
    if (greens_out.empty()) return NodeKind::dead_end;
    if (depth >= opt.max_depth) return NodeKind::truncated;
    return NodeKind::expand;
}

void dfs_serial(std::vector<MutationIndex>& idx, std::vector<Seed>& trail,
                std::vector<CanonicalSeed>& ctrail, const SearchOptions& opt, Accum& acc) {
    acc.nodes.insert(ctrail.back());
    std::vector<MutationIndex> greens;
    switch (classify_node(trail.back(), static_cast<int>(idx.size()), opt, greens)) {
        case NodeKind::hit:
            acc.hits.push_back(Mgs{idx, trail});
            return;
        case NodeKind::dead_end:
            return;
        case NodeKind::truncated:
            ++acc.truncated;
            return;
        case NodeKind::expand:
            break;
    }
    for (MutationIndex k : greens) {
        Seed child = mutate(trail.back(), k);
        CanonicalSeed cc = canonicalize(child);
        for (const CanonicalSeed& seen : ctrail)
            if (seen == cc) throw Error("green path revisited a cluster");
        acc.edges.insert(RawEdge{ctrail.back(), cc, k});
        idx.push_back(k);
        trail.push_back(std::move(child));
        ctrail.push_back(std::move(cc));
        dfs_serial(idx, trail, ctrail, opt, acc);
        idx.pop_back();
        trail.pop_back();
        ctrail.pop_back();
    }
}

SearchReport finalize(Accum&& acc, const SearchOptions& opt) {
    SearchReport r;
    r.max_depth = opt.max_depth;
    r.truncated_branches = acc.truncated;
    r.complete = acc.truncated == 0;
    r.mgs_total = static_cast<long>(acc.hits.size());
    for (const Mgs& m : acc.hits) ++r.length_hist[m.length()];
    if (r.mgs_total > opt.max_count) {
        acc.hits.resize(static_cast<size_t>(opt.max_count));
        r.overflow = true;
    }
    r.mgs = std::move(acc.hits);
    r.nodes.assign(acc.nodes.begin(), acc.nodes.end());
    auto node_id = [&](const CanonicalSeed& c) {
        return static_cast<int>(std::lower_bound(r.nodes.begin(), r.nodes.end(), c) - r.nodes.begin());
    };
    r.edges.reserve(acc.edges.size());
    for (const RawEdge& e : acc.edges) r.edges.push_back(GraphEdge{node_id(e.from), node_id(e.to), e.label});
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

}  // namespace detail

SearchReport enumerate_green_paths(const QuiverSpec& q, const SearchOptions& opt0) {
    SearchOptions opt = opt0;
    if (!opt.stop) opt.stop = [](const Seed& s) { return is_final(s); };
    if (opt.max_depth < 1) throw PreconditionViolated("max_depth must be positive");
    if (opt.max_count < 1) throw PreconditionViolated("max_count must be positive");
    Seed root = initial_seed(q);
    if (opt.parallel) return detail::finalize(detail::run_parallel(root, opt), opt);
    std::vector<MutationIndex> idx;
    std::vector<Seed> trail{root};
    std::vector<CanonicalSeed> ctrail{canonicalize(root)};
    detail::Accum acc;
    detail::dfs_serial(idx, trail, ctrail, opt, acc);
    return detail::finalize(std::move(acc), opt);
}

SearchReport enumerate_mgs(const QuiverSpec& q, int max_depth, bool parallel, long max_count) {
    SearchOptions opt;
    opt.max_depth = max_depth;
    opt.max_count = max_count;
    opt.parallel = parallel;
    opt.stop = [](const Seed& s) { return is_final(s); };
    SearchReport r = enumerate_green_paths(q, opt);
    const int n = q.n;
    CanonicalSeed target = canonicalize(Seed{q.b0, -Mat::identity(n)});
    for (const Mgs& m : r.mgs) {
        if (!is_final(m.last())) throw Error("non-final seed reported as maximal");
        if (canonicalize(m.last()) != target)
            throw Error("maximal green sequence does not end in the initial cluster's final form");
        if (m.length() < n) throw Error("maximal green sequence shorter than rank");
        std::vector<bool> used(n + 1, false);
        for (MutationIndex k : m.indices) used[k] = true;
        for (MutationIndex k = 1; k <= n; ++k)
            if (!used[k]) throw Error("maximal green sequence skips a direction");
    }
    return r;
}

bool mgs_set_settled(const SearchReport& report) {
    return report.complete || report.mgs_certified;
}

bool no_gap(const SearchReport& report) {
    if (!mgs_set_settled(report))
        throw IncompleteSearch("no-gap verdict needs a settled enumeration");
    if (report.length_hist.empty()) throw Error("no maximal green sequences found");
    int lo = report.length_hist.begin()->first;
    int hi = report.length_hist.rbegin()->first;
    return static_cast<int>(report.length_hist.size()) == hi - lo + 1;
}

int empirical_max_from_hist(const std::map<int, long>& hist) {
    if (hist.empty()) throw Error("empty length histogram");
    int l = hist.begin()->first;
    while (hist.count(l + 1)) ++l;
    return l;
}

StabilityResult enumerate_mgs_with_stability(const QuiverSpec& q, int max_depth, bool parallel,
                                             long max_count) {
    StabilityResult out;
    out.base = enumerate_mgs(q, max_depth, parallel, max_count);
    out.doubled = enumerate_mgs(q, 2 * max_depth, parallel, max_count);
    auto seqs = [](const SearchReport& r) {
        std::vector<std::vector<MutationIndex>> v;
        v.reserve(r.mgs.size());
        for (const Mgs& m : r.mgs) v.push_back(m.indices);
        return v;
    };
    out.stable = out.base.mgs_total == out.doubled.mgs_total &&
                 !out.base.overflow && !out.doubled.overflow && seqs(out.base) == seqs(out.doubled);
    out.base.mgs_certified = out.stable;
    out.doubled.mgs_certified = out.stable;
    return out;
}

int empirical_max_length(const QuiverSpec& q, int depth, bool parallel) {
    StabilityResult run = enumerate_mgs_with_stability(q, depth, parallel);
    if (!run.stable) throw IncompleteSearch("enumeration not stable across doubled depth");
    return empirical_max_from_hist(run.base.length_hist);
}

ExchangeGraph export_exchange_graph(const SearchReport& report) {
    return ExchangeGraph{report.nodes, report.edges};
}

}  // namespace greenseq
