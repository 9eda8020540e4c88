#include <exception>
#include <utility>

#include "greenseq/errors.hpp"
#include "search_detail.hpp"

namespace greenseq::detail {

namespace {

/* Fan subtrees out as OpenMP tasks for the first levels, serial below.
 * Results are merged in green-index order, so the report is identical to the
 * serial engine's no matter how the tasks are scheduled. */
constexpr int kSpawnLevels = 3;

struct TaskResult {
    Accum acc;
    std::exception_ptr err;
};

struct ChildState {
    std::vector<MutationIndex> idx;
    std::vector<Seed> trail;
    std::vector<CanonicalSeed> ctrail;
};

Accum dfs_task(std::vector<MutationIndex> idx, std::vector<Seed> trail,
               std::vector<CanonicalSeed> ctrail, const SearchOptions& opt, int spawn_left) {
    Accum acc;
    if (spawn_left <= 0) {
        dfs_serial(idx, trail, ctrail, opt, acc);
        return acc;
    }
    acc.nodes.insert(ctrail.back());
    std::vector<MutationIndex> greens;
    switch (classify_node(trail.back(), static_cast<int>(idx.size()), opt, greens)) {
        case NodeKind::hit:
            acc.hits.push_back(Mgs{idx, trail});
            return acc;
        case NodeKind::dead_end:
            return acc;
        case NodeKind::truncated:
            ++acc.truncated;
            return acc;
        case NodeKind::expand:
            break;
    }
    const size_t fan = greens.size();
    std::vector<ChildState> st(fan);
    std::vector<TaskResult> res(fan);
    for (size_t gi = 0; gi < fan; ++gi) {
        MutationIndex k = greens[gi];
        Seed child = mutate(trail.back(), k);
        CanonicalSeed cc = canonicalize(child);
        for (const CanonicalSeed& seen : ctrail)
            if (seen == cc) throw Error("green path revisited a cluster");
        acc.edges.insert(RawEdge{ctrail.back(), cc, k});
        st[gi].idx = idx;
        st[gi].idx.push_back(k);
        st[gi].trail = trail;
        st[gi].trail.push_back(std::move(child));
        st[gi].ctrail = ctrail;
        st[gi].ctrail.push_back(std::move(cc));
    }
    for (size_t gi = 0; gi < fan; ++gi) {
#ifdef _OPENMP
#pragma omp task default(none) firstprivate(gi, spawn_left) shared(st, res, opt)
#endif
        {
            try {
                res[gi].acc = dfs_task(std::move(st[gi].idx), std::move(st[gi].trail),
                                       std::move(st[gi].ctrail), opt, spawn_left - 1);
            } catch (...) {
                res[gi].err = std::current_exception();
            }
        }
    }
#ifdef _OPENMP
#pragma omp taskwait
#endif
    for (size_t gi = 0; gi < fan; ++gi) {
        if (res[gi].err) std::rethrow_exception(res[gi].err);
        acc.merge(std::move(res[gi].acc));
    }
    return acc;
}

}  // namespace

Accum run_parallel(const Seed& root, const SearchOptions& opt) {
    std::vector<MutationIndex> idx;
    std::vector<Seed> trail{root};
    std::vector<CanonicalSeed> ctrail{canonicalize(root)};
    Accum out;
    std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel default(none) shared(out, err, idx, trail, ctrail, opt)
#pragma omp single
#endif
    {
        try {
            out = dfs_task(std::move(idx), std::move(trail), std::move(ctrail), opt, kSpawnLevels);
        } catch (...) {
            err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace greenseq::detail
