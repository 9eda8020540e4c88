#include "greenseq/polygon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "greenseq/errors.hpp"

namespace greenseq {

namespace {

struct AlternateRun {
    std::vector<MutationIndex> indices;
    Seed end;
    bool open = false; /* still green-extendable when the cap stopped the run */
};

/* Longest alternating green run (first, second, first, ...), capped. */
AlternateRun alternate_side(const Seed& base, MutationIndex first, MutationIndex second, int cap) {
    AlternateRun run{{}, base, false};
    MutationIndex cur = first, other = second;
    while (is_green(run.end, cur)) {
        if (static_cast<int>(run.indices.size()) == cap) {
            run.open = true;
            break;
        }
        run.end = mutate(run.end, cur);
        run.indices.push_back(cur);
        std::swap(cur, other);
    }
    return run;
}

int ell_from_product(i64 product) {
    switch (product) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: return kEllInfinite;
    }
}

}  // namespace

PolygonProfile polygon_profile(const Seed& s, MutationIndex j, MutationIndex k) {
    const int n = s.n();
    if (j < 1 || j > n || k < 1 || k > n || j == k)
        throw PreconditionViolated("polygon needs two distinct directions");
    if (!is_green(s, j) || !is_green(s, k)) throw NotGreen("polygon anchor must have both directions green");
    PolygonProfile p;
    p.j = j;
    p.k = k;
    p.base = s;
    i64 prod = s.b(j - 1, k - 1) * s.b(k - 1, j - 1);
    p.product = prod < 0 ? -prod : prod;
    p.ell = ell_from_product(p.product);
    /* finite sides never exceed 6 mutations; 9 cleanly separates the unbounded case */
    const int cap = 9;
    AlternateRun run_j = alternate_side(s, j, k, cap);
    AlternateRun run_k = alternate_side(s, k, j, cap);
    auto fail = [&](const char* why) {
        throw AlternationMismatch(std::string(why) + " (product " + std::to_string(p.product) +
                                  ", runs " + std::to_string(run_j.indices.size()) + "/" +
                                  std::to_string(run_k.indices.size()) + ")");
    };
    if (p.ell == 2) {
        if (run_j.open || run_k.open || run_j.indices.size() != 2 || run_k.indices.size() != 2)
            fail("commuting pair must give two length-2 sides");
        if (run_j.end != run_k.end) fail("commuting sides end at different seeds");
        p.short_side = run_j.indices;
        p.long_side = run_k.indices;
        p.short_end = run_j.end;
        p.long_end = run_k.end;
        return p;
    }
    /* exactly one side is the length-2 side */
    const AlternateRun* short_run = nullptr;
    const AlternateRun* long_run = nullptr;
    if (!run_j.open && run_j.indices.size() == 2 && run_k.indices.size() != 2) {
        short_run = &run_j;
        long_run = &run_k;
    } else if (!run_k.open && run_k.indices.size() == 2 && run_j.indices.size() != 2) {
        short_run = &run_k;
        long_run = &run_j;
    } else {
        fail("expected exactly one length-2 side");
    }
    p.short_side = short_run->indices;
    p.short_end = short_run->end;
    if (p.ell == kEllInfinite) {
        if (!long_run->open) fail("wild pair closed up unexpectedly");
        return p;
    }
    if (long_run->open || static_cast<int>(long_run->indices.size()) != p.ell)
        fail("long side length disagrees with the weight product");
    p.long_side = long_run->indices;
    p.long_end = long_run->end;
    if (p.ell == 3) {
        if (swap_labels(*p.long_end, j, k) != p.short_end)
            fail("pentagon sides do not close up under the label swap");
    } else if (*p.long_end != p.short_end) {
        fail("even polygon sides end at different seeds");
    }
    return p;
}

bool verify_c2_identity(const Seed& s, MutationIndex j, MutationIndex k) {
    if (!is_green(s, j) || !is_green(s, k))
        throw PreconditionViolated("identity needs both directions green");
    if (s.b(j - 1, k - 1) != -1 || s.b(k - 1, j - 1) != 2)
        throw PreconditionViolated("identity needs b_jk = -1 and b_kj = 2");
    Seed lhs = mutate(mutate(s, j), k);
    Seed rhs = mutate(mutate(mutate(mutate(s, k), j), k), j);
    return lhs == rhs;
}

namespace {

bool block_matches(const std::vector<MutationIndex>& haystack, size_t at,
                   const std::vector<MutationIndex>& block) {
    if (at + block.size() > haystack.size()) return false;
    return std::equal(block.begin(), block.end(), haystack.begin() + static_cast<long>(at));
}

Mgs replay(const Seed& start, const std::vector<MutationIndex>& indices, const Seed& expected_final) {
    Mgs out;
    out.indices = indices;
    out.trail.push_back(start);
    std::vector<CanonicalSeed> seen{canonicalize(start)};
    for (MutationIndex k : indices) {
        if (!is_green(out.trail.back(), k)) throw ReplayFailed("deformed sequence leaves the green cone");
        out.trail.push_back(mutate(out.trail.back(), k));
        CanonicalSeed cc = canonicalize(out.trail.back());
        for (const CanonicalSeed& prev : seen)
            if (prev == cc) throw ReplayFailed("deformed sequence revisits a cluster");
        seen.push_back(std::move(cc));
    }
    if (!is_final(out.trail.back())) throw ReplayFailed("deformed sequence does not end final");
    if (canonicalize(out.trail.back()) != canonicalize(expected_final))
        throw ReplayFailed("deformed sequence ends in a different cluster");
    return out;
}

}  // namespace

std::vector<DeformationEdge> elementary_deformations(const Mgs& m) {
    std::vector<DeformationEdge> out;
    if (m.trail.size() != m.indices.size() + 1) throw PreconditionViolated("malformed green path");
    const int n = m.trail.empty() ? 0 : m.trail.front().n();
    for (size_t t = 0; t < m.indices.size(); ++t) {
        const Seed& base = m.trail[t];
        for (MutationIndex j = 1; j <= n; ++j) {
            if (!is_green(base, j)) continue;
            for (MutationIndex k = j + 1; k <= n; ++k) {
                if (!is_green(base, k)) continue;
                PolygonProfile p = polygon_profile(base, j, k);
                if (p.ell == kEllInfinite) continue; /* no finite polygon to flip across */
                auto emit = [&](const std::vector<MutationIndex>& from_side,
                                const std::vector<MutationIndex>& to_side, DeformDirection dir) {
                    if (!block_matches(m.indices, t, from_side)) return;
                    std::vector<MutationIndex> rebuilt(m.indices.begin(),
                                                       m.indices.begin() + static_cast<long>(t));
                    rebuilt.insert(rebuilt.end(), to_side.begin(), to_side.end());
                    for (size_t u = t + from_side.size(); u < m.indices.size(); ++u) {
                        MutationIndex v = m.indices[u];
                        if (p.ell == 3) v = v == j ? k : v == k ? j : v; /* pentagon relabels the tail */
                        rebuilt.push_back(v);
                    }
                    DeformationEdge e;
                    e.target = replay(m.trail.front(), rebuilt, m.last());
                    e.position = static_cast<int>(t);
                    e.j = j;
                    e.k = k;
                    e.ell = p.ell;
                    e.direction = dir;
                    int delta = e.target.length() - static_cast<int>(m.indices.size());
                    if ((delta < 0 ? -delta : delta) != p.ell - 2)
                        throw ReplayFailed("deformation changed the length by the wrong amount");
                    out.push_back(std::move(e));
                };
                emit(p.short_side, p.long_side, DeformDirection::short_to_long);
                emit(p.long_side, p.short_side, DeformDirection::long_to_short);
            }
        }
    }
    return out;
}

namespace {

int uf_find(std::vector<int>& up, int x) {
    while (up[x] != x) {
        up[x] = up[up[x]];
        x = up[x];
    }
    return x;
}

}  // namespace

ClassPartition deformation_classes(const SearchReport& report) {
    if (!mgs_set_settled(report) || report.overflow)
        throw IncompleteSearch("deformation classes need the settled MGS set");
    const int count = static_cast<int>(report.mgs.size());
    std::map<std::vector<MutationIndex>, int> pos;
    for (int i = 0; i < count; ++i) pos[report.mgs[i].indices] = i;
    std::vector<int> up(count);
    std::iota(up.begin(), up.end(), 0);
    for (int i = 0; i < count; ++i) {
        for (const DeformationEdge& e : elementary_deformations(report.mgs[i])) {
            auto it = pos.find(e.target.indices);
            if (it == pos.end())
                throw ReplayFailed("deformation target missing from the complete MGS set");
            int a = uf_find(up, i), b = uf_find(up, it->second);
            if (a != b) up[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < count; ++i) groups[uf_find(up, i)].push_back(i);
    ClassPartition part;
    for (auto& [root, members] : groups) {
        part.representatives.push_back(report.mgs[members.front()].indices);
        part.classes.push_back(std::move(members));
    }
    return part;
}

}  // namespace greenseq
