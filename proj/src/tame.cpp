#include "greenseq/tame.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "greenseq/errors.hpp"

namespace greenseq {

TameData compute_tame_data(const EulerData& ed) {
    const int n = ed.n();
    Mat sym = ed.e + ed.e.transposed();
    std::vector<std::vector<Rat>> kernel = kernel_basis(RatMat(sym));
    if (kernel.empty()) throw NotTame("symmetrized Euler form is nondegenerate (not affine)");
    if (kernel.size() > 1)
        throw NotTame("symmetrized Euler form has corank " + std::to_string(kernel.size()));
    /* scale the rational generator to a primitive integer vector */
    i64 lcm = 1;
    for (const Rat& r : kernel[0]) lcm = std::lcm(lcm, r.den);
    DimVector eta(n);
    for (int i = 0; i < n; ++i) eta[i] = kernel[0][i].num * (lcm / kernel[0][i].den);
    i64 g = 0;
    for (i64 v : eta) g = std::gcd(g, v < 0 ? -v : v);
    for (i64& v : eta) v /= g;
    for (int i = 0; i < n; ++i)
        if (eta[i] != 0) {
            if (eta[i] < 0)
                for (i64& v : eta) v = -v;
            break;
        }
    for (i64 v : eta)
        if (v <= 0) throw NotTame("null root is not entrywise positive");

    TameData td;
    td.eta = eta;
    RatMat einv = inverse(RatMat(ed.e));
    RatMat etinv = inverse(RatMat(ed.e.transposed()));
    RatMat et(ed.e.transposed());
    RatMat e(ed.e);
    td.tau = -to_integer(einv * et, "Coxeter matrix");
    td.tau_inv = -to_integer(etinv * e, "inverse Coxeter matrix");

    /* structural guards; a failure here is an engine bug, not bad input */
    if (td.tau * td.tau_inv != Mat::identity(n)) throw Error("Coxeter inverse mismatch");
    if (td.tau.mul(eta) != eta) throw Error("Coxeter matrix does not fix the null root");
    std::vector<DimVector> p = projective_dims(ed);
    std::vector<DimVector> iv = injective_dims(ed);
    for (int i = 0; i < n; ++i) {
        DimVector ti = td.tau.mul(p[i]);
        for (int r = 0; r < n; ++r)
            if (ti[r] != -iv[i][r]) throw Error("Coxeter matrix does not send P_i to -I_i");
    }
    return td;
}

i64 defect_pairing(const TameData& td, const EulerData& ed, const DimVector& x) {
    return euler_pairing(ed, x, td.eta);
}

ComponentClass classify_component(const TameData& td, const EulerData& ed, const DimVector& x) {
    i64 v = defect_pairing(td, ed, x);
    if (v > 0) return ComponentClass::P;
    if (v < 0) return ComponentClass::J;
    return ComponentClass::R;
}

namespace {

struct SeedClassCounts {
    int p = 0, r = 0, j = 0;
};

SeedClassCounts classify_seed(const TameData& td, const EulerData& ed, const Seed& s) {
    SeedClassCounts c;
    for (const DimVector& col : dims_from_seed(ed, s)) {
        switch (classify_component(td, ed, col)) {
            case ComponentClass::P: ++c.p; break;
            case ComponentClass::R: ++c.r; break;
            case ComponentClass::J: ++c.j; break;
        }
    }
    return c;
}

}  // namespace

bool is_regular_cluster(const TameData& td, const EulerData& ed, const Seed& s) {
    SeedClassCounts c = classify_seed(td, ed, s);
    return c.p > 0 && c.j > 0;
}

int regular_component_count(const TameData& td, const EulerData& ed, const Seed& s) {
    SeedClassCounts c = classify_seed(td, ed, s);
    if (c.r > s.n() - 2)
        throw TooManyRegulars("seed carries " + std::to_string(c.r) + " regular components at rank " +
                              std::to_string(s.n()));
    return c.r;
}

RegularClusterGraph regular_cluster_graph(const TameData& td, const EulerData& ed,
                                          const SearchReport& report, bool require_complete) {
    if (require_complete && (!mgs_set_settled(report) || report.overflow))
        throw IncompleteSearch("regular cluster graph needs the settled MGS set");
    std::map<CanonicalSeed, Seed> reps; /* canonical regular cluster -> labeled witness */
    std::map<CanonicalSeed, bool> regular_cache;
    for (const Mgs& m : report.mgs)
        for (const Seed& s : m.trail) {
            CanonicalSeed c = canonicalize(s);
            auto cached = regular_cache.find(c);
            bool reg;
            if (cached != regular_cache.end()) {
                reg = cached->second;
            } else {
                reg = is_regular_cluster(td, ed, s);
                regular_cache.emplace(c, reg);
            }
            if (reg) reps.emplace(std::move(c), s);
        }
    RegularClusterGraph g;
    g.nodes.reserve(reps.size());
    for (const auto& [c, s] : reps) g.nodes.push_back(c);
    auto node_id = [&](const CanonicalSeed& c) -> int {
        auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), c);
        if (it == g.nodes.end() || *it != c) return -1;
        return static_cast<int>(it - g.nodes.begin());
    };
    for (const auto& [c, s] : reps) {
        int a = node_id(c);
        for (MutationIndex k = 1; k <= s.n(); ++k) {
            int b = node_id(canonicalize(mutate(s, k)));
            if (b >= 0 && b != a) g.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    /* connectivity over the undirected graph */
    const int nn = static_cast<int>(g.nodes.size());
    std::vector<int> up(nn);
    std::iota(up.begin(), up.end(), 0);
    auto find = [&](int x) {
        while (up[x] != x) {
            up[x] = up[up[x]];
            x = up[x];
        }
        return x;
    };
    for (auto [a, b] : g.edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) up[std::max(ra, rb)] = std::min(ra, rb);
    }
    int components = 0;
    for (int v = 0; v < nn; ++v)
        if (find(v) == v) ++components;
    g.connected = components <= 1;
    return g;
}

Projection project_to_nonnegative(const EulerData& ed, const DimVector& x) {
    const int n = ed.n();
    if (static_cast<int>(x.size()) != n) throw PreconditionViolated("vector length != rank");
    std::vector<int> order = triangular_order(ed.e); /* supp P_v lies at positions <= pos(v) */
    std::vector<DimVector> p = projective_dims(ed);
    Projection out;
    out.y = x;
    std::vector<std::pair<int, i64>> picked;
    for (int pos = n - 1; pos >= 0; --pos) {
        int v = order[pos];
        if (out.y[v] >= 0) continue;
        i64 a = -out.y[v];
        for (int i = 0; i < n; ++i) out.y[i] += a * p[v][i];
        picked.emplace_back(v + 1, a);
    }
    std::sort(picked.begin(), picked.end());
    for (auto [v, a] : picked) {
        out.j_set.push_back(v);
        out.coeffs.push_back(a);
    }
    for (int i = 0; i < n; ++i)
        if (out.y[i] < 0) throw Error("projection left a negative coordinate");
    for (int v : out.j_set)
        if (out.y[v - 1] != 0) throw Error("projection did not zero a corrected coordinate");
    return out;
}

int find_negative_iterate(const TameData& td, const DimVector& x, int bound) {
    if (bound < 0) throw PreconditionViolated("bound must be nonnegative");
    DimVector y = x;
    for (int k = 0; k <= bound; ++k) {
        for (i64 v : y)
            if (v < 0) return k;
        y = td.tau_inv.mul(y);
    }
    throw BoundExceeded("no negative coordinate within " + std::to_string(bound) + " inverse Coxeter steps");
}

}  // namespace greenseq
