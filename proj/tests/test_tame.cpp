#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "greenseq/errors.hpp"
#include "greenseq/json_io.hpp"
#include "greenseq/presets.hpp"
#include "greenseq/search.hpp"
#include "greenseq/tame.hpp"
#include "test_util.hpp"

using namespace greenseq;

namespace {

QuiverSpec by_name(const char* name) { return preset(name).spec; }

EulerData euler_of(const char* name) { return euler_for(preset(name)); }

}  // namespace

TEST_CASE("finite and wild forms are rejected as not tame") {
    CHECK_THROWS_AS(compute_tame_data(euler_of("C2-paper")), NotTame);
    CHECK_THROWS_AS(compute_tame_data(euler_of("A(2)")), NotTame);
    CHECK_THROWS_AS(compute_tame_data(euler_of("G2")), NotTame);

    /* wild rank 2: corank 0 as well */
    QuiverSpec wild;
    wild.n = 2;
    wild.d = {1, 1};
    wild.b0 = Mat::from_rows({{0, 3}, {-3, 0}});
    CHECK_THROWS_AS(compute_tame_data(euler_from_b0(wild)), NotTame);

    /* two affine blocks: corank 2 */
    QuiverSpec twice;
    twice.n = 4;
    twice.d = {1, 1, 1, 1};
    twice.b0 = Mat::from_rows({{0, 2, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, -2, 0}});
    CHECK_THROWS_AS(compute_tame_data(euler_from_b0(twice)), NotTame);

    /* affine block next to a finite block: corank 1 but the kernel
     * generator has a vanishing coordinate */
    QuiverSpec mixed;
    mixed.n = 3;
    mixed.d = {1, 1, 1};
    mixed.b0 = Mat::from_rows({{0, 2, 0}, {-2, 0, 0}, {0, 0, 0}});
    CHECK_THROWS_AS(compute_tame_data(euler_from_b0(mixed)), NotTame);
}

TEST_CASE("frozen affine data: rank-2 double arrow") {
    EulerData ed = euler_of("kronecker");
    TameData td = compute_tame_data(ed);
    CHECK(td.eta == DimVector{1, 1});
    CHECK(td.tau == Mat::from_rows({{3, -2}, {2, -1}}));
    CHECK(td.tau_inv == Mat::from_rows({{-1, 2}, {-2, 3}}));
}

TEST_CASE("frozen affine data: three-vertex cycle") {
    EulerData ed = euler_of("Atilde(2,1)");
    TameData td = compute_tame_data(ed);
    CHECK(td.eta == DimVector{1, 1, 1});
    CHECK(td.tau == Mat::from_rows({{-1, 1, 1}, {-1, 0, 2}, {-2, 1, 2}}));
    CHECK(td.tau_inv == Mat::from_rows({{2, 1, -2}, {2, 0, -1}, {1, 1, -1}}));
}

TEST_CASE("structural identities of the Coxeter data") {
    for (const char* name : {"kronecker", "Atilde(2,1)", "Atilde(3,1)", "Atilde(3,2)"}) {
        EulerData ed = euler_of(name);
        TameData td = compute_tame_data(ed);
        int n = ed.n();

        /* eta spans the kernel of E + E^t, is positive and primitive */
        Mat sym = ed.e + ed.e.transposed();
        DimVector zero(n, 0);
        CHECK(sym.mul(td.eta) == zero);
        i64 g = 0;
        for (i64 v : td.eta) {
            CHECK(v > 0);
            g = std::gcd(g, v);
        }
        CHECK(g == 1);

        /* tau fixes eta, inverts exactly, and sends P_i to -I_i */
        CHECK(td.tau.mul(td.eta) == td.eta);
        CHECK(td.tau * td.tau_inv == Mat::identity(n));
        CHECK(td.tau_inv * td.tau == Mat::identity(n));
        auto pd = projective_dims(ed);
        auto id = injective_dims(ed);
        for (int i = 0; i < n; ++i) {
            DimVector img = td.tau.mul(pd[i]);
            for (int r = 0; r < n; ++r) CHECK(img[r] == -id[i][r]);
        }

        /* tau = -E^-1 E^t re-multiplied: E tau = -E^t */
        CHECK(ed.e * td.tau == -ed.e.transposed());
        CHECK(ed.e.transposed() * td.tau_inv == -ed.e);
    }
}

TEST_CASE("defect pairing separates the three component classes") {
    for (const char* name : {"kronecker", "Atilde(2,1)", "Atilde(3,1)"}) {
        EulerData ed = euler_of(name);
        TameData td = compute_tame_data(ed);
        CHECK(defect_pairing(td, ed, td.eta) == 0);
        CHECK(classify_component(td, ed, td.eta) == ComponentClass::R);
        auto pd = projective_dims(ed);
        auto id = injective_dims(ed);
        for (int i = 0; i < ed.n(); ++i) {
            CHECK(defect_pairing(td, ed, pd[i]) > 0);
            CHECK(classify_component(td, ed, pd[i]) == ComponentClass::P);
            CHECK(defect_pairing(td, ed, id[i]) < 0);
            CHECK(classify_component(td, ed, id[i]) == ComponentClass::J);
            DimVector neg(pd[i]);
            for (i64& v : neg) v = -v;
            CHECK(classify_component(td, ed, neg) == ComponentClass::J);
            /* the pairing is <x, eta> re-multiplied */
            CHECK(defect_pairing(td, ed, pd[i]) == euler_pairing(ed, pd[i], td.eta));
        }
    }
}

TEST_CASE("regular clusters need preprojective and preinjective columns both") {
    EulerData ed = euler_of("kronecker");
    TameData td = compute_tame_data(ed);
    QuiverSpec q = by_name("kronecker");
    Seed s0 = initial_seed(q);
    CHECK_FALSE(is_regular_cluster(td, ed, s0));
    CHECK(regular_component_count(td, ed, s0) == 0);

    Seed mid = mutate(s0, 2);
    CHECK(is_regular_cluster(td, ed, mid));
    CHECK(regular_component_count(td, ed, mid) == 0);

    Seed fin = mutate(mid, 1);
    REQUIRE(is_final(fin));
    CHECK_FALSE(is_regular_cluster(td, ed, fin));
}

TEST_CASE("regular component counts stay within the affine bound") {
    EulerData ed = euler_of("Atilde(2,1)");
    TameData td = compute_tame_data(ed);
    StabilityResult st = enumerate_mgs_with_stability(by_name("Atilde(2,1)"), 12);
    int max_seen = 0;
    for (const Mgs& m : st.base.mgs)
        for (const Seed& s : m.trail) {
            int c = regular_component_count(td, ed, s);
            CHECK(c <= 1); /* n - 2 */
            max_seen = std::max(max_seen, c);
        }
    CHECK(max_seen == 1);
}

TEST_CASE("regular cluster graph of the certified affine runs") {
    {
        EulerData ed = euler_of("Atilde(2,1)");
        TameData td = compute_tame_data(ed);
        StabilityResult st = enumerate_mgs_with_stability(by_name("Atilde(2,1)"), 12);
        RegularClusterGraph g = regular_cluster_graph(td, ed, st.base);
        CHECK(g.nodes.size() == 4);
        CHECK(g.connected);
        for (auto [a, b] : g.edges) {
            CHECK(a < b);
            CHECK(b < static_cast<int>(g.nodes.size()));
            CHECK(a >= 0);
        }
        for (const CanonicalSeed& cs : g.nodes) CHECK(is_regular_cluster(td, ed, cs.seed));
        /* every maximal green sequence walks through a regular cluster */
        for (const Mgs& m : st.base.mgs) {
            bool touches = false;
            for (const Seed& s : m.trail) touches = touches || is_regular_cluster(td, ed, s);
            CHECK(touches);
        }
    }
    {
        EulerData ed = euler_of("kronecker");
        TameData td = compute_tame_data(ed);
        StabilityResult st = enumerate_mgs_with_stability(by_name("kronecker"), 12);
        RegularClusterGraph g = regular_cluster_graph(td, ed, st.base);
        CHECK(g.nodes.size() == 1);
        CHECK(g.edges.empty());
        CHECK(g.connected);

        /* strict mode refuses an unsettled report, best effort accepts it */
        SearchReport raw = enumerate_mgs(by_name("kronecker"), 12);
        CHECK_THROWS_AS(regular_cluster_graph(td, ed, raw), IncompleteSearch);
        RegularClusterGraph loose = regular_cluster_graph(td, ed, raw, false);
        CHECK(loose.nodes.size() == 1);
    }
}

TEST_CASE("frozen projections of the weight-(1,2) quiver") {
    EulerData ed = euler_of("C2-paper");
    Projection p1 = project_to_nonnegative(ed, {0, -1});
    CHECK(p1.j_set == std::vector<int>{2});
    CHECK(p1.coeffs == std::vector<i64>{1});
    CHECK(p1.y == DimVector{1, 0});

    Projection p2 = project_to_nonnegative(ed, {-2, 0});
    CHECK(p2.j_set == std::vector<int>{1});
    CHECK(p2.coeffs == std::vector<i64>{2});
    CHECK(p2.y == DimVector{0, 0});

    Projection p3 = project_to_nonnegative(ed, {3, 2});
    CHECK(p3.j_set.empty());
    CHECK(p3.coeffs.empty());
    CHECK(p3.y == DimVector{3, 2});

    CHECK_THROWS_AS(project_to_nonnegative(ed, {1}), PreconditionViolated);
}

TEST_CASE("random projections satisfy the correction contract") {
    std::mt19937 rng(404);
    for (const char* name :
         {"C2-paper", "B2", "G2", "A(3)", "kronecker", "Atilde(2,1)", "Atilde(3,1)"}) {
        EulerData ed = euler_of(name);
        auto pd = projective_dims(ed);
        int n = ed.n();
        for (int trial = 0; trial < 1000; ++trial) {
            DimVector x(n);
            for (i64& v : x) v = static_cast<i64>(rng() % 41) - 20;
            Projection pr = project_to_nonnegative(ed, x);

            REQUIRE(pr.j_set.size() == pr.coeffs.size());
            for (size_t t = 0; t < pr.j_set.size(); ++t) {
                CHECK(pr.coeffs[t] > 0);
                CHECK(pr.j_set[t] >= 1);
                CHECK(pr.j_set[t] <= n);
                if (t > 0) CHECK(pr.j_set[t - 1] < pr.j_set[t]);
                CHECK(pr.y[pr.j_set[t] - 1] == 0);
            }
            DimVector rebuilt = x;
            for (size_t t = 0; t < pr.j_set.size(); ++t)
                for (int r = 0; r < n; ++r) rebuilt[r] += pr.coeffs[t] * pd[pr.j_set[t] - 1][r];
            CHECK(rebuilt == pr.y);
            for (i64 v : pr.y) CHECK(v >= 0);
        }
    }
}

TEST_CASE("negative iterates of the inverse Coxeter map") {
    EulerData kr = euler_of("kronecker");
    TameData tk = compute_tame_data(kr);
    CHECK(find_negative_iterate(tk, {-1, 5}, 50) == 0);
    CHECK(find_negative_iterate(tk, {1, 0}, 50) == 1);          /* preinjective I_1 */
    CHECK_THROWS_AS(find_negative_iterate(tk, {1, 1}, 50), BoundExceeded);  /* eta */
    CHECK_THROWS_AS(find_negative_iterate(tk, {0, 1}, 50), BoundExceeded); /* projective */
    CHECK_THROWS_AS(find_negative_iterate(tk, {0, 1}, -1), PreconditionViolated);
    CHECK_THROWS_AS(find_negative_iterate(tk, {3, 3}, 0), BoundExceeded);

    EulerData at = euler_of("Atilde(2,1)");
    TameData ta = compute_tame_data(at);
    CHECK(find_negative_iterate(ta, {1, 1, 2}, 50) == 1);
    CHECK(find_negative_iterate(ta, {1, 1, 2}, 1) == 1); /* exactly at the bound */
    CHECK(find_negative_iterate(ta, {2, 2, 3}, 50) == 2);
    CHECK_THROWS_AS(find_negative_iterate(ta, {1, 1, 1}, 60), BoundExceeded);
    CHECK_THROWS_AS(find_negative_iterate(ta, {1, 0, 0}, 50), BoundExceeded);

    /* preinjectives always fall negative; preprojectives never do */
    for (const char* name : {"kronecker", "Atilde(2,1)", "Atilde(3,1)"}) {
        EulerData ed = euler_of(name);
        TameData td = compute_tame_data(ed);
        for (const DimVector& iv : injective_dims(ed))
            CHECK(find_negative_iterate(td, iv, 100) >= 1);
        for (const DimVector& pv : projective_dims(ed))
            CHECK_THROWS_AS(find_negative_iterate(td, pv, 100), BoundExceeded);
    }
}
