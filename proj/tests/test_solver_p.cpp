#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "localclust/generators.hpp"
#include "localclust/oracles.hpp"
#include "localclust/solver_p.hpp"
#include "localclust/uncross.hpp"

using namespace localclust;

namespace {

MultiGraph demo_graph() {
    return MultiGraph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

// The defining quantifier, spelled out: every proper subset must cost
// strictly more once v is attached.
bool v_minimal_by_definition(const MultiGraph& g, int v, const VertexSet& c) {
    const std::vector<int>& items = c.items();
    const int k = c.size();
    const long long full = boundary(g, c.unite({v})).size;
    for (int mask = 0; mask + 1 < (1 << k); ++mask) {
        VertexSet sub{v};
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) sub.add(items[static_cast<size_t>(i)]);
        if (boundary(g, sub).size <= full) return false;
    }
    return true;
}

long long edges_toward(const MultiGraph& g, const VertexSet& c, int v) {
    long long total = 0;
    for (int u : c) total += g.multiplicity(u, v);
    return total;
}

std::vector<VertexSet> sorted_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end());
    return sets;
}

}  // namespace

TEST_SUITE("solver-p") {

TEST_CASE("v-minimality on fixed shapes") {
    MultiGraph path(3, {{0, 1}, {1, 2}});
    CHECK(is_v_minimal(path, 0, {1, 2}));
    CHECK_FALSE(is_v_minimal(path, 0, {1}));  // dropping to just v costs the same
    CHECK(is_v_minimal(path, 0, {}));         // vacuous

    MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(is_v_minimal(star, 0, {1}));
    // Minimal even though disconnected: dropping either leaf raises the cut.
    // Connectivity is a separate filter applied by the catalogs.
    CHECK(is_v_minimal(star, 0, {1, 2}));

    // The whole rest of a connected graph is v-minimal, boundary zero.
    CHECK(is_v_minimal(path, 0, {1, 2}));
    MultiGraph split(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_v_minimal(split, 0, {1, 2, 3}));

    MultiGraph multi(2, {{0, 1}, {0, 1}});
    CHECK_THROWS_AS(is_v_minimal(multi, 0, {1}), std::invalid_argument);
}

TEST_CASE("v-minimality test matches the subset definition") {
    std::mt19937_64 rng(7171);
    for (int round = 0; round < 250; ++round) {
        MultiGraph g = random_simple(7, 0.45, rng);
        int v = static_cast<int>(rng() % 7);
        VertexSet c;
        for (int i = 0; i < 7; ++i)
            if (i != v && (rng() & 1)) c.add(i);
        CHECK(is_v_minimal(g, v, c) == v_minimal_by_definition(g, v, c));
    }
}

TEST_CASE("small catalog equals the exhaustive filter") {
    std::mt19937_64 rng(7272);
    for (int round = 0; round < 50; ++round) {
        MultiGraph g = random_simple(7, 0.4, rng);
        int v = static_cast<int>(rng() % 7);
        int bound = static_cast<int>(rng() % 5);

        std::vector<VertexSet> want;
        for (int mask = 0; mask < (1 << 7); ++mask) {
            if (mask & (1 << v)) continue;
            VertexSet c;
            for (int i = 0; i < 7; ++i)
                if (mask & (1 << i)) c.add(i);
            if (c.empty() || c.size() > bound) continue;
            if (!is_connected_subset(g, c)) continue;
            if (!is_v_minimal(g, v, c)) continue;
            want.push_back(c);
        }
        std::sort(want.begin(), want.end());

        auto catalog = enumerate_vminimal_small(g, v, bound);
        std::vector<VertexSet> got;
        for (const VMinimalSet& s : catalog) got.push_back(s.set);
        CHECK(sorted_sets(got) == want);
        CHECK(catalog.size() <= static_cast<size_t>((1ll << (2 * bound)) * g.n()));
    }
}

TEST_CASE("catalog entries carry correct cached numbers") {
    std::mt19937_64 rng(7373);
    for (int round = 0; round < 40; ++round) {
        MultiGraph g = random_simple(8, 0.5, rng);
        int v = static_cast<int>(rng() % 8);
        for (const VMinimalSet& s : enumerate_vminimal_small(g, v, 4)) {
            long long toward = edges_toward(g, s.set, v);
            CHECK(s.d_to_v == toward);
            CHECK(s.d_away == boundary(g, s.set).size - toward);
            CHECK(s.nonedges == measure_eval(g, Measure::NonEdge, s.set));
            CHECK(s.nondeg_in == measure_eval(g, Measure::NonDeg, s.set.unite({v})));

            // Boundary accounting: attaching v swaps the toward-edges for
            // v's remaining degree.
            CHECK(boundary(g, s.set.unite({v})).size ==
                  s.d_away + g.degree(v) - s.d_to_v);
        }
    }
}

TEST_CASE("every cataloged set points more edges at v than away") {
    std::mt19937_64 rng(7474);
    for (int round = 0; round < 60; ++round) {
        MultiGraph g = random_simple(8, 0.45, rng);
        int v = static_cast<int>(rng() % 8);
        for (const VMinimalSet& s : enumerate_vminimal_small(g, v, 4)) {
            CHECK(s.d_away < s.d_to_v);
            CHECK(s.d_to_v <= s.set.size());

            // Hence someone's whole neighborhood is swallowed by the set.
            bool swallowed = false;
            for (int u : s.set) {
                bool inside = true;
                for (auto [w, mult] : g.neighbors(u))
                    if (w != v && !s.set.contains(w)) {
                        inside = false;
                        break;
                    }
                if (inside) {
                    swallowed = true;
                    break;
                }
            }
            CHECK(swallowed);
        }
    }
}

TEST_CASE("star catalog is exactly the single leaves") {
    MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto catalog = enumerate_vminimal_small(star, 0, 2);
    REQUIRE(catalog.size() == 3);
    std::vector<VertexSet> got;
    for (const VMinimalSet& s : catalog) got.push_back(s.set);
    CHECK(sorted_sets(got) == std::vector<VertexSet>{{1}, {2}, {3}});
    CHECK(enumerate_vminimal_small(star, 0, 0).empty());
}

TEST_CASE("large nondeg sets match the exhaustive filter") {
    std::mt19937_64 rng(7575);
    for (int round = 0; round < 40; ++round) {
        int n = 6 + static_cast<int>(rng() % 5);
        MultiGraph g = random_simple(n, 0.72, rng);
        int v = static_cast<int>(rng() % n);
        long long p = static_cast<long long>(rng() % 3);

        std::vector<VertexSet> want;
        for (int mask = 0; mask < (1 << n); ++mask) {
            if (mask & (1 << v)) continue;
            VertexSet c;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) c.add(i);
            if (c.empty() || c.size() < 3 * p) continue;
            if (measure_eval(g, Measure::NonDeg, c.unite({v})) > p) continue;
            if (!is_v_minimal(g, v, c)) continue;
            want.push_back(c);
        }
        std::sort(want.begin(), want.end());

        auto got = enumerate_vminimal_large_nondeg(g, v, p);
        CHECK(sorted_sets(got) == want);
        CHECK(got.size() <= static_cast<size_t>((1ll << (p + 3)) * g.n()));
    }
}

TEST_CASE("cluster search agrees with the oracle for every measure") {
    std::mt19937_64 rng(7676);
    for (Measure mu : {Measure::Size, Measure::NonEdge, Measure::NonDeg}) {
        int yes = 0;
        for (int round = 0; round < 60; ++round) {
            int n = 3 + static_cast<int>(rng() % 6);
            MultiGraph g = random_simple(n, 0.5, rng);
            long long p = mu == Measure::Size ? 1 + static_cast<long long>(rng() % 5)
                                              : static_cast<long long>(rng() % 4);
            long long q = static_cast<long long>(rng() % 5);
            int v = static_cast<int>(rng() % n);

            ClusterOutcome out = cluster_fpt_p(g, mu, p, q, v);
            auto want = oracle_cluster(g, mu, p, q, v);
            CHECK((out.status == SolveStatus::Found) == want.has_value());
            if (out.status == SolveStatus::Found) {
                ++yes;
                CHECK(out.cluster.contains(v));
                CHECK(measure_eval(g, mu, out.cluster) <= p);
                CHECK(boundary(g, out.cluster).size <= q);
            }
        }
        CHECK(yes > 10);
    }
}

TEST_CASE("degenerate budgets behave") {
    MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    // Alone in the cluster, v pays its whole degree.
    CHECK(cluster_fpt_p(star, Measure::Size, 1, 2, 0).status == SolveStatus::None);
    ClusterOutcome alone = cluster_fpt_p(star, Measure::Size, 1, 3, 0);
    REQUIRE(alone.status == SolveStatus::Found);
    CHECK(alone.cluster == VertexSet{0});

    CHECK(cluster_fpt_p(star, Measure::Size, 0, 3, 0).status == SolveStatus::None);
    CHECK(cluster_fpt_p(star, Measure::NonEdge, 0, 0, 0).status == SolveStatus::None);
    // Whole star: three leaf pairs missing, cut zero.
    CHECK(cluster_fpt_p(star, Measure::NonEdge, 3, 0, 0).status == SolveStatus::Found);
}

TEST_CASE("demo graph partition via the p solver") {
    MultiGraph g = demo_graph();
    PartitionOutcome out = partition_fpt_p(g, Measure::Size, 3, 2);
    REQUIRE(out.status == SolveStatus::Found);
    REQUIRE(verify_partition(g, Measure::Size, 3, 2, out.solution.clusters).ok);
    std::vector<VertexSet> a = {{0}, {1, 2, 3}};
    std::vector<VertexSet> b = {{0, 1, 2}, {3}};
    bool matches = out.solution.clusters == a || out.solution.clusters == b;
    CHECK(matches);
    CHECK(out.mode_used == "vminimal-dp");

    CHECK(partition_fpt_p(g, Measure::Size, 2, 2).status == SolveStatus::None);
}

TEST_CASE("random partitions match the oracle") {
    std::mt19937_64 rng(7777);
    for (Measure mu : {Measure::Size, Measure::NonEdge, Measure::NonDeg}) {
        int yes = 0;
        for (int round = 0; round < 25; ++round) {
            MultiGraph g = random_simple(6, 0.5, rng);
            long long p = mu == Measure::Size ? 2 + static_cast<long long>(rng() % 3)
                                              : static_cast<long long>(rng() % 3);
            long long q = 1 + static_cast<long long>(rng() % 3);
            PartitionOutcome out = partition_fpt_p(g, mu, p, q);
            auto want = oracle_partition(g, mu, p, q);
            CHECK((out.status == SolveStatus::Found) == want.has_value());
            if (out.status == SolveStatus::Found) {
                ++yes;
                CHECK(verify_partition(g, mu, p, q, out.solution.clusters).ok);
            }
        }
        CHECK(yes > 3);
    }
}

TEST_CASE("parallel edges are rejected up front") {
    MultiGraph multi(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK_THROWS_AS(cluster_fpt_p(multi, Measure::Size, 2, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(partition_fpt_p(multi, Measure::Size, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_vminimal_small(multi, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_vminimal_large_nondeg(multi, 0, 1), std::invalid_argument);
}

}  // TEST_SUITE
