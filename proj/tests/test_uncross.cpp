#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "localclust/generators.hpp"
#include "localclust/oracles.hpp"
#include "localclust/uncross.hpp"

using namespace localclust;

namespace {

MultiGraph demo_graph() {
    return MultiGraph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

bool covers_everything(int n, const std::vector<VertexSet>& clusters) {
    VertexSet all;
    for (const VertexSet& c : clusters) all = all.unite(c);
    return all == VertexSet::full(n);
}

bool refines_cover(const std::vector<VertexSet>& clusters,
                   const std::vector<VertexSet>& cover) {
    for (const VertexSet& c : clusters) {
        bool inside = false;
        for (const VertexSet& big : cover)
            if (c.is_subset_of(big)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("uncross") {

TEST_CASE("verify accepts a clean partition and reports its stats") {
    MultiGraph g = demo_graph();
    VerifyReport r = verify_partition(g, Measure::Size, 3, 2, {{0, 1, 2}, {3}});
    CHECK(r.ok);
    CHECK(r.violation.empty());
    REQUIRE(r.stats.size() == 2);
    CHECK(r.stats[0].mu_value == 3);
    CHECK(r.stats[0].cut_value == 2);
    CHECK(r.stats[1].mu_value == 1);
    CHECK(r.stats[1].cut_value == 2);
}

TEST_CASE("verify rejects each kind of defect") {
    MultiGraph g = demo_graph();
    auto bad = [&](const std::vector<VertexSet>& cs, long long p = 3, long long q = 2) {
        VerifyReport r = verify_partition(g, Measure::Size, p, q, cs);
        CHECK_FALSE(r.ok);
        CHECK_FALSE(r.violation.empty());
    };
    bad({{0, 1, 2, 3}});                  // mu over budget
    bad({{0}, {1, 2, 3}}, 3, 1);          // cut over budget
    bad({{0, 1, 2}});                     // vertex 3 uncovered
    bad({{0, 1, 2}, {2, 3}});             // overlap
    bad({{0, 1, 2}, {3}, {}});            // empty cluster
}

TEST_CASE("overlapping cover is uncrossed into a partition") {
    MultiGraph g = demo_graph();
    std::vector<VertexSet> cover = {{0, 1, 2}, {1, 2, 3}, {0}, {1, 2, 3}};
    PartitionSolution sol = partition_from_cover(g, Measure::Size, 3, 2, cover);
    CHECK(verify_partition(g, Measure::Size, 3, 2, sol.clusters).ok);
    CHECK(covers_everything(4, sol.clusters));
    CHECK(refines_cover(sol.clusters, cover));
    REQUIRE(sol.stats.size() == sol.clusters.size());
    for (size_t i = 0; i < sol.clusters.size(); ++i) {
        CHECK(sol.stats[i].mu_value ==
              measure_eval(g, Measure::Size, sol.clusters[i]));
        CHECK(sol.stats[i].cut_value == boundary(g, sol.clusters[i]).size);
    }
}

TEST_CASE("uncrossing is deterministic") {
    MultiGraph g = demo_graph();
    std::vector<VertexSet> cover = {{0, 1, 2}, {1, 2, 3}};
    PartitionSolution a = partition_from_cover(g, Measure::Size, 3, 2, cover);
    PartitionSolution b = partition_from_cover(g, Measure::Size, 3, 2, cover);
    CHECK(a.clusters == b.clusters);
}

TEST_CASE("invalid covers are refused") {
    MultiGraph g = demo_graph();
    CHECK_THROWS_AS(partition_from_cover(g, Measure::Size, 3, 2, {{0, 1, 2}}),
                    std::invalid_argument);  // not a cover
    CHECK_THROWS_AS(partition_from_cover(g, Measure::Size, 2, 2, {{0, 1, 2}, {1, 2, 3}}),
                    std::invalid_argument);  // member over mu budget
    CHECK_THROWS_AS(partition_from_cover(g, Measure::Size, 3, 1, {{0, 1, 2}, {1, 2, 3}}),
                    std::invalid_argument);  // member over cut budget
}

TEST_CASE("random covers from oracle clusters always uncross") {
    std::mt19937_64 rng(424);
    int solved = 0;
    for (int round = 0; round < 80; ++round) {
        MultiGraph g = random_multigraph(7, 0.4, 2, rng);
        long long p = 2 + static_cast<long long>(rng() % 4);
        long long q = 1 + static_cast<long long>(rng() % 4);

        std::vector<VertexSet> cover;
        bool all = true;
        for (int v = 0; v < g.n() && all; ++v) {
            auto c = oracle_cluster(g, Measure::Size, p, q, v);
            if (c)
                cover.push_back(*c);
            else
                all = false;
        }
        if (!all) continue;
        ++solved;
        PartitionSolution sol = partition_from_cover(g, Measure::Size, p, q, cover);
        CHECK(verify_partition(g, Measure::Size, p, q, sol.clusters).ok);
        CHECK(covers_everything(g.n(), sol.clusters));
        CHECK(refines_cover(sol.clusters, cover));
    }
    CHECK(solved > 10);  // the sweep must actually exercise the uncrossing
}

TEST_CASE("uncrossing preserves solvability for every measure") {
    std::mt19937_64 rng(908);
    for (Measure mu : {Measure::Size, Measure::NonEdge, Measure::NonDeg}) {
        int solved = 0;
        for (int round = 0; round < 40; ++round) {
            MultiGraph g = random_simple(6, 0.55, rng);
            long long p = mu == Measure::Size ? 3 + static_cast<long long>(rng() % 3)
                                              : static_cast<long long>(rng() % 3);
            long long q = 1 + static_cast<long long>(rng() % 4);
            std::vector<VertexSet> cover;
            bool all = true;
            for (int v = 0; v < g.n() && all; ++v) {
                auto c = oracle_cluster(g, mu, p, q, v);
                if (c)
                    cover.push_back(*c);
                else
                    all = false;
            }
            if (!all) continue;
            ++solved;
            PartitionSolution sol = partition_from_cover(g, mu, p, q, cover);
            CHECK(verify_partition(g, mu, p, q, sol.clusters).ok);
        }
        CHECK(solved > 5);
    }
}

}  // TEST_SUITE
