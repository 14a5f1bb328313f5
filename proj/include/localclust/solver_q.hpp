#pragma once

#include <cstdint>
#include <vector>

#include "localclust/measures.hpp"
#include "localclust/multigraph.hpp"
#include "localclust/outcome.hpp"

namespace localclust {

// All ways the complement of a cluster around v can split into connected
// pieces: sets with boundary 1..q plus, kept apart, the components of the
// graph that do not hold v (the only sets with boundary 0).
struct ImportantFamily {
    std::vector<VertexSet> sets;  // boundary >= 1, sorted by (boundary, set)
    std::vector<long long> cuts;  // boundary sizes matching sets
    std::vector<VertexSet> free_components;
};

ImportantFamily build_important_family(const MultiGraph& g, int v, long long q);

struct SolveOptions {
    // DerandSimple walks the candidate piece families directly; DerandGrouped
    // walks them schedule-first, counting how many pieces of each boundary
    // size to use. Both are exhaustive. Randomized samples each piece with
    // probability 4^-boundary and needs a seed; Auto starts exhaustively and
    // falls back to sampling if the candidate space overruns the budget.
    enum class Mode { Auto, DerandSimple, DerandGrouped, Randomized };
    Mode mode = Mode::Auto;
    uint64_t seed = 0;
    double delta = 0.01;  // randomized miss bound on yes instances
    long long max_trials = 1'000'000;
    long long selection_budget = 500'000;
};

// Decides whether v sits in a cluster with measure at most p and boundary at
// most q; with a derandomized mode the result is exact.
ClusterOutcome cluster_fpt_q(const MultiGraph& g, Measure mu, long long p, long long q, int v,
                             const SolveOptions& options = {});

// A partition into such clusters exists iff every vertex has one; the
// per-vertex clusters are then uncrossed into a partition.
PartitionOutcome partition_fpt_q(const MultiGraph& g, Measure mu, long long p, long long q,
                                 const SolveOptions& options = {});

}  // namespace localclust
