#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "localclust/measures.hpp"
#include "localclust/multigraph.hpp"
#include "localclust/satellite.hpp"
#include "localclust/separators.hpp"

namespace localclust {

struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Reference answers by exhaustive enumeration, deliberately sharing no search
// structure with the real solvers. budget caps elementary enumeration steps;
// an overrun throws budget_exceeded rather than silently truncating.
constexpr long long kDefaultOracleBudget = 50'000'000;

// Scans every way of deleting at most q edge copies and inspects the piece
// the deletions carve out around v.
std::optional<VertexSet> oracle_cluster(const MultiGraph& g, Measure mu, long long p,
                                        long long q, int v,
                                        long long budget = kDefaultOracleBudget);

// Scans every partition of the vertex set.
std::optional<std::vector<VertexSet>> oracle_partition(const MultiGraph& g, Measure mu,
                                                       long long p, long long q,
                                                       long long budget = kDefaultOracleBudget);

// Scans every edge multiset of size at most k, keeps the minimal s-t
// separators, then drops dominated source sides.
std::vector<ImportantSeparator> oracle_important_separators(const MultiGraph& g, int s, int t,
                                                            long long k,
                                                            long long budget = kDefaultOracleBudget);

// Scans every vertex subset avoiding v.
std::vector<VertexSet> oracle_important_sets(const MultiGraph& g, int v, long long q,
                                             long long budget = kDefaultOracleBudget);

// Scans every satellite subset.
std::optional<SatelliteSolution> oracle_satellite(const SatelliteInstance& inst, Measure mu,
                                                  long long p, long long q,
                                                  long long budget = kDefaultOracleBudget);

}  // namespace localclust
