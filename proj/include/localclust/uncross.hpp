#pragma once

#include <optional>
#include <string>
#include <vector>

#include "localclust/measures.hpp"
#include "localclust/multigraph.hpp"

namespace localclust {

struct ClusterStats {
    long long mu_value = 0;
    long long cut_value = 0;
};

struct PartitionSolution {
    std::vector<VertexSet> clusters;
    std::vector<ClusterStats> stats;
};

struct VerifyReport {
    bool ok = true;
    std::string violation;  // first violated constraint, empty when ok
    std::vector<ClusterStats> stats;
};

// Turn a cover by valid clusters into a partition into valid clusters.
// Subsets of other clusters are dropped; for an intersecting pair the one with
// the larger index is shrunk when its difference keeps a boundary no larger
// (posimodularity guarantees one side always works). Every output cluster is a
// subset of some input cluster. Throws std::invalid_argument if the input is
// not a cover by valid clusters.
PartitionSolution partition_from_cover(const MultiGraph& g, Measure mu, long long p,
                                       long long q, const std::vector<VertexSet>& cover);

VerifyReport verify_partition(const MultiGraph& g, Measure mu, long long p, long long q,
                              const std::vector<VertexSet>& clusters);

}  // namespace localclust
