#pragma once

#include <optional>
#include <vector>

#include "localclust/measures.hpp"
#include "localclust/multigraph.hpp"

namespace localclust {

// A center block with satellites hanging off it. blocks[0] is the center and
// contains v; the others are satellites, pairwise non-adjacent, so every edge
// leaving a satellite lands in the center. The blocks partition the vertices.
class SatelliteInstance {
public:
    SatelliteInstance(MultiGraph g, std::vector<VertexSet> blocks, int v);

    const MultiGraph& graph() const { return g_; }
    int center_vertex() const { return v_; }
    const VertexSet& center() const { return blocks_[0]; }

    int satellite_count() const { return static_cast<int>(blocks_.size()) - 1; }
    // Satellites are indexed 1..satellite_count().
    const VertexSet& block(int i) const { return blocks_[static_cast<size_t>(i)]; }
    long long block_cut(int i) const { return cut_[static_cast<size_t>(i)]; }
    int block_of(int vertex) const;

private:
    MultiGraph g_;
    std::vector<VertexSet> blocks_;
    int v_ = 0;
    std::vector<long long> cut_;  // d(blocks[i]); for satellites all into the center
    std::vector<int> owner_;      // vertex -> block index
};

// A cluster of the form center + chosen satellites meeting both bounds.
struct SatelliteSolution {
    std::vector<int> chosen;  // included satellite indices, ascending
    VertexSet cluster;
    long long mu_value = 0;
    long long cut_value = 0;
};

// Exact solvers: a solution is returned iff one exists. Verified before
// returning; NonEdge and NonDeg reject non-simple graphs.
std::optional<SatelliteSolution> solve_satellite(const SatelliteInstance& inst, Measure mu,
                                                 long long p, long long q);
std::optional<SatelliteSolution> solve_satellite_size(const SatelliteInstance& inst,
                                                      long long p, long long q);
std::optional<SatelliteSolution> solve_satellite_nonedge(const SatelliteInstance& inst,
                                                         long long p, long long q);
std::optional<SatelliteSolution> solve_satellite_nondeg(const SatelliteInstance& inst,
                                                        long long p, long long q);

// One reachable outcome of the non-edge scan: a cluster size, its non-edge
// count, and the largest total satellite boundary absorbed at that shape.
struct NonEdgeState {
    long long cluster_size = 0;
    long long nonedges = 0;
    long long absorbed = 0;

    bool operator==(const NonEdgeState&) const = default;
};

// All (size, nonedges) pairs with nonedges <= p reachable by adding whole
// satellites to the center, each with its best absorbed boundary. Sorted.
// Exposed so tests can pin the scan against subset enumeration.
std::vector<NonEdgeState> enumerate_nonedge_states(const SatelliteInstance& inst, long long p);

}  // namespace localclust
