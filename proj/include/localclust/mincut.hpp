#pragma once

#include "localclust/multigraph.hpp"

namespace localclust {

// Minimum s-t edge cut; each parallel edge has unit capacity. The two sides
// are the lattice extremes over all minimum cuts: min_source_side is the
// residual-reachable set of s, max_source_side the complement of what still
// reaches t. Both have boundary exactly `value`.
struct MinCutResult {
    long long value = 0;
    VertexSet min_source_side;
    VertexSet max_source_side;
};

MinCutResult min_cut(const MultiGraph& g, int s, int t);

}  // namespace localclust
