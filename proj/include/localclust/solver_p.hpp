#pragma once

#include <vector>

#include "localclust/measures.hpp"
#include "localclust/multigraph.hpp"
#include "localclust/outcome.hpp"

namespace localclust {

// C is v-minimal when v lies outside C and every proper subset C' of C,
// the empty set included, satisfies d(C' + v) > d(C + v).
bool is_v_minimal(const MultiGraph& g, int v, const VertexSet& c);

struct VMinimalSet {
    VertexSet set;
    long long d_to_v = 0;     // edge count between the set and v
    long long d_away = 0;     // edge count between the set and everything but v
    long long nonedges = 0;   // vertex pairs inside the set with no edge
    long long nondeg_in = 0;  // worst non-neighbor count inside set + v, over the set
};

// All connected v-minimal sets with at most bound vertices, sorted.
// Only defined for simple graphs.
std::vector<VMinimalSet> enumerate_vminimal_small(const MultiGraph& g, int v, long long bound);

// All v-minimal sets with at least 3p vertices whose union with v has
// non-degree measure at most p. Complete for p = 0 too. Simple graphs only.
std::vector<VertexSet> enumerate_vminimal_large_nondeg(const MultiGraph& g, int v, long long p);

// Cluster and partition search parameterized by the measure bound p.
// Simple graphs only; parallel edges break the neighborhood-closure
// facts this search depends on.
ClusterOutcome cluster_fpt_p(const MultiGraph& g, Measure mu, long long p, long long q, int v);
PartitionOutcome partition_fpt_p(const MultiGraph& g, Measure mu, long long p, long long q);

}  // namespace localclust
