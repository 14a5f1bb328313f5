#pragma once

#include <vector>

#include "localclust/mincut.hpp"
#include "localclust/multigraph.hpp"

namespace localclust {

// An inclusionwise minimal s-t separator whose source side cannot be enlarged
// without paying more edges. The cut is exactly boundary(g, source_side).
struct ImportantSeparator {
    EdgeCut cut;
    VertexSet source_side;
};

// True iff boundary(g, k) is a minimal s-t separator and no separator of at
// most the same size has a strictly larger source component.
bool is_important_separator(const MultiGraph& g, int s, int t, const VertexSet& k);

// All important s-t separators of size <= k, sorted by (size, source side).
// Branching: the unique maximum-side minimum cut contributes its boundary; on
// its lexicographically smallest boundary edge e we recurse once with one copy
// of e deleted (budget k-1) and once with the maximum side plus e's far
// endpoint contracted into s. Candidates are filtered by the predicate above.
std::vector<ImportantSeparator> enumerate_important_separators(const MultiGraph& g, int s,
                                                               int t, long long k);

// Important sets at v: connected X avoiding v with d(X) <= q such that no
// connected proper superset avoiding v has boundary <= d(X).
bool is_important_set(const MultiGraph& g, int v, const VertexSet& x, long long q);

// Union over u != v of source sides of important u-v separators of size <= q.
std::vector<VertexSet> enumerate_important_sets(const MultiGraph& g, int v, long long q);

}  // namespace localclust
