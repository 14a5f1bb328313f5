#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "localclust/measures.hpp"
#include "localclust/multigraph.hpp"
#include "localclust/uncross.hpp"

namespace localclust {

struct PlantedInstance {
    MultiGraph graph;
    PartitionSolution witness;
    long long p = 0;  // measure bound the witness satisfies
    long long q = 0;  // cut bound the witness satisfies
};

// Blocks are cliques with up to intra_budget edges knocked out and at most
// inter_budget edges leaving each block. The returned witness always passes
// verify_partition under (mu, p, q).
PlantedInstance gen_planted(Measure mu, int n, int blocks, long long intra_budget,
                            long long inter_budget, std::mt19937_64& rng);

struct GadgetInstance {
    MultiGraph graph;
    int apex = 0;
    int k = 0;
    long long base_degree = 0;
    long long q = 0;
};

// Apex vertex tied to every base vertex by m+1 parallel edges, with q the
// exact cut of a k-clique plus the apex: an apex cluster within the budget
// exists precisely when the base has a k-clique.
GadgetInstance gen_hardness_gadget(const MultiGraph& base, int k);

MultiGraph random_simple(int n, double edge_prob, std::mt19937_64& rng);
MultiGraph random_multigraph(int n, double edge_prob, int max_mult, std::mt19937_64& rng);
MultiGraph random_connected_simple(int n, double extra_prob, std::mt19937_64& rng);
MultiGraph random_regular(int n, int degree, std::mt19937_64& rng);

// Every labeled connected graph on n vertices; n is capped at 6.
std::vector<MultiGraph> all_labeled_connected_graphs(int n);

}  // namespace localclust
