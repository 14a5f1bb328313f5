#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace localclust {

// Sorted set of vertex ids. Cheap value type; all set algebra is by merge.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> xs);
    explicit VertexSet(std::vector<int> xs);

    static VertexSet full(int n);

    bool contains(int x) const;
    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }

    void add(int x);
    void remove(int x);

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet unite(const VertexSet& other) const;
    VertexSet intersect(const VertexSet& other) const;
    VertexSet minus(const VertexSet& other) const;

    const std::vector<int>& items() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool operator==(const VertexSet& other) const = default;
    bool operator<(const VertexSet& other) const { return v_ < other.v_; }

    std::string str() const;

private:
    std::vector<int> v_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const {
        size_t h = 1469598103934665603ull;
        for (int x : s) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// One parallel class: all copies of the edge {u, v}, u < v.
struct Edge {
    int u = 0;
    int v = 0;
    int mult = 1;

    bool operator==(const Edge&) const = default;
};

// Multiset of edges crossing a vertex set. size counts multiplicity.
struct EdgeCut {
    std::vector<Edge> edges;  // sorted by (u, v)
    long long size = 0;
};

// Undirected multigraph on dense vertex ids 0..n-1. Self-loops are rejected.
// Immutable after construction; mutating helpers return new graphs.
class MultiGraph {
public:
    MultiGraph() = default;
    // Edge list with repetitions: each occurrence of {u, v} adds one copy.
    MultiGraph(int n, const std::vector<std::pair<int, int>>& edge_list);
    static MultiGraph from_classes(int n, std::vector<Edge> classes);

    int n() const { return n_; }
    long long m() const { return m_; }
    bool simple() const { return simple_; }

    int multiplicity(int u, int v) const;
    long long degree(int v) const;
    // (neighbor, multiplicity) pairs, sorted by neighbor.
    const std::vector<std::pair<int, int>>& neighbors(int v) const;
    const std::vector<Edge>& edges() const { return classes_; }

    MultiGraph remove_one_edge(int u, int v) const;

    void check_vertex(int v) const;

private:
    int n_ = 0;
    long long m_ = 0;
    bool simple_ = true;
    std::vector<Edge> classes_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<long long> deg_;

    void build_adj();
};

// Edges with exactly one endpoint in x. d(x) is boundary(g, x).size.
EdgeCut boundary(const MultiGraph& g, const VertexSet& x);

// Connected components of the subgraph induced by restrict, each sorted.
// Components are ordered by smallest member.
std::vector<VertexSet> components(const MultiGraph& g, const VertexSet& restrict);

bool is_connected_subset(const MultiGraph& g, const VertexSet& x);

// Collapse x onto its member rep: edges inside x vanish, edges leaving x
// become parallel edges at rep. Kept vertices are relabeled densely in order;
// old_to_new maps original ids (-1 for removed ones, rep's slot for x's).
struct ContractResult {
    MultiGraph graph;
    std::vector<int> old_to_new;
};
ContractResult contract_with_map(const MultiGraph& g, const VertexSet& x, int rep);
MultiGraph contract_into(const MultiGraph& g, const VertexSet& x, int rep);

}  // namespace localclust
