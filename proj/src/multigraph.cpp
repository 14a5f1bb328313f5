#include "localclust/multigraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace localclust {

VertexSet::VertexSet(std::initializer_list<int> xs) : v_(xs) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

VertexSet::VertexSet(std::vector<int> xs) : v_(std::move(xs)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

VertexSet VertexSet::full(int n) {
    VertexSet s;
    s.v_.resize(n);
    for (int i = 0; i < n; ++i) s.v_[i] = i;
    return s;
}

bool VertexSet::contains(int x) const {
    return std::binary_search(v_.begin(), v_.end(), x);
}

void VertexSet::add(int x) {
    auto it = std::lower_bound(v_.begin(), v_.end(), x);
    if (it == v_.end() || *it != x) v_.insert(it, x);
}

void VertexSet::remove(int x) {
    auto it = std::lower_bound(v_.begin(), v_.end(), x);
    if (it != v_.end() && *it == x) v_.erase(it);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
    auto a = v_.begin();
    auto b = other.v_.begin();
    while (a != v_.end() && b != other.v_.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else return true;
    }
    return false;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    VertexSet r;
    std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                   std::back_inserter(r.v_));
    return r;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    VertexSet r;
    std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                          std::back_inserter(r.v_));
    return r;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    VertexSet r;
    std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(r.v_));
    return r;
}

std::string VertexSet::str() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < v_.size(); ++i) {
        if (i) os << ',';
        os << v_[i];
    }
    os << '}';
    return os.str();
}

MultiGraph::MultiGraph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::map<std::pair<int, int>, int> mult;
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u > v) std::swap(u, v);
        ++mult[{u, v}];
    }
    n_ = n;
    for (auto& [uv, c] : mult) classes_.push_back({uv.first, uv.second, c});
    build_adj();
}

MultiGraph MultiGraph::from_classes(int n, std::vector<Edge> classes) {
    MultiGraph g;
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    g.n_ = n;
    std::map<std::pair<int, int>, int> mult;
    for (auto& e : classes) {
        int u = e.u, v = e.v;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u > v) std::swap(u, v);
        if (e.mult <= 0) throw std::invalid_argument("multiplicity must be positive");
        mult[{u, v}] += e.mult;
    }
    for (auto& [uv, c] : mult) g.classes_.push_back({uv.first, uv.second, c});
    g.build_adj();
    return g;
}

void MultiGraph::build_adj() {
    adj_.assign(n_, {});
    deg_.assign(n_, 0);
    m_ = 0;
    simple_ = true;
    for (const auto& e : classes_) {
        adj_[e.u].push_back({e.v, e.mult});
        adj_[e.v].push_back({e.u, e.mult});
        deg_[e.u] += e.mult;
        deg_[e.v] += e.mult;
        m_ += e.mult;
        if (e.mult > 1) simple_ = false;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void MultiGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
}

int MultiGraph::multiplicity(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), std::make_pair(v, 0));
    if (it != nb.end() && it->first == v) return it->second;
    return 0;
}

long long MultiGraph::degree(int v) const {
    check_vertex(v);
    return deg_[v];
}

const std::vector<std::pair<int, int>>& MultiGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

MultiGraph MultiGraph::remove_one_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    std::vector<Edge> classes;
    bool found = false;
    for (const auto& e : classes_) {
        if (e.u == u && e.v == v) {
            found = true;
            if (e.mult > 1) classes.push_back({e.u, e.v, e.mult - 1});
        } else {
            classes.push_back(e);
        }
    }
    if (!found) throw std::invalid_argument("edge not present");
    return from_classes(n_, std::move(classes));
}

EdgeCut boundary(const MultiGraph& g, const VertexSet& x) {
    EdgeCut cut;
    for (int v : x) g.check_vertex(v);
    for (const auto& e : g.edges()) {
        if (x.contains(e.u) != x.contains(e.v)) {
            cut.edges.push_back(e);
            cut.size += e.mult;
        }
    }
    return cut;
}

std::vector<VertexSet> components(const MultiGraph& g, const VertexSet& restrict) {
    for (int v : restrict) g.check_vertex(v);
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.n(), 0);
    for (int start : restrict) {
        if (seen[start]) continue;
        std::vector<int> stack{start};
        std::vector<int> comp;
        seen[start] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (auto [w, mult] : g.neighbors(u)) {
                (void)mult;
                if (!seen[w] && restrict.contains(w)) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        comps.emplace_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

bool is_connected_subset(const MultiGraph& g, const VertexSet& x) {
    if (x.empty()) return true;
    return components(g, x).size() == 1;
}

ContractResult contract_with_map(const MultiGraph& g, const VertexSet& x, int rep) {
    g.check_vertex(rep);
    for (int v : x) g.check_vertex(v);
    if (!x.contains(rep)) throw std::invalid_argument("rep must belong to the contracted set");

    std::vector<int> old_to_new(g.n(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (v == rep || !x.contains(v)) old_to_new[v] = next++;
    }
    for (int v : x) old_to_new[v] = old_to_new[rep];

    std::vector<Edge> classes;
    for (const auto& e : g.edges()) {
        int u = old_to_new[e.u];
        int v = old_to_new[e.v];
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        classes.push_back({u, v, e.mult});
    }
    ContractResult res{MultiGraph::from_classes(next, std::move(classes)), std::move(old_to_new)};
    return res;
}

MultiGraph contract_into(const MultiGraph& g, const VertexSet& x, int rep) {
    return contract_with_map(g, x, rep).graph;
}

}  // namespace localclust
