#include "localclust/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>

namespace localclust {

namespace {

struct Charge {
    long long left;
    const char* who;

    void spend() {
        if (--left < 0) throw budget_exceeded(std::string(who) + " oracle budget exhausted");
    }
};

// Enumerates how many copies to delete from each parallel class, total at
// most k, and calls leaf() on every complete choice. Stops once leaf()
// reports success.
bool for_each_deletion(const std::vector<Edge>& classes, long long k,
                       std::vector<int>& removed, const std::function<bool()>& leaf) {
    std::function<bool(size_t, long long)> rec = [&](size_t ci, long long left) -> bool {
        if (ci == classes.size()) return leaf();
        const long long top = std::min<long long>(classes[ci].mult, left);
        for (long long take = 0; take <= top; ++take) {
            removed[ci] = static_cast<int>(take);
            if (rec(ci + 1, left - take)) return true;
        }
        removed[ci] = 0;
        return false;
    };
    if (k < 0) return false;
    return rec(0, k);
}

// Component of start once removed[ci] copies of each class are gone.
VertexSet component_after(const MultiGraph& g,
                          const std::vector<std::vector<std::pair<int, size_t>>>& adj,
                          const std::vector<int>& removed, int start) {
    std::vector<char> in(static_cast<size_t>(g.n()), 0);
    std::vector<int> stack{start};
    in[static_cast<size_t>(start)] = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (auto [y, ci] : adj[static_cast<size_t>(x)]) {
            if (in[static_cast<size_t>(y)] || g.edges()[ci].mult - removed[ci] <= 0) continue;
            in[static_cast<size_t>(y)] = 1;
            stack.push_back(y);
        }
    }
    std::vector<int> members;
    for (int x = 0; x < g.n(); ++x)
        if (in[static_cast<size_t>(x)]) members.push_back(x);
    return VertexSet(std::move(members));
}

std::vector<std::vector<std::pair<int, size_t>>> class_adjacency(const MultiGraph& g) {
    std::vector<std::vector<std::pair<int, size_t>>> adj(static_cast<size_t>(g.n()));
    for (size_t ci = 0; ci < g.edges().size(); ++ci) {
        const Edge& e = g.edges()[ci];
        adj[static_cast<size_t>(e.u)].push_back({e.v, ci});
        adj[static_cast<size_t>(e.v)].push_back({e.u, ci});
    }
    return adj;
}

}  // namespace

std::optional<VertexSet> oracle_cluster(const MultiGraph& g, Measure mu, long long p,
                                        long long q, int v, long long budget) {
    g.check_vertex(v);
    if (q < 0) return std::nullopt;
    Charge charge{budget, "cluster"};
    const auto adj = class_adjacency(g);
    std::vector<int> removed(g.edges().size(), 0);
    std::optional<VertexSet> found;
    for_each_deletion(g.edges(), q, removed, [&]() -> bool {
        charge.spend();
        VertexSet comp = component_after(g, adj, removed, v);
        if (boundary(g, comp).size > q) return false;
        if (measure_eval(g, mu, comp) > p) return false;
        found = std::move(comp);
        return true;
    });
    return found;
}

std::optional<std::vector<VertexSet>> oracle_partition(const MultiGraph& g, Measure mu,
                                                       long long p, long long q,
                                                       long long budget) {
    if (g.n() == 0) return std::vector<VertexSet>{};
    Charge charge{budget, "partition"};
    std::vector<int> block_of(static_cast<size_t>(g.n()), 0);
    std::optional<std::vector<VertexSet>> found;
    std::function<bool(int, int)> rec = [&](int vertex, int used) -> bool {
        if (vertex == g.n()) {
            charge.spend();
            std::vector<std::vector<int>> groups(static_cast<size_t>(used));
            for (int x = 0; x < g.n(); ++x)
                groups[static_cast<size_t>(block_of[static_cast<size_t>(x)])].push_back(x);
            std::vector<VertexSet> clusters;
            clusters.reserve(groups.size());
            for (auto& grp : groups) clusters.emplace_back(std::move(grp));
            for (const VertexSet& cl : clusters) {
                if (boundary(g, cl).size > q) return false;
                if (measure_eval(g, mu, cl) > p) return false;
            }
            found = std::move(clusters);
            return true;
        }
        for (int b = 0; b <= used; ++b) {
            block_of[static_cast<size_t>(vertex)] = b;
            if (rec(vertex + 1, std::max(used, b + 1))) return true;
        }
        return false;
    };
    rec(0, 0);
    return found;
}

std::vector<ImportantSeparator> oracle_important_separators(const MultiGraph& g, int s, int t,
                                                            long long k, long long budget) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) throw std::invalid_argument("source and sink must differ");
    std::vector<ImportantSeparator> out;
    if (k < 0) return out;
    Charge charge{budget, "separator"};
    const auto adj = class_adjacency(g);
    std::vector<int> removed(g.edges().size(), 0);
    std::vector<ImportantSeparator> minimal;
    for_each_deletion(g.edges(), k, removed, [&]() -> bool {
        charge.spend();
        VertexSet comp_s = component_after(g, adj, removed, s);
        if (comp_s.contains(t)) return false;
        VertexSet comp_t = component_after(g, adj, removed, t);
        // Minimal means putting back any deleted copy reconnects s and t,
        // i.e. every deleted copy straddles the two end components.
        for (size_t ci = 0; ci < removed.size(); ++ci) {
            if (removed[ci] == 0) continue;
            const Edge& e = g.edges()[ci];
            const bool straddle = (comp_s.contains(e.u) && comp_t.contains(e.v)) ||
                                  (comp_s.contains(e.v) && comp_t.contains(e.u));
            if (!straddle) return false;
        }
        minimal.push_back(ImportantSeparator{boundary(g, comp_s), std::move(comp_s)});
        return false;  // keep enumerating
    });
    for (size_t i = 0; i < minimal.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < minimal.size() && !dominated; ++j) {
            if (j == i) continue;
            dominated = minimal[i].source_side.is_subset_of(minimal[j].source_side) &&
                        minimal[i].source_side != minimal[j].source_side &&
                        minimal[j].cut.size <= minimal[i].cut.size;
        }
        if (!dominated) out.push_back(minimal[i]);
    }
    std::sort(out.begin(), out.end(), [](const ImportantSeparator& a, const ImportantSeparator& b) {
        if (a.cut.size != b.cut.size) return a.cut.size < b.cut.size;
        return a.source_side < b.source_side;
    });
    return out;
}

std::vector<VertexSet> oracle_important_sets(const MultiGraph& g, int v, long long q,
                                             long long budget) {
    g.check_vertex(v);
    std::vector<VertexSet> out;
    if (q < 0) return out;
    if (g.n() > 62) throw std::invalid_argument("important set oracle is for small graphs");
    Charge charge{budget, "important set"};
    std::vector<int> others;
    for (int x = 0; x < g.n(); ++x)
        if (x != v) others.push_back(x);
    struct Cand {
        VertexSet set;
        long long cut;
    };
    std::vector<Cand> cands;
    for (uint64_t mask = 1; mask < (1ull << others.size()); ++mask) {
        charge.spend();
        std::vector<int> members;
        for (size_t j = 0; j < others.size(); ++j)
            if (mask >> j & 1) members.push_back(others[j]);
        VertexSet x(std::move(members));
        if (!is_connected_subset(g, x)) continue;
        const long long cut = boundary(g, x).size;
        if (cut > q) continue;
        cands.push_back(Cand{std::move(x), cut});
    }
    for (size_t i = 0; i < cands.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < cands.size() && !dominated; ++j) {
            if (j == i) continue;
            dominated = cands[i].set.is_subset_of(cands[j].set) &&
                        cands[i].set != cands[j].set && cands[j].cut <= cands[i].cut;
        }
        if (!dominated) out.push_back(cands[i].set);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<SatelliteSolution> oracle_satellite(const SatelliteInstance& inst, Measure mu,
                                                  long long p, long long q, long long budget) {
    const int r = inst.satellite_count();
    if (r > 62) throw std::invalid_argument("satellite oracle is for small instances");
    Charge charge{budget, "satellite"};
    for (uint64_t mask = 0; mask < (1ull << r); ++mask) {
        charge.spend();
        VertexSet cluster = inst.center();
        std::vector<int> chosen;
        for (int i = 1; i <= r; ++i) {
            if (mask >> (i - 1) & 1) {
                cluster = cluster.unite(inst.block(i));
                chosen.push_back(i);
            }
        }
        const long long cut = boundary(inst.graph(), cluster).size;
        if (cut > q) continue;
        const long long val = measure_eval(inst.graph(), mu, cluster);
        if (val > p) continue;
        SatelliteSolution sol;
        sol.chosen = std::move(chosen);
        sol.cluster = std::move(cluster);
        sol.mu_value = val;
        sol.cut_value = cut;
        return sol;
    }
    return std::nullopt;
}

}  // namespace localclust
