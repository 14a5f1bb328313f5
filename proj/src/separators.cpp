#include "localclust/separators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace localclust {

namespace {

VertexSet component_of(const MultiGraph& g, const VertexSet& restrict, int v) {
    for (const auto& comp : components(g, restrict))
        if (comp.contains(v)) return comp;
    return {};
}

// Maximal min-cut source side can pick up stray components; the branching and
// the importance test both want its connected piece at s.
VertexSet max_side_component(const MultiGraph& g, int s, const MinCutResult& mc) {
    return component_of(g, mc.max_source_side, s);
}

void collect_candidates(const MultiGraph& g, const std::vector<VertexSet>& origin, int s,
                        int t, long long k, std::set<VertexSet>& out) {
    MinCutResult mc = min_cut(g, s, t);
    if (mc.value > k) return;

    VertexSet khat = max_side_component(g, s, mc);
    VertexSet khat_orig;
    for (int v : khat) khat_orig = khat_orig.unite(origin[v]);
    out.insert(khat_orig);
    if (mc.value == 0) return;

    EdgeCut cut = boundary(g, khat);
    const Edge& e = cut.edges.front();  // classes are sorted, so this is lexicographic

    // e belongs to the separator: delete one copy, budget drops.
    if (k - 1 >= 0) collect_candidates(g.remove_one_edge(e.u, e.v), origin, s, t, k - 1, out);

    // e avoided: everything on the maximum side plus e's far endpoint sticks
    // with s in any remaining important separator. If the far endpoint is t
    // itself there is no such separator.
    int far = khat.contains(e.u) ? e.v : e.u;
    if (far == t) return;
    VertexSet merge = khat;
    merge.add(far);
    auto [gc, remap] = contract_with_map(g, merge, s);
    std::vector<VertexSet> origin2(gc.n());
    for (int v = 0; v < g.n(); ++v) origin2[remap[v]] = origin2[remap[v]].unite(origin[v]);
    collect_candidates(gc, origin2, remap[s], remap[t], k, out);
}

}  // namespace

bool is_important_separator(const MultiGraph& g, int s, int t, const VertexSet& k) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (!k.contains(s) || k.contains(t)) return false;
    if (!is_connected_subset(g, k)) return false;

    EdgeCut cut = boundary(g, k);
    if (cut.size == 0) return true;  // the empty separator of a split graph

    // Minimality: restoring any cut edge must reconnect s and t, i.e. every
    // cut edge lands in t's component of the severed graph.
    VertexSet rest = VertexSet::full(g.n()).minus(k);
    VertexSet tcomp = component_of(g, rest, t);
    for (const auto& e : cut.edges) {
        int outside = k.contains(e.u) ? e.v : e.u;
        if (!tcomp.contains(outside)) return false;
    }

    // Domination: a connected strict superset of k with a cut no larger would
    // do the same separation at most as expensively.
    auto [gc, remap] = contract_with_map(g, k, s);
    MinCutResult mc = min_cut(gc, remap[s], remap[t]);
    if (mc.value != cut.size) return false;
    VertexSet biggest = max_side_component(gc, remap[s], mc);
    return biggest.size() == 1;
}

std::vector<ImportantSeparator> enumerate_important_separators(const MultiGraph& g, int s,
                                                               int t, long long k) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) throw std::invalid_argument("separator endpoints must differ");
    if (k < 0) return {};

    std::vector<VertexSet> origin(g.n());
    for (int v = 0; v < g.n(); ++v) origin[v] = VertexSet{v};
    std::set<VertexSet> sides;
    collect_candidates(g, origin, s, t, k, sides);

    std::vector<ImportantSeparator> result;
    for (const auto& side : sides) {
        EdgeCut cut = boundary(g, side);
        if (cut.size > k) continue;
        if (!is_important_separator(g, s, t, side)) continue;
        result.push_back({std::move(cut), side});
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.cut.size != b.cut.size) return a.cut.size < b.cut.size;
        return a.source_side < b.source_side;
    });
    return result;
}

bool is_important_set(const MultiGraph& g, int v, const VertexSet& x, long long q) {
    g.check_vertex(v);
    if (x.empty() || x.contains(v)) return false;
    for (int u : x) g.check_vertex(u);
    if (boundary(g, x).size > q) return false;
    if (!is_connected_subset(g, x)) return false;

    long long d = boundary(g, x).size;
    auto [gc, remap] = contract_with_map(g, x, x.items().front());
    MinCutResult mc = min_cut(gc, remap[x.items().front()], remap[v]);
    if (mc.value != d) return false;
    VertexSet biggest = max_side_component(gc, remap[x.items().front()], mc);
    return biggest.size() == 1;
}

std::vector<VertexSet> enumerate_important_sets(const MultiGraph& g, int v, long long q) {
    g.check_vertex(v);
    std::set<VertexSet> out;
    for (int u = 0; u < g.n(); ++u) {
        if (u == v) continue;
        for (const auto& sep : enumerate_important_separators(g, u, v, q))
            out.insert(sep.source_side);
    }
    return {out.begin(), out.end()};
}

}  // namespace localclust
