#include "localclust/solver_p.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "localclust/coloring.hpp"
#include "localclust/mincut.hpp"
#include "localclust/uncross.hpp"

namespace localclust {

namespace {

long long edges_to_vertex(const MultiGraph& g, const VertexSet& s, int v) {
    long long total = 0;
    for (auto [w, mult] : g.neighbors(v))
        if (s.contains(w)) total += mult;
    return total;
}

long long nonedges_within(const MultiGraph& g, const VertexSet& s) {
    long long bad = 0;
    const auto& verts = s.items();
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.multiplicity(verts[i], verts[j]) == 0) ++bad;
    return bad;
}

// max over u in s of the non-neighbors of u within s + v
long long worst_deficiency(const MultiGraph& g, const VertexSet& s, int v) {
    long long worst = 0;
    const auto& verts = s.items();
    for (int u : verts) {
        long long bad = g.multiplicity(u, v) == 0 ? 1 : 0;
        for (int w : verts)
            if (w != u && g.multiplicity(u, w) == 0) ++bad;
        worst = std::max(worst, bad);
    }
    return worst;
}

void require_simple(const MultiGraph& g) {
    if (!g.simple())
        throw std::invalid_argument("v-minimal machinery is only defined on simple graphs");
}

}  // namespace

bool is_v_minimal(const MultiGraph& g, int v, const VertexSet& c) {
    require_simple(g);
    g.check_vertex(v);
    if (c.contains(v)) return false;
    if (c.empty()) return true;  // no proper subsets to lose to
    for (int u : c) g.check_vertex(u);
    VertexSet with_v = c;
    with_v.add(v);
    const VertexSet rest = VertexSet::full(g.n()).minus(with_v);
    if (rest.empty()) {
        // every proper subset must pay a positive cut, so the graph is connected
        return is_connected_subset(g, VertexSet::full(g.n()));
    }
    // All competitors C' + v live inside C + v, so contracting the rest to a
    // single vertex keeps every competing cut intact. C is v-minimal exactly
    // when C + v is the unique minimum cut side, which the smallest min-cut
    // side being everything-but-the-contraction certifies.
    const long long target = boundary(g, with_v).size;
    const int rep = *rest.begin();
    const ContractResult ctr = contract_with_map(g, rest, rep);
    const MinCutResult mc = min_cut(ctr.graph, ctr.old_to_new[v], ctr.old_to_new[rep]);
    return mc.value == target &&
           static_cast<int>(mc.min_source_side.size()) == ctr.graph.n() - 1;
}

std::vector<VMinimalSet> enumerate_vminimal_small(const MultiGraph& g, int v, long long bound) {
    require_simple(g);
    g.check_vertex(v);
    std::set<VertexSet> candidates;
    std::function<void(VertexSet, VertexSet)> walk = [&](VertexSet s, VertexSet f) {
        int pick = -1;
        for (int w : s)
            for (auto [x, mult] : g.neighbors(w)) {
                (void)mult;
                if (x == v || s.contains(x) || f.contains(x)) continue;
                if (pick < 0 || x < pick) pick = x;
            }
        if (pick < 0) {
            candidates.insert(std::move(s));  // closed set, nothing left to decide
            return;
        }
        if (static_cast<long long>(s.size()) == bound) {
            candidates.insert(std::move(s));
            return;
        }
        if (static_cast<long long>(f.size()) == bound - 1) {
            // no more exclusions fit: each excluded neighbor already charges
            // one boundary edge, so the target must fill its whole component
            VertexSet avoid = f;
            avoid.add(v);
            const VertexSet allowed = VertexSet::full(g.n()).minus(avoid);
            const int anchor = *s.begin();
            for (VertexSet& comp : components(g, allowed))
                if (comp.contains(anchor)) {
                    candidates.insert(std::move(comp));
                    break;
                }
            return;
        }
        VertexSet grown = s;
        grown.add(pick);
        walk(std::move(grown), f);
        f.add(pick);
        walk(std::move(s), std::move(f));
    };
    if (bound >= 1)
        for (int u = 0; u < g.n(); ++u) {
            if (u == v) continue;
            walk(VertexSet{{u}}, VertexSet{});
        }
    std::vector<VMinimalSet> out;
    for (const VertexSet& c : candidates) {
        if (static_cast<long long>(c.size()) > bound) continue;
        if (!is_connected_subset(g, c)) continue;
        if (!is_v_minimal(g, v, c)) continue;
        VMinimalSet rec;
        rec.set = c;
        rec.d_to_v = edges_to_vertex(g, c, v);
        rec.d_away = boundary(g, c).size - rec.d_to_v;
        rec.nonedges = nonedges_within(g, c);
        rec.nondeg_in = worst_deficiency(g, c, v);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<VertexSet> enumerate_vminimal_large_nondeg(const MultiGraph& g, int v, long long p) {
    require_simple(g);
    g.check_vertex(v);
    if (p < 0) return {};
    std::set<VertexSet> seen;
    for (int u = 0; u < g.n(); ++u) {
        if (u == v) continue;
        // any qualifying set around u must swallow u's whole neighborhood;
        // everything else it may contain sits close to that neighborhood
        VertexSet core{{u}};
        for (auto [w, mult] : g.neighbors(u)) {
            (void)mult;
            if (w != v) core.add(w);
        }
        std::vector<int> extra;
        for (int w = 0; w < g.n(); ++w) {
            if (w == v || core.contains(w)) continue;
            long long missing = 0;
            for (int x : core)
                if (x != w && g.multiplicity(w, x) == 0) ++missing;
            if (missing <= p) extra.push_back(w);
        }
        if (static_cast<long long>(extra.size()) >= p + 3) continue;
        if (extra.size() > 62)
            throw std::invalid_argument("too many attachment candidates for subset enumeration");
        for (uint64_t mask = 0; mask < (1ull << extra.size()); ++mask) {
            VertexSet c = core;
            for (size_t i = 0; i < extra.size(); ++i)
                if (mask >> i & 1) c.add(extra[i]);
            if (static_cast<long long>(c.size()) < 3 * p) continue;
            VertexSet cl = c;
            cl.add(v);
            if (measure_eval(g, Measure::NonDeg, cl) > p) continue;
            if (!is_v_minimal(g, v, c)) continue;
            seen.insert(std::move(c));
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

struct RainbowPiece {
    uint64_t mask;
    size_t idx;
};

std::vector<RainbowPiece> rainbow_pieces(const std::vector<VMinimalSet>& catalog,
                                         const std::vector<int>& coloring) {
    std::vector<RainbowPiece> usable;
    for (size_t i = 0; i < catalog.size(); ++i) {
        uint64_t m = 0;
        bool rainbow = true;
        for (int w : catalog[i].set) {
            const uint64_t b = 1ull << coloring[w];
            if (m & b) {
                rainbow = false;
                break;
            }
            m |= b;
        }
        if (rainbow) usable.push_back({m, i});
    }
    return usable;
}

// Shared state walk: states keyed by tracked quantities plus the used color
// set, with parent pointers for rebuilding the chosen pieces. The tracked
// cut and measure values only overestimate the real ones, and match them
// whenever the chosen pieces are pairwise non-adjacent, which some optimal
// choice always is.
template <typename Key, typename Step>
std::optional<VertexSet> run_piece_dp(const std::vector<VMinimalSet>& catalog,
                                      const std::vector<RainbowPiece>& usable, int v,
                                      const Key& seed, Step step,
                                      const std::function<bool(const Key&)>& accept) {
    struct Entry {
        Key prev;
        int piece;
    };
    std::map<Key, Entry> states;
    states.emplace(seed, Entry{seed, -1});
    for (const RainbowPiece& pc : usable) {
        std::vector<std::pair<Key, Entry>> add;
        for (const auto& [key, ent] : states) {
            (void)ent;
            if (std::get<uint64_t>(key) & pc.mask) continue;
            if (std::optional<Key> nk = step(key, catalog[pc.idx], pc.mask))
                add.emplace_back(*nk, Entry{key, static_cast<int>(pc.idx)});
        }
        for (auto& [nk, ne] : add) states.emplace(nk, ne);
    }
    for (const auto& [key, ent] : states) {
        (void)ent;
        if (!accept(key)) continue;
        VertexSet cluster{{v}};
        Key cur = key;
        while (true) {
            const Entry& e = states.at(cur);
            if (e.piece < 0) break;
            cluster = cluster.unite(catalog[e.piece].set);
            cur = e.prev;
        }
        return cluster;
    }
    return std::nullopt;
}

}  // namespace

ClusterOutcome cluster_fpt_p(const MultiGraph& g, Measure mu, long long p, long long q, int v) {
    g.check_vertex(v);
    require_simple(g);
    ClusterOutcome out;
    out.mode_used = "vminimal-dp";
    if (p < 0 || q < 0) {
        out.status = SolveStatus::None;
        return out;
    }
    const auto finish = [&](const VertexSet& cluster) {
        const long long mv = measure_eval(g, mu, cluster);
        const long long cv = boundary(g, cluster).size;
        if (mv > p || cv > q)
            throw std::logic_error("cluster solver produced an invalid cluster");
        out.status = SolveStatus::Found;
        out.cluster = cluster;
        out.stats = ClusterStats{mv, cv};
    };

    const VertexSet just_v{{v}};
    if (measure_eval(g, mu, just_v) <= p && g.degree(v) <= q) {
        finish(just_v);
        return out;
    }

    if (mu != Measure::Size) {
        // big clusters always show up whole in the large catalog
        for (const VertexSet& c : enumerate_vminimal_large_nondeg(g, v, p)) {
            VertexSet cl = c;
            cl.add(v);
            if (boundary(g, cl).size <= q && measure_eval(g, mu, cl) <= p) {
                finish(cl);
                return out;
            }
        }
    }

    const long long piece_bound = mu == Measure::Size ? p - 1 : 3 * p;
    const long long ktarget = std::min<long long>(piece_bound, g.n() - 1);
    if (ktarget > 62) throw std::invalid_argument("cluster solver supports at most 62 colors");
    if (ktarget <= 0) {
        out.status = SolveStatus::None;
        return out;
    }
    const std::vector<VMinimalSet> catalog = enumerate_vminimal_small(g, v, piece_bound);
    if (catalog.empty()) {
        out.status = SolveStatus::None;
        return out;
    }
    const int k = static_cast<int>(ktarget);
    const long long dv = g.degree(v);
    for (const std::vector<int>& coloring : make_color_family(g.n(), k, ColoringConfig{})) {
        ++out.trials_used;
        const std::vector<RainbowPiece> usable = rainbow_pieces(catalog, coloring);
        std::optional<VertexSet> cluster;
        switch (mu) {
            case Measure::Size: {
                using Key = std::tuple<long long, uint64_t>;  // tracked cut, colors
                cluster = run_piece_dp<Key>(
                    catalog, usable, v, Key{dv, 0},
                    [](const Key& key, const VMinimalSet& s, uint64_t mask) -> std::optional<Key> {
                        return Key{std::get<0>(key) + s.d_away - s.d_to_v,
                                   std::get<uint64_t>(key) | mask};
                    },
                    [&](const Key& key) { return std::get<0>(key) <= q; });
                break;
            }
            case Measure::NonEdge: {
                using Key = std::tuple<long long, long long, uint64_t>;  // cut, nonedges, colors
                cluster = run_piece_dp<Key>(
                    catalog, usable, v, Key{dv, 0, 0},
                    [&](const Key& key, const VMinimalSet& s, uint64_t mask) -> std::optional<Key> {
                        const long long sz = static_cast<long long>(s.set.size());
                        const long long before =
                            __builtin_popcountll(std::get<uint64_t>(key));
                        const long long nu =
                            std::get<1>(key) + sz + s.nonedges - s.d_to_v + before * sz;
                        if (nu > p) return std::nullopt;
                        return Key{std::get<0>(key) + s.d_away - s.d_to_v, nu,
                                   std::get<uint64_t>(key) | mask};
                    },
                    [&](const Key& key) {
                        return std::get<0>(key) <= q && std::get<1>(key) <= p;
                    });
                break;
            }
            case Measure::NonDeg: {
                // cut, worst deficiency off v, deficiency at v, colors
                using Key = std::tuple<long long, long long, long long, uint64_t>;
                cluster = run_piece_dp<Key>(
                    catalog, usable, v, Key{dv, 0, 0, 0},
                    [&](const Key& key, const VMinimalSet& s, uint64_t mask) -> std::optional<Key> {
                        const long long sz = static_cast<long long>(s.set.size());
                        const long long before =
                            __builtin_popcountll(std::get<uint64_t>(key));
                        // Earlier pieces worsen by sz, but only if any exist.
                        long long worst = s.nondeg_in + before;
                        if (before > 0) worst = std::max(worst, std::get<1>(key) + sz);
                        const long long at_v = std::get<2>(key) + sz - s.d_to_v;
                        if (worst > p || at_v > p) return std::nullopt;
                        return Key{std::get<0>(key) + s.d_away - s.d_to_v, worst, at_v,
                                   std::get<uint64_t>(key) | mask};
                    },
                    [&](const Key& key) {
                        return std::get<0>(key) <= q && std::get<1>(key) <= p &&
                               std::get<2>(key) <= p;
                    });
                break;
            }
        }
        if (cluster) {
            finish(*cluster);
            return out;
        }
    }
    out.status = SolveStatus::None;
    return out;
}

PartitionOutcome partition_fpt_p(const MultiGraph& g, Measure mu, long long p, long long q) {
    PartitionOutcome out;
    out.mode_used = "vminimal-dp";
    std::vector<VertexSet> cover;
    for (int v = 0; v < g.n(); ++v) {
        ClusterOutcome one = cluster_fpt_p(g, mu, p, q, v);
        out.trials_used += one.trials_used;
        if (one.status != SolveStatus::Found) {
            out.status = SolveStatus::None;
            return out;
        }
        cover.push_back(std::move(one.cluster));
    }
    out.solution = partition_from_cover(g, mu, p, q, cover);
    out.status = SolveStatus::Found;
    return out;
}

}  // namespace localclust
