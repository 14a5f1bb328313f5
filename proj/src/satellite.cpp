#include "localclust/satellite.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "localclust/coloring.hpp"

namespace localclust {

SatelliteInstance::SatelliteInstance(MultiGraph g, std::vector<VertexSet> blocks, int v)
    : g_(std::move(g)), blocks_(std::move(blocks)), v_(v) {
    if (blocks_.empty())
        throw std::invalid_argument("satellite instance needs a center block");
    owner_.assign(static_cast<size_t>(g_.n()), -1);
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].empty())
            throw std::invalid_argument("satellite blocks must be nonempty");
        for (int u : blocks_[i]) {
            g_.check_vertex(u);
            if (owner_[static_cast<size_t>(u)] != -1)
                throw std::invalid_argument("satellite blocks overlap");
            owner_[static_cast<size_t>(u)] = static_cast<int>(i);
        }
    }
    for (int u = 0; u < g_.n(); ++u)
        if (owner_[static_cast<size_t>(u)] == -1)
            throw std::invalid_argument("satellite blocks must cover every vertex");
    if (!blocks_[0].contains(v_))
        throw std::invalid_argument("center vertex must lie in the center block");
    for (const Edge& e : g_.edges()) {
        int a = owner_[static_cast<size_t>(e.u)];
        int b = owner_[static_cast<size_t>(e.v)];
        if (a != b && a != 0 && b != 0)
            throw std::invalid_argument("satellites must not touch each other");
    }
    cut_.reserve(blocks_.size());
    for (const VertexSet& b : blocks_) cut_.push_back(boundary(g_, b).size);
}

int SatelliteInstance::block_of(int vertex) const {
    g_.check_vertex(vertex);
    return owner_[static_cast<size_t>(vertex)];
}

namespace {

// Assemble and re-check a solution; the solvers may only return through here.
SatelliteSolution finish(const SatelliteInstance& inst, Measure mu, long long p, long long q,
                         std::vector<int> chosen) {
    std::sort(chosen.begin(), chosen.end());
    VertexSet cluster = inst.center();
    for (int i : chosen) cluster = cluster.unite(inst.block(i));
    SatelliteSolution sol;
    sol.chosen = std::move(chosen);
    sol.mu_value = measure_eval(inst.graph(), mu, cluster);
    sol.cut_value = boundary(inst.graph(), cluster).size;
    sol.cluster = std::move(cluster);
    if (sol.mu_value > p || sol.cut_value > q)
        throw std::logic_error("satellite solver produced an invalid cluster");
    return sol;
}

using NeKey = std::pair<long long, long long>;  // (cluster size, non-edges)

struct NeEntry {
    long long absorbed = -1;
    NeKey prev{0, 0};
    bool took = false;
};

// Scan satellites in index order. A state records the sizes reachable so far;
// adding block i to a size-j cluster creates ne(i) + j*|block i| - d(block i)
// new non-edges, since its only outside edges go to the center. Two histories
// at the same (size, non-edges) differ only in absorbed boundary, so the best
// one dominates.
std::vector<std::map<NeKey, NeEntry>> nonedge_layers(const SatelliteInstance& inst, long long p) {
    const MultiGraph& g = inst.graph();
    const int r = inst.satellite_count();
    std::vector<std::map<NeKey, NeEntry>> layers(static_cast<size_t>(r) + 1);
    const long long ne0 = measure_eval(g, Measure::NonEdge, inst.center());
    if (ne0 > p) return layers;  // every candidate cluster contains the center
    layers[0][{inst.center().size(), ne0}] = NeEntry{0, {0, 0}, false};
    for (int i = 1; i <= r; ++i) {
        const long long sz = inst.block(i).size();
        const long long ne = measure_eval(g, Measure::NonEdge, inst.block(i));
        const long long cut = inst.block_cut(i);
        auto& next = layers[static_cast<size_t>(i)];
        for (const auto& [key, entry] : layers[static_cast<size_t>(i) - 1]) {
            auto relax = [&](NeKey to, long long absorbed, bool took) {
                auto it = next.find(to);
                if (it == next.end() || absorbed > it->second.absorbed)
                    next[to] = NeEntry{absorbed, key, took};
            };
            relax(key, entry.absorbed, false);
            NeKey to{key.first + sz, key.second + ne + key.first * sz - cut};
            if (to.second <= p) relax(to, entry.absorbed + cut, true);
        }
    }
    return layers;
}

// Can every slot take a color of its mask, restricted to rstar, all distinct?
bool colors_matchable(const std::vector<uint64_t>& slot_mask, uint64_t rstar) {
    std::vector<int> used_by(64, -1);
    std::vector<char> visited(64, 0);
    std::function<bool(size_t)> place = [&](size_t j) -> bool {
        for (uint64_t left = slot_mask[j] & rstar; left != 0; left &= left - 1) {
            int c = __builtin_ctzll(left);
            if (visited[c]) continue;
            visited[c] = 1;
            if (used_by[c] == -1 || place(static_cast<size_t>(used_by[c]))) {
                used_by[c] = static_cast<int>(j);
                return true;
            }
        }
        return false;
    };
    for (size_t j = 0; j < slot_mask.size(); ++j) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!place(j)) return false;
    }
    return true;
}

}  // namespace

std::optional<SatelliteSolution> solve_satellite_size(const SatelliteInstance& inst,
                                                      long long p, long long q) {
    const long long base = inst.center().size();
    if (base > p) return std::nullopt;
    const int r = inst.satellite_count();
    long long weight_all = 0;
    for (int i = 1; i <= r; ++i) weight_all += inst.block(i).size();
    const size_t room = static_cast<size_t>(std::min(p - base, weight_all));
    // Knapsack: weight is block size, value is boundary absorbed into the cluster.
    std::vector<std::vector<long long>> dp(static_cast<size_t>(r) + 1,
                                           std::vector<long long>(room + 1, 0));
    for (size_t i = 1; i <= static_cast<size_t>(r); ++i) {
        const size_t w = static_cast<size_t>(inst.block(static_cast<int>(i)).size());
        const long long val = inst.block_cut(static_cast<int>(i));
        for (size_t cap = 0; cap <= room; ++cap) {
            dp[i][cap] = dp[i - 1][cap];
            if (w <= cap && dp[i - 1][cap - w] + val > dp[i][cap])
                dp[i][cap] = dp[i - 1][cap - w] + val;
        }
    }
    if (inst.block_cut(0) - dp[static_cast<size_t>(r)][room] > q) return std::nullopt;
    std::vector<int> chosen;
    size_t cap = room;
    for (size_t i = static_cast<size_t>(r); i >= 1; --i) {
        if (dp[i][cap] != dp[i - 1][cap]) {
            chosen.push_back(static_cast<int>(i));
            cap -= static_cast<size_t>(inst.block(static_cast<int>(i)).size());
        }
    }
    return finish(inst, Measure::Size, p, q, std::move(chosen));
}

std::optional<SatelliteSolution> solve_satellite_nonedge(const SatelliteInstance& inst,
                                                         long long p, long long q) {
    auto layers = nonedge_layers(inst, p);
    const size_t r = static_cast<size_t>(inst.satellite_count());
    const long long need = inst.block_cut(0) - q;
    const NeKey* best = nullptr;
    long long best_absorbed = -1;
    for (const auto& [key, entry] : layers[r]) {
        if (entry.absorbed >= need && entry.absorbed > best_absorbed) {
            best = &key;
            best_absorbed = entry.absorbed;
        }
    }
    if (best == nullptr) return std::nullopt;
    std::vector<int> chosen;
    NeKey at = *best;
    for (size_t i = r; i >= 1; --i) {
        const NeEntry& e = layers[i].at(at);
        if (e.took) chosen.push_back(static_cast<int>(i));
        at = e.prev;
    }
    return finish(inst, Measure::NonEdge, p, q, std::move(chosen));
}

std::vector<NonEdgeState> enumerate_nonedge_states(const SatelliteInstance& inst, long long p) {
    auto layers = nonedge_layers(inst, p);
    std::vector<NonEdgeState> out;
    for (const auto& [key, entry] : layers.back())
        out.push_back(NonEdgeState{key.first, key.second, entry.absorbed});
    return out;
}

std::optional<SatelliteSolution> solve_satellite_nondeg(const SatelliteInstance& inst,
                                                        long long p, long long q) {
    const MultiGraph& g = inst.graph();
    if (measure_eval(g, Measure::NonDeg, inst.center()) > p) return std::nullopt;
    const int r = inst.satellite_count();
    const std::vector<int>& center = inst.center().items();
    std::vector<int> cidx(static_cast<size_t>(g.n()), -1);
    for (size_t wi = 0; wi < center.size(); ++wi) cidx[static_cast<size_t>(center[wi])] = static_cast<int>(wi);

    for (long long c = inst.center().size(); c <= g.n(); ++c) {
        const long long want = c - p - 1;  // degree floor inside a size-c cluster

        // A satellite with a vertex below the floor can never sit inside such
        // a cluster; shedding it spends cut budget up front.
        std::vector<int> active;
        long long budget = q;
        for (int i = 1; i <= r; ++i) {
            bool ok = true;
            for (int x : inst.block(i))
                if (g.degree(x) < want) { ok = false; break; }
            if (ok) active.push_back(i);
            else budget -= inst.block_cut(i);
        }
        if (budget < 0) continue;
        long long full = inst.center().size();
        for (int i : active) full += inst.block(i).size();
        if (full < c) continue;

        // Slots per center vertex: active-satellite edges it can afford to
        // lose while keeping its degree at the floor.
        bool feasible = true;
        std::vector<long long> caps(center.size(), 0);
        long long loss_room = 0;
        for (size_t wi = 0; wi < center.size(); ++wi) {
            const int w = center[wi];
            long long to_active = 0, to_deleted = 0;
            for (auto [nbr, mult] : g.neighbors(w)) {
                const int b = inst.block_of(nbr);
                if (b == 0) continue;
                if (std::binary_search(active.begin(), active.end(), b)) to_active += mult;
                else to_deleted += mult;
            }
            const long long cap = p + (g.degree(w) - to_deleted) - c + 1;
            if (cap < 0) { feasible = false; break; }
            caps[wi] = std::min(cap, to_active);
            loss_room += caps[wi];
        }
        if (!feasible) continue;

        // Excluded boundary edges all end up pairwise distinctly colored, so
        // the palette size simultaneously caps the extra cut and, through the
        // per-vertex bins, the degree damage at each center vertex.
        if (std::min(budget, loss_room) > 62)
            throw std::invalid_argument("non-degree satellite solver needs min(q, boundary) <= 62");
        const int colors = static_cast<int>(std::min(budget, loss_room));
        long long nbin_total = 0;
        std::vector<long long> nbins(center.size(), 0);
        for (size_t wi = 0; wi < center.size(); ++wi) {
            nbins[wi] = std::min<long long>(caps[wi], colors);
            nbin_total += nbins[wi];
        }

        // Boundary edge slots of each active satellite, as center indices.
        std::vector<std::vector<int>> slot_at(active.size());
        for (size_t t = 0; t < active.size(); ++t) {
            for (int x : inst.block(active[t])) {
                for (auto [nbr, mult] : g.neighbors(x)) {
                    if (inst.block_of(nbr) != 0) continue;
                    for (int copy = 0; copy < mult; ++copy)
                        slot_at[t].push_back(cidx[static_cast<size_t>(nbr)]);
                }
            }
        }

        const auto family = make_color_family(static_cast<int>(nbin_total), colors, ColoringConfig{});
        std::set<std::vector<uint64_t>> seen;
        for (const auto& coloring : family) {
            std::vector<uint64_t> avail(center.size(), 0);
            size_t bin = 0;
            for (size_t wi = 0; wi < center.size(); ++wi)
                for (long long b = 0; b < nbins[wi]; ++b)
                    avail[wi] |= 1ull << coloring[bin++];
            if (!seen.insert(avail).second) continue;

            // Color sets a satellite can burn to shed all its boundary edges.
            std::vector<std::vector<uint64_t>> rsets(active.size());
            for (size_t t = 0; t < active.size(); ++t) {
                const auto& slots = slot_at[t];
                if (static_cast<long long>(slots.size()) > colors) continue;
                if (slots.empty()) { rsets[t].push_back(0); continue; }
                std::vector<uint64_t> masks(slots.size());
                for (size_t j = 0; j < slots.size(); ++j)
                    masks[j] = avail[static_cast<size_t>(slots[j])];
                uint64_t m = (1ull << slots.size()) - 1;
                const uint64_t limit = 1ull << colors;
                while (m < limit) {
                    if (colors_matchable(masks, m)) rsets[t].push_back(m);
                    const uint64_t low = m & (~m + 1ull);
                    const uint64_t hi = m + low;
                    m = hi | (((m ^ hi) >> 2) / low);
                }
            }

            using DpKey = std::pair<long long, uint64_t>;  // (cluster size, unused colors)
            struct DpEntry {
                DpKey prev{0, 0};
                bool excluded = false;
            };
            const uint64_t palette = colors == 0 ? 0 : ((1ull << colors) - 1);
            std::vector<std::map<DpKey, DpEntry>> layers(active.size() + 1);
            layers[0][{full, palette}] = DpEntry{};
            for (size_t t = 0; t < active.size(); ++t) {
                const long long sz = inst.block(active[t]).size();
                auto& next = layers[t + 1];
                for (const auto& [key, entry] : layers[t]) {
                    (void)entry;
                    if (!next.count(key)) next[key] = DpEntry{key, false};
                    if (key.first - sz < c) continue;
                    for (uint64_t m : rsets[t]) {
                        if ((m & key.second) != m) continue;
                        const DpKey to{key.first - sz, key.second ^ m};
                        if (!next.count(to)) next[to] = DpEntry{key, true};
                    }
                }
            }
            for (const auto& [key, entry] : layers.back()) {
                (void)entry;
                if (key.first != c) continue;
                std::set<int> excluded;
                DpKey cur = key;
                for (size_t t = active.size(); t >= 1; --t) {
                    const DpEntry& e = layers[t].at(cur);
                    if (e.excluded) excluded.insert(active[t - 1]);
                    cur = e.prev;
                }
                std::vector<int> chosen;
                for (int i : active)
                    if (!excluded.count(i)) chosen.push_back(i);
                return finish(inst, Measure::NonDeg, p, q, std::move(chosen));
            }
        }
    }
    return std::nullopt;
}

std::optional<SatelliteSolution> solve_satellite(const SatelliteInstance& inst, Measure mu,
                                                 long long p, long long q) {
    switch (mu) {
        case Measure::Size: return solve_satellite_size(inst, p, q);
        case Measure::NonEdge: return solve_satellite_nonedge(inst, p, q);
        case Measure::NonDeg: return solve_satellite_nondeg(inst, p, q);
    }
    throw std::logic_error("unknown measure");
}

}  // namespace localclust
