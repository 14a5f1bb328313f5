#include "localclust/solver_q.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "localclust/satellite.hpp"
#include "localclust/separators.hpp"

namespace localclust {

const char* solve_status_name(SolveStatus status) {
    switch (status) {
        case SolveStatus::Found: return "found";
        case SolveStatus::None: return "none";
        case SolveStatus::BudgetExhausted: return "budget-exhausted";
    }
    throw std::logic_error("unknown status");
}

ImportantFamily build_important_family(const MultiGraph& g, int v, long long q) {
    ImportantFamily fam;
    for (VertexSet& x : enumerate_important_sets(g, v, q)) {
        const long long cut = boundary(g, x).size;
        if (cut == 0) {
            fam.free_components.push_back(std::move(x));
        } else {
            fam.sets.push_back(std::move(x));
            fam.cuts.push_back(cut);
        }
    }
    std::vector<size_t> order(fam.sets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (fam.cuts[a] != fam.cuts[b]) return fam.cuts[a] < fam.cuts[b];
        return fam.sets[a] < fam.sets[b];
    });
    ImportantFamily sorted;
    sorted.free_components = std::move(fam.free_components);
    for (size_t i : order) {
        sorted.sets.push_back(std::move(fam.sets[i]));
        sorted.cuts.push_back(fam.cuts[i]);
    }
    return sorted;
}

namespace {

bool touches(const MultiGraph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) return true;
    for (int x : a)
        for (auto [y, mult] : g.neighbors(x)) {
            (void)mult;
            if (b.contains(y)) return true;
        }
    return false;
}

std::vector<std::vector<char>> build_clash(const MultiGraph& g, const std::vector<VertexSet>& sets) {
    std::vector<std::vector<char>> clash(sets.size(), std::vector<char>(sets.size(), 0));
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            clash[i][j] = clash[j][i] = touches(g, sets[i], sets[j]) ? 1 : 0;
    return clash;
}

// One shared walk state: candidate piece families are turned into satellite
// instances around v, solved, and remembered so no candidate is solved twice.
struct SearchContext {
    const MultiGraph& g;
    Measure mu;
    long long p;
    long long q;
    int v;
    const ImportantFamily& fam;
    std::vector<std::vector<char>> clash;
    std::set<VertexSet> tried;
    long long evals = 0;
    std::optional<SatelliteSolution> hit;

    // picked pieces become satellites together with the free components; the
    // satellite step decides which of them to cut away from the center.
    bool try_selection(const std::vector<size_t>& picked) {
        VertexSet z;
        for (size_t i : picked) z = z.unite(fam.sets[i]);
        for (const VertexSet& fc : fam.free_components) z = z.unite(fc);
        if (!tried.insert(z).second) return false;  // already known not to work
        ++evals;
        std::vector<VertexSet> blocks;
        blocks.push_back(VertexSet::full(g.n()).minus(z));
        for (size_t i : picked) blocks.push_back(fam.sets[i]);
        for (const VertexSet& fc : fam.free_components) blocks.push_back(fc);
        SatelliteInstance inst(g, std::move(blocks), v);
        if (auto sol = solve_satellite(inst, mu, p, q)) {
            hit = std::move(sol);
            return true;
        }
        return false;
    }
};

bool derand_simple(SearchContext& cx, long long budget, bool& aborted) {
    std::vector<size_t> picked;
    std::function<bool(size_t, long long)> walk = [&](size_t idx, long long used) -> bool {
        if (aborted) return false;
        if (idx == cx.fam.sets.size()) {
            if (cx.evals >= budget) {
                aborted = true;
                return false;
            }
            return cx.try_selection(picked);
        }
        if (walk(idx + 1, used)) return true;
        if (aborted) return false;
        if (used + cx.fam.cuts[idx] > cx.q) return false;
        for (size_t j : picked)
            if (cx.clash[j][idx]) return false;
        picked.push_back(idx);
        const bool found = walk(idx + 1, used + cx.fam.cuts[idx]);
        picked.pop_back();
        return found;
    };
    return walk(0, 0);
}

// Same candidate space as derand_simple, walked schedule-first: how many
// pieces of each boundary size, then which ones.
bool derand_grouped(SearchContext& cx, long long budget, bool& aborted) {
    std::map<long long, std::vector<size_t>> bygroup;
    for (size_t i = 0; i < cx.fam.sets.size(); ++i) bygroup[cx.fam.cuts[i]].push_back(i);
    const std::vector<std::pair<long long, std::vector<size_t>>> groups(bygroup.begin(),
                                                                        bygroup.end());
    std::vector<size_t> picked;
    std::function<bool(size_t, long long)> next_group;
    std::function<bool(size_t, size_t, size_t, long long)> take =
        [&](size_t gi, size_t at, size_t want, long long left) -> bool {
        if (aborted) return false;
        if (want == 0) return next_group(gi + 1, left);
        const auto& members = groups[gi].second;
        for (size_t pos = at; pos + want <= members.size(); ++pos) {
            const size_t idx = members[pos];
            bool ok = true;
            for (size_t j : picked)
                if (cx.clash[j][idx]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            picked.push_back(idx);
            if (take(gi, pos + 1, want - 1, left)) return true;
            picked.pop_back();
            if (aborted) return false;
        }
        return false;
    };
    next_group = [&](size_t gi, long long left) -> bool {
        if (aborted) return false;
        if (gi == groups.size()) {
            if (cx.evals >= budget) {
                aborted = true;
                return false;
            }
            return cx.try_selection(picked);
        }
        const long long cut = groups[gi].first;
        const size_t have = groups[gi].second.size();
        const size_t top = std::min<size_t>(have, static_cast<size_t>(left / cut));
        for (size_t a = 0; a <= top; ++a)
            if (take(gi, 0, a, left - static_cast<long long>(a) * cut)) return true;
        return false;
    };
    return next_group(0, cx.q);
}

ClusterOutcome found_outcome(const SearchContext& cx, const char* mode, long long trials) {
    ClusterOutcome out;
    out.status = SolveStatus::Found;
    out.cluster = cx.hit->cluster;
    out.stats = ClusterStats{cx.hit->mu_value, cx.hit->cut_value};
    out.trials_used = trials;
    out.mode_used = mode;
    return out;
}

ClusterOutcome run_randomized(SearchContext& cx, const SolveOptions& options) {
    ClusterOutcome out;
    out.mode_used = "randomized";
    if (cx.fam.sets.empty()) {
        // one candidate in total, so the answer is exact
        const bool found = cx.try_selection({});
        if (found) return found_outcome(cx, "randomized", 1);
        out.status = SolveStatus::None;
        out.trials_used = 1;
        return out;
    }
    long long trials = options.max_trials;
    const double est = std::ceil(std::pow(4.0, static_cast<double>(cx.q)) * std::exp(4.0 / 3.0) *
                                 std::log(1.0 / options.delta));
    if (std::isfinite(est) && est < static_cast<double>(trials))
        trials = std::max<long long>(1, static_cast<long long>(est));
    std::mt19937_64 seeder(options.seed);
    for (long long trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seeder());
        std::vector<size_t> picked;
        for (size_t i = 0; i < cx.fam.sets.size(); ++i) {
            const long long d = cx.fam.cuts[i];
            // keep with probability exactly 4^-d
            const uint64_t threshold = d >= 33 ? 0 : (1ull << (64 - 2 * static_cast<int>(d)));
            if (rng() < threshold) picked.push_back(i);
        }
        out.trials_used = trial + 1;
        bool clashed = false;
        for (size_t a = 0; a < picked.size() && !clashed; ++a)
            for (size_t b = a + 1; b < picked.size() && !clashed; ++b)
                if (cx.clash[picked[a]][picked[b]]) clashed = true;
        if (clashed) continue;
        if (cx.try_selection(picked)) return found_outcome(cx, "randomized", trial + 1);
    }
    out.status = SolveStatus::BudgetExhausted;
    return out;
}

}  // namespace

ClusterOutcome cluster_fpt_q(const MultiGraph& g, Measure mu, long long p, long long q, int v,
                             const SolveOptions& options) {
    g.check_vertex(v);
    ClusterOutcome out;
    if (p < 0 || q < 0) {
        out.status = SolveStatus::None;
        out.mode_used = "trivial";
        return out;
    }
    const ImportantFamily fam = build_important_family(g, v, q);
    SearchContext cx{g,  mu, p, q, v, fam, build_clash(g, fam.sets),
                     {}, 0, std::nullopt};
    using Mode = SolveOptions::Mode;
    if (options.mode == Mode::Randomized) return run_randomized(cx, options);
    bool aborted = false;
    bool found = false;
    const char* mode_name = "";
    if (options.mode == Mode::DerandGrouped) {
        mode_name = "derand-grouped";
        found = derand_grouped(cx, options.selection_budget, aborted);
    } else {
        mode_name = "derand-simple";
        found = derand_simple(cx, options.selection_budget, aborted);
    }
    if (found) return found_outcome(cx, mode_name, cx.evals);
    if (aborted) {
        if (options.mode == Mode::Auto) return run_randomized(cx, options);
        out.status = SolveStatus::BudgetExhausted;
        out.trials_used = cx.evals;
        out.mode_used = mode_name;
        return out;
    }
    out.status = SolveStatus::None;
    out.trials_used = cx.evals;
    out.mode_used = mode_name;
    return out;
}

PartitionOutcome partition_fpt_q(const MultiGraph& g, Measure mu, long long p, long long q,
                                 const SolveOptions& options) {
    PartitionOutcome out;
    std::vector<VertexSet> cover;
    bool exhausted = false;
    for (int v = 0; v < g.n(); ++v) {
        ClusterOutcome one = cluster_fpt_q(g, mu, p, q, v, options);
        out.trials_used += one.trials_used;
        out.mode_used = one.mode_used;
        if (one.status == SolveStatus::None) {
            out.status = SolveStatus::None;
            return out;
        }
        if (one.status == SolveStatus::BudgetExhausted) {
            exhausted = true;
            continue;
        }
        cover.push_back(std::move(one.cluster));
    }
    if (exhausted) {
        out.status = SolveStatus::BudgetExhausted;
        return out;
    }
    out.solution = partition_from_cover(g, mu, p, q, cover);
    out.status = SolveStatus::Found;
    return out;
}

}  // namespace localclust
