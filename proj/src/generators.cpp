#include "localclust/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace localclust {

PlantedInstance gen_planted(Measure mu, int n, int blocks, long long intra_budget,
                            long long inter_budget, std::mt19937_64& rng) {
    if (n < 0 || intra_budget < 0 || inter_budget < 0)
        throw std::invalid_argument("planted parameters must be nonnegative");
    if (blocks < (n > 0 ? 1 : 0) || blocks > n)
        throw std::invalid_argument("block count must be between 1 and the vertex count");

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> members(blocks);
    for (int b = 0, at = 0; b < blocks; ++b) {
        const int take = n / blocks + (b < n % blocks ? 1 : 0);
        members[b].assign(perm.begin() + at, perm.begin() + at + take);
        at += take;
    }

    std::vector<std::pair<int, int>> edge_list;
    std::set<std::pair<int, int>> present;
    const auto put = [&](int u, int w) {
        edge_list.emplace_back(u, w);
        present.insert(std::minmax(u, w));
    };
    for (const auto& verts : members) {
        std::vector<std::pair<int, int>> pairs;
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                pairs.emplace_back(verts[i], verts[j]);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        const long long cap = std::min<long long>(intra_budget, pairs.size());
        const long long knocked =
            std::uniform_int_distribution<long long>(0, cap)(rng);
        for (size_t i = knocked; i < pairs.size(); ++i) put(pairs[i].first, pairs[i].second);
    }
    if (blocks >= 2 && inter_budget > 0) {
        std::vector<long long> room(blocks, inter_budget);
        std::uniform_int_distribution<int> pick_block(0, blocks - 1);
        for (int attempt = 0; attempt < 2 * n + 10; ++attempt) {
            const int b1 = pick_block(rng);
            const int b2 = pick_block(rng);
            if (b1 == b2 || room[b1] < 1 || room[b2] < 1) continue;
            const int u = members[b1][std::uniform_int_distribution<size_t>(
                0, members[b1].size() - 1)(rng)];
            const int w = members[b2][std::uniform_int_distribution<size_t>(
                0, members[b2].size() - 1)(rng)];
            if (present.count(std::minmax(u, w))) continue;
            put(u, w);
            --room[b1];
            --room[b2];
        }
    }

    PlantedInstance out{MultiGraph(n, edge_list), {}, 0, inter_budget};
    long long biggest = 0;
    for (const auto& verts : members) {
        out.witness.clusters.emplace_back(verts);
        biggest = std::max<long long>(biggest, verts.size());
    }
    std::sort(out.witness.clusters.begin(), out.witness.clusters.end());
    out.p = mu == Measure::Size ? biggest : intra_budget;
    const VerifyReport report =
        verify_partition(out.graph, mu, out.p, out.q, out.witness.clusters);
    if (!report.ok) throw std::logic_error("planted witness failed verification");
    out.witness.stats = report.stats;
    return out;
}

GadgetInstance gen_hardness_gadget(const MultiGraph& base, int k) {
    if (!base.simple()) throw std::invalid_argument("gadget base must be simple");
    if (base.n() == 0) throw std::invalid_argument("gadget base must be nonempty");
    if (k < 0 || k > base.n())
        throw std::invalid_argument("clique target must be between 0 and the base order");
    const long long d = base.degree(0);
    for (int u = 1; u < base.n(); ++u)
        if (base.degree(u) != d) throw std::invalid_argument("gadget base must be regular");

    const int n = base.n();
    const long long m = base.m();
    if (m + 1 > std::numeric_limits<int>::max())
        throw std::invalid_argument("base graph too large for apex multiplicities");
    std::vector<Edge> classes = base.edges();
    for (int u = 0; u < n; ++u) classes.push_back(Edge{u, n, static_cast<int>(m) + 1});

    GadgetInstance out{MultiGraph::from_classes(n + 1, classes), n, k, d, 0};
    out.q = (n - k) * (m + 1) + k * (d - k + 1);
    return out;
}

MultiGraph random_simple(int n, double edge_prob, std::mt19937_64& rng) {
    std::bernoulli_distribution flip(edge_prob);
    std::vector<std::pair<int, int>> edge_list;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (flip(rng)) edge_list.emplace_back(u, w);
    return MultiGraph(n, edge_list);
}

MultiGraph random_multigraph(int n, double edge_prob, int max_mult, std::mt19937_64& rng) {
    if (max_mult < 1) throw std::invalid_argument("multiplicity cap must be positive");
    std::bernoulli_distribution flip(edge_prob);
    std::uniform_int_distribution<int> mult(1, max_mult);
    std::vector<Edge> classes;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (flip(rng)) classes.push_back(Edge{u, w, mult(rng)});
    return MultiGraph::from_classes(n, classes);
}

MultiGraph random_connected_simple(int n, double extra_prob, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::set<std::pair<int, int>> present;
    for (int i = 1; i < n; ++i) {
        const int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
        present.insert(std::minmax(perm[i], perm[j]));
    }
    std::bernoulli_distribution flip(extra_prob);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (flip(rng)) present.insert({u, w});
    return MultiGraph(n, {present.begin(), present.end()});
}

MultiGraph random_regular(int n, int degree, std::mt19937_64& rng) {
    if (degree < 0 || degree >= std::max(n, 1))
        throw std::invalid_argument("degree must be between 0 and n-1");
    if (static_cast<long long>(n) * degree % 2 != 0)
        throw std::invalid_argument("n times degree must be even");
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::vector<int> stubs;
        for (int u = 0; u < n; ++u) stubs.insert(stubs.end(), degree, u);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<int, int>> present;
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const int u = stubs[i];
            const int w = stubs[i + 1];
            if (u == w || !present.insert(std::minmax(u, w)).second) {
                ok = false;
                break;
            }
        }
        if (ok) return MultiGraph(n, {present.begin(), present.end()});
    }
    throw std::runtime_error("no simple regular pairing found");
}

std::vector<MultiGraph> all_labeled_connected_graphs(int n) {
    if (n < 0 || n > 6)
        throw std::invalid_argument("exhaustive catalog only supports up to 6 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) pairs.emplace_back(u, w);
    std::vector<MultiGraph> out;
    for (uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edge_list;
        for (size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edge_list.push_back(pairs[i]);
        MultiGraph g(n, edge_list);
        if (n <= 1 || is_connected_subset(g, VertexSet::full(n))) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace localclust
