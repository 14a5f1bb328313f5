#include "localclust/mincut.hpp"

#include <queue>
#include <stdexcept>

namespace localclust {

namespace {

// cap[u][v] is the residual capacity of arc u->v.
std::vector<char> residual_reachable(const std::vector<std::vector<long long>>& cap, int from) {
    int n = static_cast<int>(cap.size());
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(from);
    seen[from] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v) {
            if (!seen[v] && cap[u][v] > 0) {
                seen[v] = 1;
                q.push(v);
            }
        }
    }
    return seen;
}

}  // namespace

MinCutResult min_cut(const MultiGraph& g, int s, int t) {
    g.check_vertex(s);
    g.check_vertex(t);
    if (s == t) throw std::invalid_argument("min_cut endpoints must differ");

    int n = g.n();
    std::vector<std::vector<long long>> cap(n, std::vector<long long>(n, 0));
    for (const auto& e : g.edges()) {
        cap[e.u][e.v] += e.mult;
        cap[e.v][e.u] += e.mult;
    }

    long long flow = 0;
    while (true) {
        // BFS augmenting path.
        std::vector<int> prev(n, -1);
        std::queue<int> q;
        q.push(s);
        prev[s] = s;
        while (!q.empty() && prev[t] == -1) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v) {
                if (prev[v] == -1 && cap[u][v] > 0) {
                    prev[v] = u;
                    q.push(v);
                }
            }
        }
        if (prev[t] == -1) break;
        long long push = -1;
        for (int v = t; v != s; v = prev[v]) {
            long long c = cap[prev[v]][v];
            push = push < 0 ? c : std::min(push, c);
        }
        for (int v = t; v != s; v = prev[v]) {
            cap[prev[v]][v] -= push;
            cap[v][prev[v]] += push;
        }
        flow += push;
    }

    MinCutResult res;
    res.value = flow;

    std::vector<char> from_s = residual_reachable(cap, s);
    std::vector<int> mins;
    for (int v = 0; v < n; ++v)
        if (from_s[v]) mins.push_back(v);
    res.min_source_side = VertexSet(std::move(mins));

    // Transposed residual from t: vertices that still reach t.
    std::vector<std::vector<long long>> capT(n, std::vector<long long>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) capT[v][u] = cap[u][v];
    std::vector<char> to_t = residual_reachable(capT, t);
    std::vector<int> maxs;
    for (int v = 0; v < n; ++v)
        if (!to_t[v]) maxs.push_back(v);
    res.max_source_side = VertexSet(std::move(maxs));
    return res;
}

}  // namespace localclust
