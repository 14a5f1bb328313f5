#include "localclust/uncross.hpp"

#include <sstream>
#include <stdexcept>

namespace localclust {

namespace {

long long cut_size(const MultiGraph& g, const VertexSet& x) {
    return boundary(g, x).size;
}

}  // namespace

PartitionSolution partition_from_cover(const MultiGraph& g, Measure mu, long long p,
                                       long long q, const std::vector<VertexSet>& cover) {
    VertexSet covered;
    for (size_t i = 0; i < cover.size(); ++i) {
        const auto& c = cover[i];
        if (c.empty()) throw std::invalid_argument("cover contains an empty cluster");
        if (measure_eval(g, mu, c) > p)
            throw std::invalid_argument("cover cluster " + std::to_string(i) +
                                        " violates the measure bound");
        if (cut_size(g, c) > q)
            throw std::invalid_argument("cover cluster " + std::to_string(i) +
                                        " violates the boundary bound");
        covered = covered.unite(c);
    }
    if (covered != VertexSet::full(g.n()))
        throw std::invalid_argument("cover does not cover every vertex");

    std::vector<VertexSet> cs = cover;
    // Each pass either removes a cluster or empties one pairwise intersection,
    // and shrinking never creates new intersections, so this terminates within
    // |cover| + (intersecting pairs) steps.
    long long n0 = static_cast<long long>(cs.size());
    long long step_limit = n0 + n0 * (n0 - 1) / 2 + 1;
    long long steps = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        // Discard clusters contained in another one.
        for (size_t i = 0; i < cs.size() && !changed; ++i) {
            for (size_t j = 0; j < cs.size(); ++j) {
                if (i == j) continue;
                if (cs[i].is_subset_of(cs[j])) {
                    cs.erase(cs.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
            }
        }
        if (changed) {
            ++steps;
            continue;
        }
        for (size_t i = 0; i < cs.size() && !changed; ++i) {
            for (size_t j = i + 1; j < cs.size() && !changed; ++j) {
                if (!cs[i].intersects(cs[j])) continue;
                VertexSet jmi = cs[j].minus(cs[i]);
                VertexSet imj = cs[i].minus(cs[j]);
                // Posimodularity: one difference has boundary no larger than
                // its cluster. Prefer shrinking the larger index.
                if (cut_size(g, jmi) <= cut_size(g, cs[j])) {
                    cs[j] = jmi;
                } else if (cut_size(g, imj) <= cut_size(g, cs[i])) {
                    cs[i] = imj;
                } else {
                    throw std::logic_error("posimodularity violated");
                }
                changed = true;
            }
        }
        if (changed) ++steps;
        if (steps > step_limit) throw std::logic_error("uncrossing failed to make progress");
    }

    PartitionSolution sol;
    sol.clusters = std::move(cs);
    std::sort(sol.clusters.begin(), sol.clusters.end());
    for (const auto& c : sol.clusters)
        sol.stats.push_back({measure_eval(g, mu, c), cut_size(g, c)});

    auto report = verify_partition(g, mu, p, q, sol.clusters);
    if (!report.ok) throw std::logic_error("uncrossing produced an invalid partition: " + report.violation);
    return sol;
}

VerifyReport verify_partition(const MultiGraph& g, Measure mu, long long p, long long q,
                              const std::vector<VertexSet>& clusters) {
    VerifyReport rep;
    std::vector<int> owner(g.n(), -1);
    for (size_t i = 0; i < clusters.size(); ++i) {
        const auto& c = clusters[i];
        if (c.empty()) {
            rep.ok = false;
            rep.violation = "cluster " + std::to_string(i) + " is empty";
            return rep;
        }
        for (int v : c) {
            g.check_vertex(v);
            if (owner[v] != -1) {
                rep.ok = false;
                rep.violation = "vertex " + std::to_string(v) + " appears in clusters " +
                                std::to_string(owner[v]) + " and " + std::to_string(i);
                return rep;
            }
            owner[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        if (owner[v] == -1) {
            rep.ok = false;
            rep.violation = "vertex " + std::to_string(v) + " is not covered";
            return rep;
        }
    }
    for (size_t i = 0; i < clusters.size(); ++i) {
        ClusterStats st{measure_eval(g, mu, clusters[i]), cut_size(g, clusters[i])};
        rep.stats.push_back(st);
        if (rep.ok && st.mu_value > p) {
            rep.ok = false;
            std::ostringstream os;
            os << "cluster " << i << " has " << measure_name(mu) << " " << st.mu_value
               << " > " << p;
            rep.violation = os.str();
        }
        if (rep.ok && st.cut_value > q) {
            rep.ok = false;
            std::ostringstream os;
            os << "cluster " << i << " has boundary " << st.cut_value << " > " << q;
            rep.violation = os.str();
        }
    }
    return rep;
}

}  // namespace localclust
