#include "localclust/measures.hpp"

#include <stdexcept>

namespace localclust {

std::string measure_name(Measure mu) {
    switch (mu) {
        case Measure::Size: return "size";
        case Measure::NonEdge: return "nonedge";
        case Measure::NonDeg: return "nondeg";
    }
    throw std::logic_error("bad measure");
}

Measure measure_from_name(const std::string& name) {
    if (name == "size") return Measure::Size;
    if (name == "nonedge") return Measure::NonEdge;
    if (name == "nondeg") return Measure::NonDeg;
    throw std::invalid_argument("unknown measure: " + name);
}

long long measure_eval(const MultiGraph& g, Measure mu, const VertexSet& x) {
    for (int v : x) g.check_vertex(v);
    if (mu == Measure::Size) return x.size();
    if (!g.simple())
        throw std::invalid_argument(measure_name(mu) + " requires a simple graph");
    const auto& xs = x.items();
    if (mu == Measure::NonEdge) {
        long long nonedges = 0;
        for (size_t i = 0; i < xs.size(); ++i)
            for (size_t j = i + 1; j < xs.size(); ++j)
                if (g.multiplicity(xs[i], xs[j]) == 0) ++nonedges;
        return nonedges;
    }
    // NonDeg
    long long worst = 0;
    for (int u : xs) {
        long long inside = 0;
        for (auto [w, mult] : g.neighbors(u)) {
            (void)mult;
            if (x.contains(w)) ++inside;
        }
        worst = std::max(worst, static_cast<long long>(x.size()) - 1 - inside);
    }
    return worst;
}

}  // namespace localclust
