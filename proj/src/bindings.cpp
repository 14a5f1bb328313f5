#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "localclust/generators.hpp"
#include "localclust/io.hpp"
#include "localclust/oracles.hpp"
#include "localclust/separators.hpp"
#include "localclust/solver_p.hpp"
#include "localclust/solver_q.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace localclust;

namespace {

std::vector<std::vector<int>> to_lists(const std::vector<VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (const VertexSet& s : sets) out.push_back(s.items());
    return out;
}

std::vector<VertexSet> to_sets(const std::vector<std::vector<int>>& lists) {
    std::vector<VertexSet> out;
    out.reserve(lists.size());
    for (const auto& one : lists) out.emplace_back(one);
    return out;
}

SolveOptions options_from(const std::string& mode, uint64_t seed, long long trials) {
    SolveOptions opt;
    if (mode == "rand")
        opt.mode = SolveOptions::Mode::Randomized;
    else if (mode == "derand")
        opt.mode = SolveOptions::Mode::DerandSimple;
    else if (mode == "derand-grouped")
        opt.mode = SolveOptions::Mode::DerandGrouped;
    else if (mode != "auto")
        throw std::invalid_argument("mode must be auto, rand, derand or derand-grouped");
    opt.seed = seed;
    opt.max_trials = trials;
    return opt;
}

py::dict cluster_dict(const ClusterOutcome& o) {
    py::dict d;
    d["status"] = solve_status_name(o.status);
    if (o.status == SolveStatus::Found) {
        d["cluster"] = o.cluster.items();
        d["mu_value"] = o.stats.mu_value;
        d["cut_value"] = o.stats.cut_value;
    }
    d["trials_used"] = o.trials_used;
    d["mode"] = o.mode_used;
    return d;
}

py::dict partition_dict(const PartitionOutcome& o) {
    py::dict d;
    d["status"] = solve_status_name(o.status);
    if (o.status == SolveStatus::Found) {
        d["clusters"] = to_lists(o.solution.clusters);
        py::list stats;
        for (const ClusterStats& s : o.solution.stats) {
            py::dict one;
            one["mu_value"] = s.mu_value;
            one["cut_value"] = s.cut_value;
            stats.append(one);
        }
        d["stats"] = stats;
    }
    d["trials_used"] = o.trials_used;
    d["mode"] = o.mode_used;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "graph clustering under local edge and measure bounds";

    py::class_<MultiGraph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return MultiGraph(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &MultiGraph::n)
        .def_property_readonly("m", &MultiGraph::m)
        .def_property_readonly("simple", &MultiGraph::simple)
        .def("degree", &MultiGraph::degree, py::arg("v"))
        .def("multiplicity", &MultiGraph::multiplicity, py::arg("u"), py::arg("v"))
        .def("edges",
             [](const MultiGraph& g) {
                 std::vector<std::tuple<int, int, int>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.mult);
                 return out;
             })
        .def("__repr__", [](const MultiGraph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
        });

    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("serialize_graph", &serialize_graph, py::arg("graph"));

    m.def(
        "measure",
        [](const MultiGraph& g, const std::string& mu, const std::vector<int>& verts) {
            return measure_eval(g, measure_from_name(mu), VertexSet(verts));
        },
        py::arg("graph"), py::arg("mu"), py::arg("vertices"));
    m.def(
        "boundary_size",
        [](const MultiGraph& g, const std::vector<int>& verts) {
            return boundary(g, VertexSet(verts)).size;
        },
        py::arg("graph"), py::arg("vertices"));
    m.def(
        "components",
        [](const MultiGraph& g) { return to_lists(components(g, VertexSet::full(g.n()))); },
        py::arg("graph"));

    m.def(
        "verify_partition",
        [](const MultiGraph& g, const std::string& mu, long long p, long long q,
           const std::vector<std::vector<int>>& clusters) {
            const VerifyReport r = verify_partition(g, measure_from_name(mu), p, q,
                                                    to_sets(clusters));
            py::dict d;
            d["ok"] = r.ok;
            d["violation"] = r.violation;
            return d;
        },
        py::arg("graph"), py::arg("mu"), py::arg("p"), py::arg("q"), py::arg("clusters"));

    m.def(
        "cluster_q",
        [](const MultiGraph& g, const std::string& mu, long long p, long long q, int v,
           const std::string& mode, uint64_t seed, long long trials) {
            return cluster_dict(
                cluster_fpt_q(g, measure_from_name(mu), p, q, v, options_from(mode, seed, trials)));
        },
        py::arg("graph"), py::arg("mu"), py::arg("p"), py::arg("q"), py::arg("vertex"),
        py::arg("mode") = "auto", py::arg("seed") = 0,
        py::arg("trials") = SolveOptions{}.max_trials);
    m.def(
        "partition_q",
        [](const MultiGraph& g, const std::string& mu, long long p, long long q,
           const std::string& mode, uint64_t seed, long long trials) {
            return partition_dict(
                partition_fpt_q(g, measure_from_name(mu), p, q, options_from(mode, seed, trials)));
        },
        py::arg("graph"), py::arg("mu"), py::arg("p"), py::arg("q"), py::arg("mode") = "auto",
        py::arg("seed") = 0, py::arg("trials") = SolveOptions{}.max_trials);
    m.def(
        "cluster_p",
        [](const MultiGraph& g, const std::string& mu, long long p, long long q, int v) {
            return cluster_dict(cluster_fpt_p(g, measure_from_name(mu), p, q, v));
        },
        py::arg("graph"), py::arg("mu"), py::arg("p"), py::arg("q"), py::arg("vertex"));
    m.def(
        "partition_p",
        [](const MultiGraph& g, const std::string& mu, long long p, long long q) {
            return partition_dict(partition_fpt_p(g, measure_from_name(mu), p, q));
        },
        py::arg("graph"), py::arg("mu"), py::arg("p"), py::arg("q"));

    m.def(
        "oracle_cluster",
        [](const MultiGraph& g, const std::string& mu, long long p, long long q, int v,
           long long budget) -> py::object {
            const auto found = oracle_cluster(g, measure_from_name(mu), p, q, v, budget);
            if (!found) return py::none();
            return py::cast(found->items());
        },
        py::arg("graph"), py::arg("mu"), py::arg("p"), py::arg("q"), py::arg("vertex"),
        py::arg("budget") = kDefaultOracleBudget);
    m.def(
        "oracle_partition",
        [](const MultiGraph& g, const std::string& mu, long long p, long long q,
           long long budget) -> py::object {
            const auto found = oracle_partition(g, measure_from_name(mu), p, q, budget);
            if (!found) return py::none();
            return py::cast(to_lists(*found));
        },
        py::arg("graph"), py::arg("mu"), py::arg("p"), py::arg("q"),
        py::arg("budget") = kDefaultOracleBudget);

    m.def(
        "important_separators",
        [](const MultiGraph& g, int s, int t, long long k) {
            py::list out;
            for (const ImportantSeparator& sep : enumerate_important_separators(g, s, t, k)) {
                py::dict one;
                one["size"] = sep.cut.size;
                one["source_side"] = sep.source_side.items();
                std::vector<std::tuple<int, int, int>> edges;
                for (const Edge& e : sep.cut.edges) edges.emplace_back(e.u, e.v, e.mult);
                one["edges"] = edges;
                out.append(one);
            }
            return out;
        },
        py::arg("graph"), py::arg("s"), py::arg("t"), py::arg("k"));
    m.def(
        "important_sets",
        [](const MultiGraph& g, int v, long long q) {
            return to_lists(enumerate_important_sets(g, v, q));
        },
        py::arg("graph"), py::arg("vertex"), py::arg("q"));

    m.def(
        "gen_planted",
        [](const std::string& mu, int n, int blocks, long long intra, long long inter,
           uint64_t seed) {
            std::mt19937_64 rng(seed);
            const PlantedInstance inst =
                gen_planted(measure_from_name(mu), n, blocks, intra, inter, rng);
            py::dict d;
            d["graph"] = inst.graph;
            d["clusters"] = to_lists(inst.witness.clusters);
            d["p"] = inst.p;
            d["q"] = inst.q;
            return d;
        },
        py::arg("mu"), py::arg("n"), py::arg("blocks"), py::arg("intra") = 0,
        py::arg("inter") = 0, py::arg("seed") = 0);
    m.def(
        "gen_gadget",
        [](const MultiGraph& base, int k) {
            const GadgetInstance inst = gen_hardness_gadget(base, k);
            py::dict d;
            d["graph"] = inst.graph;
            d["apex"] = inst.apex;
            d["k"] = inst.k;
            d["q"] = inst.q;
            return d;
        },
        py::arg("base"), py::arg("k"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
