#include "localclust/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace localclust {

MultiGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long want = -1;
    long long got = 0;
    std::vector<std::pair<int, int>> edge_list;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream row(line);
        std::string tag;
        if (!(row >> tag)) continue;  // blank line
        const auto fail = [&](const std::string& why) {
            throw std::invalid_argument("graph line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) fail("repeated header");
            std::string kind;
            if (!(row >> kind >> n >> want) || kind != "edge" || n < 0 || want < 0)
                fail("header must read 'p edge <n> <m>'");
            std::string rest;
            if (row >> rest) fail("trailing tokens after header");
            continue;
        }
        if (tag == "e") {
            if (n < 0) fail("edge before header");
            int u = 0;
            int v = 0;
            if (!(row >> u >> v)) fail("edge must read 'e <u> <v>'");
            std::string rest;
            if (row >> rest) fail("trailing tokens after edge");
            if (u < 1 || u > n || v < 1 || v > n) fail("vertex id out of range");
            if (u == v) fail("self-loop");
            ++got;
            if (got > want) fail("more edges than the header promised");
            edge_list.emplace_back(u - 1, v - 1);
            continue;
        }
        fail("unknown line type '" + tag + "'");
    }
    if (n < 0) throw std::invalid_argument("graph text has no header");
    if (got != want)
        throw std::invalid_argument("header promised " + std::to_string(want) + " edges, found " +
                                    std::to_string(got));
    return MultiGraph(n, edge_list);
}

std::string serialize_graph(const MultiGraph& g) {
    std::ostringstream out;
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges())
        for (int copy = 0; copy < e.mult; ++copy)
            out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path);
}

MultiGraph load_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kSolutionFormat = "solution/1";

const std::vector<std::string>& known_statuses() {
    static const std::vector<std::string> all{"partition", "cluster", "none", "budget-exhausted"};
    return all;
}

}  // namespace

std::string serialize_solution(const SolutionFile& sol) {
    ordered_json doc;
    doc["format"] = kSolutionFormat;
    doc["problem"] = {{"mu", measure_name(sol.mu)}, {"p", sol.p}, {"q", sol.q}};
    doc["status"] = sol.status;
    if (sol.vertex) doc["vertex"] = *sol.vertex + 1;  // 1-based in documents
    ordered_json clusters = ordered_json::array();
    for (size_t i = 0; i < sol.clusters.size(); ++i) {
        ordered_json one;
        std::vector<int> external;  // documents use 1-based ids, like graph files
        for (int u : sol.clusters[i]) external.push_back(u + 1);
        one["vertices"] = std::move(external);
        one["mu_value"] = sol.stats.at(i).mu_value;
        one["cut_value"] = sol.stats.at(i).cut_value;
        clusters.push_back(std::move(one));
    }
    doc["clusters"] = std::move(clusters);
    doc["algorithm"] = sol.algorithm;
    doc["mode"] = sol.mode;
    if (sol.seed) doc["seed"] = *sol.seed;
    doc["trials_used"] = sol.trials_used;
    return doc.dump(2) + "\n";
}

SolutionFile parse_solution(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& err) {
        throw std::invalid_argument(std::string("solution is not valid json: ") + err.what());
    }
    try {
        if (doc.at("format").get<std::string>() != kSolutionFormat)
            throw std::invalid_argument("unsupported solution format");
        SolutionFile sol;
        const ordered_json& prob = doc.at("problem");
        sol.mu = measure_from_name(prob.at("mu").get<std::string>());
        sol.p = prob.at("p").get<long long>();
        sol.q = prob.at("q").get<long long>();
        sol.status = doc.at("status").get<std::string>();
        const auto& all = known_statuses();
        if (std::find(all.begin(), all.end(), sol.status) == all.end())
            throw std::invalid_argument("unknown status '" + sol.status + "'");
        if (doc.contains("vertex")) {
            const int label = doc.at("vertex").get<int>();
            if (label < 1) throw std::invalid_argument("vertex ids are 1-based");
            sol.vertex = label - 1;
        }
        for (const ordered_json& one : doc.at("clusters")) {
            std::vector<int> verts = one.at("vertices").get<std::vector<int>>();
            for (int& u : verts) {
                if (u < 1) throw std::invalid_argument("vertex ids are 1-based");
                --u;
            }
            sol.clusters.emplace_back(std::move(verts));
            sol.stats.push_back(ClusterStats{one.at("mu_value").get<long long>(),
                                             one.at("cut_value").get<long long>()});
        }
        sol.algorithm = doc.value("algorithm", std::string{});
        sol.mode = doc.value("mode", std::string{});
        if (doc.contains("seed")) sol.seed = doc.at("seed").get<uint64_t>();
        sol.trials_used = doc.value("trials_used", 0ll);
        return sol;
    } catch (const ordered_json::exception& err) {
        throw std::invalid_argument(std::string("malformed solution document: ") + err.what());
    }
}

}  // namespace localclust
