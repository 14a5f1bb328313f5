#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "localclust/measures.hpp"
#include "localclust/multigraph.hpp"
#include "localclust/uncross.hpp"

namespace localclust {

// DIMACS-style text: header "p edge <n> <m>", then exactly m lines
// "e <u> <v>" with 1-based ids; repeated lines stack multiplicity; lines
// starting with "c" are comments. Parse errors raise std::invalid_argument.
MultiGraph parse_graph(const std::string& text);
std::string serialize_graph(const MultiGraph& g);

MultiGraph load_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Versioned result document ("solution/1"). Serialization is deterministic,
// so equal solutions give byte-identical files. In-memory ids are 0-based;
// the written document uses 1-based ids to match the graph format.
struct SolutionFile {
    std::string status;  // partition | cluster | none | budget-exhausted
    Measure mu = Measure::Size;
    long long p = 0;
    long long q = 0;
    std::vector<VertexSet> clusters;
    std::vector<ClusterStats> stats;   // parallel to clusters
    std::optional<int> vertex;         // anchor for single-cluster queries
    std::string algorithm;             // brute | fptq | fptp | auto
    std::string mode;                  // search mode actually used
    std::optional<uint64_t> seed;
    long long trials_used = 0;
};

std::string serialize_solution(const SolutionFile& sol);
SolutionFile parse_solution(const std::string& text);

}  // namespace localclust
