#pragma once

#include "localclust/multigraph.hpp"
#include "localclust/uncross.hpp"

namespace localclust {

// BudgetExhausted means the search gave up before covering the candidate
// space, so "no cluster found" is inconclusive; None is a proof.
enum class SolveStatus { Found, None, BudgetExhausted };

const char* solve_status_name(SolveStatus status);

struct ClusterOutcome {
    SolveStatus status = SolveStatus::None;
    VertexSet cluster;  // meaningful only when status == Found
    ClusterStats stats;
    long long trials_used = 0;
    const char* mode_used = "";
};

struct PartitionOutcome {
    SolveStatus status = SolveStatus::None;
    PartitionSolution solution;  // meaningful only when status == Found
    long long trials_used = 0;
    const char* mode_used = "";
};

}  // namespace localclust
