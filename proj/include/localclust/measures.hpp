#pragma once

#include <string>

#include "localclust/multigraph.hpp"

namespace localclust {

enum class Measure { Size, NonEdge, NonDeg };

std::string measure_name(Measure mu);
Measure measure_from_name(const std::string& name);

// Size: |x|. NonEdge: vertex pairs of x with no edge. NonDeg: max over u in x
// of non-neighbors of u inside x (0 for |x| <= 1). NonEdge and NonDeg demand a
// simple graph; parallel edges change what those problems mean.
long long measure_eval(const MultiGraph& g, Measure mu, const VertexSet& x);

}  // namespace localclust
