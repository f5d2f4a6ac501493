#pragma once

#include <string>
#include <string_view>

#include "fading/graph.hpp"

namespace fading {

// Builds a graph from a family expression:
//
//   null:N  complete:N  path:N  cycle:N  star:N  complete_bipartite:A,B
//   g6:<graph6>
//   mycielskian(E)  thorn(E;t1,t2,...)  join(E,E)  corona(E,E)  windmill(E;m)
//
// Expressions nest, e.g. "windmill(mycielskian(complete:2);3)".
// Throws ParameterError with the failing offset on malformed input.
Graph build_family(std::string_view spec);

} // namespace fading
