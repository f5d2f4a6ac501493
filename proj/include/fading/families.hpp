#pragma once

#include <span>

#include "fading/graph.hpp"

namespace fading {

// Standard families with consecutive labelling. Sizes must be >= 1 and a
// cycle needs at least 3 vertices; violations throw ParameterError.
Graph null_graph(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
// Part A is 0..a-1, part B is a..a+b-1.
Graph complete_bipartite(int a, int b);
// K_{1,leaves}; the centre is vertex 0.
Graph star(int leaves);

// h's vertices are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

// Originals keep ids 0..n-1, shadow x_i is n+i, the apex is 2n.
Graph mycielskian(const Graph& g);

// thorns[i] pendant vertices hang off vertex i; missing counts are zero.
// New vertices follow the originals, grouped by i in increasing order.
Graph thorn(const Graph& g, std::span<const int> thorns);

// g + h: disjoint union plus every edge between the two sides.
Graph join(const Graph& g, const Graph& h);

// Copy i of h occupies n1 + i*n2 .. n1 + (i+1)*n2 - 1 and is joined to vertex i of g.
Graph corona(const Graph& g, const Graph& h);

// K_1 + m copies of g. The hub is vertex 0, copy j starts at 1 + j*n.
Graph windmill(const Graph& g, int copies);

} // namespace fading
