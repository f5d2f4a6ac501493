#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fading/vertex_set.hpp"

namespace fading {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    // Null graph on n vertices.
    explicit Graph(int n);

    // Throws RangeError for ids outside [0, n) and ParameterError for loops.
    // Repeated edges are ignored.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    int size() const { return edge_count_; }
    VertexSet vertices() const { return VertexSet::first(n_); }

    VertexSet neighbours(int v) const;
    // N[v] = N(v) + v
    VertexSet closed_neighbourhood(int v) const;
    bool adjacent(int u, int v) const;
    int degree(int v) const { return neighbours(v).size(); }

    // Each edge once as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
// Connected, 2-regular and of odd order.
bool is_odd_cycle(const Graph& g);

// Vertex v of g becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const int> perm);

} // namespace fading
