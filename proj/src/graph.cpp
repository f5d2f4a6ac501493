#include "fading/graph.hpp"

#include <algorithm>
#include <string>

#include "fading/errors.hpp"

namespace fading {

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > max_order)
        throw ParameterError("graph order must lie in [0, " + std::to_string(max_order) + "], got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw ParameterError("loop at vertex " + std::to_string(u));
        if (adj_[u].contains(v))
            continue;
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++edge_count_;
    }
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw RangeError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

VertexSet Graph::neighbours(int v) const
{
    check_vertex(v);
    return adj_[v];
}

VertexSet Graph::closed_neighbourhood(int v) const
{
    VertexSet s = neighbours(v);
    s.insert(v);
    return s;
}

bool Graph::adjacent(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    return adj_[u].contains(v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool is_connected(const Graph& g)
{
    if (g.order() <= 1)
        return true;
    VertexSet seen{0};
    VertexSet frontier{0};
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier)
            next |= g.neighbours(v);
        frontier = next - seen;
        seen |= next;
    }
    return seen == g.vertices();
}

bool is_bipartite(const Graph& g)
{
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbours(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_odd_cycle(const Graph& g)
{
    if (g.order() < 3 || g.order() % 2 == 0)
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2)
            return false;
    return is_connected(g);
}

Graph relabel(const Graph& g, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != g.order())
        throw ParameterError("permutation length does not match graph order");
    std::vector<bool> hit(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= g.order() || hit[p])
            throw ParameterError("not a permutation of the vertex ids");
        hit[p] = true;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

} // namespace fading
