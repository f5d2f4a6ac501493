#include "fading/families.hpp"

#include <string>
#include <vector>

#include "fading/errors.hpp"

namespace fading {

namespace {

void require_order(long long n, const char* what)
{
    if (n > max_order)
        throw ParameterError(std::string(what) + " would have " + std::to_string(n) +
                             " vertices; at most " + std::to_string(max_order) + " are supported");
}

void require_positive(int n, const char* what)
{
    if (n < 1)
        throw ParameterError(std::string(what) + " needs at least one vertex, got " + std::to_string(n));
}

void append_shifted(std::vector<Edge>& out, const Graph& g, int shift)
{
    for (auto [u, v] : g.edges())
        out.emplace_back(u + shift, v + shift);
}

} // namespace

Graph null_graph(int n)
{
    require_positive(n, "null graph");
    return Graph(n);
}

Graph complete(int n)
{
    require_positive(n, "complete graph");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph path(int n)
{
    require_positive(n, "path");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle(int n)
{
    if (n < 3)
        throw ParameterError("cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b)
{
    require_positive(a, "complete bipartite part");
    require_positive(b, "complete bipartite part");
    require_order(static_cast<long long>(a) + b, "complete bipartite graph");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

Graph star(int leaves)
{
    return complete_bipartite(1, leaves);
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    require_order(static_cast<long long>(g.order()) + h.order(), "disjoint union");
    std::vector<Edge> edges = g.edges();
    append_shifted(edges, h, g.order());
    return Graph(g.order() + h.order(), edges);
}

Graph mycielskian(const Graph& g)
{
    require_positive(g.order(), "Mycielskian base");
    const int n = g.order();
    require_order(2LL * n + 1, "Mycielskian");
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, n + v);
        edges.emplace_back(v, n + u);
    }
    for (int i = 0; i < n; ++i)
        edges.emplace_back(2 * n, n + i);
    return Graph(2 * n + 1, edges);
}

Graph thorn(const Graph& g, std::span<const int> thorns)
{
    if (static_cast<int>(thorns.size()) > g.order())
        throw ParameterError("thorn counts (" + std::to_string(thorns.size()) + ") exceed graph order (" +
                             std::to_string(g.order()) + ")");
    long long total = g.order();
    for (int t : thorns) {
        if (t < 0)
            throw ParameterError("thorn counts must be non-negative");
        total += t;
    }
    require_order(total, "thorn graph");
    std::vector<Edge> edges = g.edges();
    int next = g.order();
    for (int i = 0; i < static_cast<int>(thorns.size()); ++i)
        for (int j = 0; j < thorns[i]; ++j)
            edges.emplace_back(i, next++);
    return Graph(next, edges);
}

Graph join(const Graph& g, const Graph& h)
{
    Graph u = disjoint_union(g, h);
    std::vector<Edge> edges = u.edges();
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b)
            edges.emplace_back(a, g.order() + b);
    return Graph(u.order(), edges);
}

Graph corona(const Graph& g, const Graph& h)
{
    require_positive(g.order(), "corona base");
    const int n1 = g.order();
    const int n2 = h.order();
    require_order(static_cast<long long>(n1) * (1 + n2), "corona");
    std::vector<Edge> edges = g.edges();
    for (int i = 0; i < n1; ++i) {
        const int base = n1 + i * n2;
        append_shifted(edges, h, base);
        for (int w = 0; w < n2; ++w)
            edges.emplace_back(i, base + w);
    }
    return Graph(n1 * (1 + n2), edges);
}

Graph windmill(const Graph& g, int copies)
{
    if (copies < 1)
        throw ParameterError("windmill needs at least one copy, got " + std::to_string(copies));
    require_order(1LL + static_cast<long long>(copies) * g.order(), "windmill");
    Graph blades = Graph(0);
    for (int j = 0; j < copies; ++j)
        blades = disjoint_union(blades, g);
    return join(Graph(1), blades);
}

} // namespace fading
