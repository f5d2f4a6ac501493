#pragma once

#include <random>
#include <string>
#include <vector>

#include "fading/claims.hpp"
#include "fading/graph.hpp"

#ifndef FADING_DATA_DIR
#define FADING_DATA_DIR "data"
#endif

namespace fading::testing {

inline std::string data_file(const std::string& name)
{
    return std::string(FADING_DATA_DIR) + "/" + name;
}

inline const Corpus& corpus()
{
    static const Corpus c = load_corpus(data_file("connected_n1-7.g6"), data_file("trees_n1-8.g6"));
    return c;
}

inline std::vector<Graph> connected_up_to(int n)
{
    std::vector<Graph> out;
    for (const Graph& g : corpus().connected)
        if (g.order() <= n)
            out.push_back(g);
    return out;
}

// G(n, p) conditioned on connectivity.
inline Graph random_connected(std::mt19937& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        Graph g(n, edges);
        if (is_connected(g))
            return g;
    }
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace fading::testing
