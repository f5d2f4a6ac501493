#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fading/graph.hpp"

namespace fading {

// colors[v] is the colour of vertex v, drawn from 1..k.
struct Coloring {
    std::vector<int> colors;
    int k = 0;

    // k is taken as the largest colour present.
    static Coloring from(std::vector<int> colors);

    int operator[](int v) const { return colors[static_cast<std::size_t>(v)]; }
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Vertices holding each colour; entry i is the class of colour i+1.
std::vector<VertexSet> color_classes(const Coloring& c);

// Throws ParameterError when colors.size() != g.order().
bool is_proper(const Graph& g, std::span<const int> colors);

// Every colour in 1..k is used.
bool is_surjective(const Coloring& c);

// First occurrences of 1, 2, ... appear in increasing vertex order.
bool is_canonical(const Coloring& c);

// Throws ContractError unless c is a proper, surjective colouring of g.
void require_valid(const Graph& g, const Coloring& c);

int chromatic_number(const Graph& g);

// Throws ParameterError on the empty graph.
int clique_number(const Graph& g);

// Visits every canonical proper colouring of g using exactly chromatic_number(g)
// colours, in lexicographic order of the colour sequence.
void for_each_chromatic_coloring(const Graph& g, const std::function<void(const Coloring&)>& visit);
std::vector<Coloring> chromatic_colorings(const Graph& g);

// How the convention picks the independent set that receives the next colour.
enum class IndependentSetRule {
    maximum_lexmin, // largest independent set, lexicographically smallest among ties
    first_maximal,  // greedy maximal set scanning vertices in id order
};

// Repeatedly extract an independent set from the uncoloured remainder and give
// it the next colour. The result is proper but may use more than chi colours.
Coloring convention_coloring(const Graph& g, IndependentSetRule rule = IndependentSetRule::maximum_lexmin);

} // namespace fading
