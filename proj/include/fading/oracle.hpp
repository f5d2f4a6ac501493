#pragma once

#include <span>
#include <vector>

#include "fading/graph.hpp"

namespace fading {

// The seven numbers every cross-check compares.
struct Invariants {
    int chi = 0;
    int omega = 0;
    int r_min = 0;
    int r_max = 0;
    int f_minus_threshold = 0;
    int f_minus_strict = 0;
    int f_plus = 0;

    friend bool operator==(const Invariants&, const Invariants&) = default;
};

namespace oracle {

// Plain exhaustive second implementation: every k^n colour assignment, every
// vertex subset, no pruning and no symmetry reduction. It reads the graph's
// edge list and nothing else from the library. All entry points throw
// OracleRefusal above `cap` vertices.
inline constexpr int default_cap = 9;

Invariants invariants(const Graph& g, int cap = default_cap);

int chromatic_number(const Graph& g, int cap = default_cap);
int clique_number(const Graph& g, int cap = default_cap);
bool is_connected(const Graph& g);

// Proper assignments using every colour in 1..k, in odometer order.
std::vector<std::vector<int>> surjective_colorings(const Graph& g, int k, int cap = default_cap);

int rainbow_count(const Graph& g, std::span<const int> colors, const std::vector<bool>& faded);

// Largest number of vertices that can fade while at least `threshold`
// yielders remain; -1 when even the empty fade set falls short.
int fading_for_coloring(const Graph& g, std::span<const int> colors, int threshold, int cap = default_cap);

// Tries every bijection; meant for the small graphs the claims touch.
bool isomorphic(const Graph& a, const Graph& b, int cap = default_cap);

// n minus the size of the union of the yielders' closed neighbourhoods.
int uncovered_bound(const Graph& g, std::span<const int> colors);

} // namespace oracle
} // namespace fading
