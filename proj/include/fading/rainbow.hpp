#pragma once

#include <optional>
#include <string_view>

#include "fading/coloring.hpp"
#include "fading/graph.hpp"

namespace fading {

// A faded vertex keeps its place in the graph but shows no colour to any
// closed neighbourhood, and never counts as a yielder itself.
using FadeSet = VertexSet;

struct RainbowReport {
    VertexSet yielders;
    int count() const { return yielders.size(); }
};

// Vertices u outside `faded` whose N[u] holds a solid vertex of every colour
// 1..k. Throws ContractError for an improper or non-surjective colouring.
RainbowReport rainbow_vertices(const Graph& g, const Coloring& c, FadeSet faded = {});

struct Extremum {
    int value = 0;
    Coloring witness;
};

// Extremes of the yielder count over all chromatic colourings; the witness
// is the first colouring in enumeration order that attains the value.
Extremum r_min(const Graph& g);
Extremum r_max(const Graph& g);

// threshold: any colouring may serve as long as r_min solid yielders survive.
// strict: the base colouring itself must attain r_min.
enum class FadeMode { threshold, strict };

std::string_view to_string(FadeMode mode);
// Throws ParameterError for anything but "threshold" or "strict".
FadeMode parse_fade_mode(std::string_view text);

struct FadeResult {
    // Empty when the threshold cannot be met even with nothing faded.
    std::optional<int> value;
    FadeMode mode = FadeMode::threshold;
    int threshold = 0;
    Coloring coloring;
    FadeSet fadeset;

    bool feasible() const { return value.has_value(); }
};

// Largest fade set keeping at least `threshold` yielders under c. Among
// maximum sets the lexicographically smallest is returned.
FadeResult fading_for_coloring(const Graph& g, const Coloring& c, int threshold);

FadeResult f_minus(const Graph& g, FadeMode mode = FadeMode::threshold, int jobs = 1);
FadeResult f_plus(const Graph& g, int jobs = 1);

// n - |union of N[u] over the yielders of c|: everything outside the
// yielders' neighbourhoods can fade for free, so this bounds the fading
// number of c from below.
int uncovered_bound(const Graph& g, const Coloring& c);

// Every invariant over one pass of the colouring stream.
struct GraphAnalysis {
    int order = 0;
    int size = 0;
    bool connected = true;
    int chi = 0;
    int omega = 0;
    std::size_t coloring_count = 0;
    Extremum r_min;
    Extremum r_max;
    FadeResult f_minus_threshold;
    FadeResult f_minus_strict;
    FadeResult f_plus;
    Extremum uncovered_best;
};

GraphAnalysis analyze(const Graph& g, int jobs = 1);

} // namespace fading
