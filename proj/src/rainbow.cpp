#include "fading/rainbow.hpp"

#include <string>

#include "fading/errors.hpp"
#include "fading/parallel.hpp"

namespace fading {

namespace {

// Yielder counting against a fixed colouring, with the classes and closed
// neighbourhoods precomputed as bitsets.
class RainbowCounter {
public:
    RainbowCounter(const Graph& g, const Coloring& c) : classes_(color_classes(c))
    {
        closed_.reserve(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v)
            closed_.push_back(g.closed_neighbourhood(v));
    }

    bool yields(int u, FadeSet faded) const
    {
        if (faded.contains(u))
            return false;
        for (VertexSet cls : classes_)
            if (!(closed_[u] & cls).intersects(VertexSet(~faded.bits())))
                return false;
        return true;
    }

    VertexSet yielders(VertexSet among, FadeSet faded) const
    {
        VertexSet out;
        for (int u : among)
            if (yields(u, faded))
                out.insert(u);
        return out;
    }

    int count(VertexSet among, FadeSet faded) const
    {
        int total = 0;
        for (int u : among)
            total += yields(u, faded) ? 1 : 0;
        return total;
    }

    VertexSet closed(int u) const { return closed_[u]; }

private:
    std::vector<VertexSet> classes_;
    std::vector<VertexSet> closed_;
};

// Depth-first over vertices in id order, fading before keeping. Fading never
// adds a yielder, so a branch dies as soon as the yielder count drops below
// the threshold, and a branch that cannot beat the incumbent size is cut.
class FadeSearch {
public:
    FadeSearch(const Graph& g, const Coloring& c, int threshold)
        : counter_(g, c), n_(g.order()), threshold_(threshold)
    {
        candidates_ = counter_.yielders(g.vertices(), {});
    }

    std::optional<FadeSet> run()
    {
        if (threshold_ == 0)
            return VertexSet::first(n_);
        if (candidates_.size() < threshold_)
            return std::nullopt;
        best_ = FadeSet{};
        descend(0, FadeSet{});
        return best_;
    }

private:
    void descend(int v, FadeSet faded)
    {
        if (faded.size() + (n_ - v) <= best_.size())
            return;
        if (v == n_) {
            best_ = faded;
            return;
        }
        FadeSet more = faded;
        more.insert(v);
        if (counter_.count(candidates_ - more, more) >= threshold_)
            descend(v + 1, more);
        descend(v + 1, faded);
    }

    RainbowCounter counter_;
    int n_;
    int threshold_;
    VertexSet candidates_;
    FadeSet best_;
};

struct Stream {
    std::vector<Coloring> colorings;
    std::vector<int> counts;
};

Stream scan_stream(const Graph& g)
{
    Stream s;
    for_each_chromatic_coloring(g, [&](const Coloring& c) {
        s.counts.push_back(RainbowCounter(g, c).count(g.vertices(), {}));
        s.colorings.push_back(c);
    });
    return s;
}

template <class Better>
Extremum pick(const Stream& s, Better better)
{
    std::size_t at = 0;
    for (std::size_t i = 1; i < s.counts.size(); ++i)
        if (better(s.counts[i], s.counts[at]))
            at = i;
    return {s.counts[at], s.colorings[at]};
}

Extremum min_of(const Stream& s)
{
    return pick(s, [](int a, int b) { return a < b; });
}

Extremum max_of(const Stream& s)
{
    return pick(s, [](int a, int b) { return a > b; });
}

// Best fading over the colourings selected by `eligible`, keeping the first
// optimum in stream order.
template <class Eligible>
FadeResult best_fading(const Graph& g, const Stream& s, int threshold, FadeMode mode, int jobs, Eligible eligible)
{
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < s.colorings.size(); ++i)
        if (eligible(s.counts[i]))
            picked.push_back(i);

    auto results = parallel_map(picked.size(), jobs, [&](std::size_t j) {
        return fading_for_coloring(g, s.colorings[picked[j]], threshold);
    });

    FadeResult best;
    best.mode = mode;
    best.threshold = threshold;
    for (auto& r : results) {
        if (r.feasible() && (!best.feasible() || *r.value > *best.value)) {
            best.value = r.value;
            best.coloring = std::move(r.coloring);
            best.fadeset = r.fadeset;
        }
    }
    return best;
}

FadeResult minus_from(const Graph& g, const Stream& s, int rmin, FadeMode mode, int jobs)
{
    if (mode == FadeMode::strict)
        return best_fading(g, s, rmin, mode, jobs, [rmin](int r) { return r == rmin; });
    return best_fading(g, s, rmin, mode, jobs, [rmin](int r) { return r >= rmin; });
}

FadeResult plus_from(const Graph& g, const Stream& s, int rmax, int jobs)
{
    return best_fading(g, s, rmax, FadeMode::threshold, jobs, [rmax](int r) { return r >= rmax; });
}

} // namespace

std::string_view to_string(FadeMode mode)
{
    return mode == FadeMode::strict ? "strict" : "threshold";
}

FadeMode parse_fade_mode(std::string_view text)
{
    if (text == "threshold")
        return FadeMode::threshold;
    if (text == "strict")
        return FadeMode::strict;
    throw ParameterError("unknown fade mode '" + std::string(text) + "' (expected threshold or strict)");
}

RainbowReport rainbow_vertices(const Graph& g, const Coloring& c, FadeSet faded)
{
    require_valid(g, c);
    if (!faded.subset_of(g.vertices()))
        throw RangeError("fade set contains a vertex outside the graph");
    return {RainbowCounter(g, c).yielders(g.vertices(), faded)};
}

Extremum r_min(const Graph& g)
{
    return min_of(scan_stream(g));
}

Extremum r_max(const Graph& g)
{
    return max_of(scan_stream(g));
}

FadeResult fading_for_coloring(const Graph& g, const Coloring& c, int threshold)
{
    require_valid(g, c);
    if (threshold < 0 || threshold > g.order())
        throw ParameterError("threshold " + std::to_string(threshold) + " outside [0, " + std::to_string(g.order()) +
                             "]");
    FadeResult out;
    out.threshold = threshold;
    out.coloring = c;
    if (auto best = FadeSearch(g, c, threshold).run()) {
        out.value = best->size();
        out.fadeset = *best;
    }
    return out;
}

FadeResult f_minus(const Graph& g, FadeMode mode, int jobs)
{
    const Stream s = scan_stream(g);
    return minus_from(g, s, min_of(s).value, mode, jobs);
}

FadeResult f_plus(const Graph& g, int jobs)
{
    const Stream s = scan_stream(g);
    return plus_from(g, s, max_of(s).value, jobs);
}

int uncovered_bound(const Graph& g, const Coloring& c)
{
    const RainbowReport report = rainbow_vertices(g, c);
    VertexSet covered;
    for (int u : report.yielders)
        covered |= g.closed_neighbourhood(u);
    return g.order() - covered.size();
}

GraphAnalysis analyze(const Graph& g, int jobs)
{
    GraphAnalysis a;
    a.order = g.order();
    a.size = g.size();
    a.connected = is_connected(g);
    a.chi = chromatic_number(g);
    a.omega = g.order() == 0 ? 0 : clique_number(g);

    const Stream s = scan_stream(g);
    a.coloring_count = s.colorings.size();
    a.r_min = min_of(s);
    a.r_max = max_of(s);
    a.f_minus_threshold = minus_from(g, s, a.r_min.value, FadeMode::threshold, jobs);
    a.f_minus_strict = minus_from(g, s, a.r_min.value, FadeMode::strict, jobs);
    a.f_plus = plus_from(g, s, a.r_max.value, jobs);

    const auto bounds =
        parallel_map(s.colorings.size(), jobs, [&](std::size_t i) { return uncovered_bound(g, s.colorings[i]); });
    a.uncovered_best = {bounds.front(), s.colorings.front()};
    for (std::size_t i = 1; i < bounds.size(); ++i)
        if (bounds[i] > a.uncovered_best.value)
            a.uncovered_best = {bounds[i], s.colorings[i]};
    return a;
}

} // namespace fading
