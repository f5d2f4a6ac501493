#include "fading/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fading/errors.hpp"

namespace fading {

Coloring Coloring::from(std::vector<int> colors)
{
    const int k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
    return Coloring{std::move(colors), k};
}

std::vector<VertexSet> color_classes(const Coloring& c)
{
    std::vector<VertexSet> classes(static_cast<std::size_t>(std::max(c.k, 0)));
    for (int v = 0; v < static_cast<int>(c.colors.size()); ++v)
        if (c[v] >= 1 && c[v] <= c.k)
            classes[c[v] - 1].insert(v);
    return classes;
}

bool is_proper(const Graph& g, std::span<const int> colors)
{
    if (static_cast<int>(colors.size()) != g.order())
        throw ParameterError("colouring has " + std::to_string(colors.size()) + " entries for a graph of order " +
                             std::to_string(g.order()));
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v])
            return false;
    return true;
}

bool is_surjective(const Coloring& c)
{
    std::vector<bool> seen(static_cast<std::size_t>(c.k) + 1, false);
    for (int col : c.colors) {
        if (col < 1 || col > c.k)
            return false;
        seen[col] = true;
    }
    return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

bool is_canonical(const Coloring& c)
{
    int next = 1;
    for (int col : c.colors) {
        if (col > next)
            return false;
        if (col == next)
            ++next;
    }
    return true;
}

void require_valid(const Graph& g, const Coloring& c)
{
    if (static_cast<int>(c.colors.size()) != g.order())
        throw ContractError("colouring length does not match graph order");
    if (!is_surjective(c))
        throw ContractError("colouring does not use every colour in 1..k");
    if (!is_proper(g, c.colors))
        throw ContractError("colouring is not proper");
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    int run()
    {
        expand(0, g_.vertices());
        return best_;
    }

private:
    void expand(int size, VertexSet cand)
    {
        if (cand.empty()) {
            best_ = std::max(best_, size);
            return;
        }
        while (!cand.empty()) {
            if (size + cand.size() <= best_)
                return;
            const int v = cand.front();
            cand.erase(v);
            expand(size + 1, cand & g_.neighbours(v));
        }
    }

    const Graph& g_;
    int best_ = 0;
};

// Greedy first-fit in the given order; gives the initial upper bound.
int greedy_colors(const Graph& g, const std::vector<int>& order)
{
    std::vector<int> color(static_cast<std::size_t>(g.order()), 0);
    int used = 0;
    for (int v : order) {
        std::uint64_t taken = 0;
        for (int w : g.neighbours(v))
            if (color[w] > 0)
                taken |= std::uint64_t{1} << color[w];
        int c = 1;
        while ((taken >> c) & 1U)
            ++c;
        color[v] = c;
        used = std::max(used, c);
    }
    return used;
}

class ChromaticSearch {
public:
    ChromaticSearch(const Graph& g, int lower, int upper, std::vector<int> order)
        : g_(g), lower_(lower), best_(upper), order_(std::move(order)),
          color_(static_cast<std::size_t>(g.order()), 0)
    {
    }

    int run()
    {
        if (best_ > lower_)
            assign(0, 0);
        return best_;
    }

private:
    // Returns true once the lower bound is met and the search can stop.
    bool assign(std::size_t idx, int used)
    {
        if (idx == order_.size()) {
            best_ = used;
            return best_ == lower_;
        }
        const int v = order_[idx];
        for (int c = 1; c <= std::min(used + 1, best_ - 1); ++c) {
            bool clash = false;
            for (int w : g_.neighbours(v))
                if (color_[w] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            color_[v] = c;
            const bool done = assign(idx + 1, std::max(used, c));
            color_[v] = 0;
            if (done)
                return true;
        }
        return false;
    }

    const Graph& g_;
    int lower_;
    int best_;
    std::vector<int> order_;
    std::vector<int> color_;
};

} // namespace

int clique_number(const Graph& g)
{
    if (g.order() == 0)
        throw ParameterError("clique number of the empty graph is undefined");
    return CliqueSearch(g).run();
}

int chromatic_number(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    const int lower = clique_number(g);
    const int upper = greedy_colors(g, order);
    return ChromaticSearch(g, lower, upper, std::move(order)).run();
}

namespace {

class CanonicalEnumerator {
public:
    CanonicalEnumerator(const Graph& g, int k, const std::function<void(const Coloring&)>& visit)
        : g_(g), visit_(visit), current_{std::vector<int>(static_cast<std::size_t>(g.order()), 0), k}
    {
    }

    void run() { extend(0, 0); }

private:
    void extend(int v, int used)
    {
        const int n = g_.order();
        if (current_.k - used > n - v)
            return;
        if (v == n) {
            visit_(current_);
            return;
        }
        const int limit = std::min(used + 1, current_.k);
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            for (int w : g_.neighbours(v))
                if (w < v && current_.colors[w] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            current_.colors[v] = c;
            extend(v + 1, std::max(used, c));
        }
        current_.colors[v] = 0;
    }

    const Graph& g_;
    const std::function<void(const Coloring&)>& visit_;
    Coloring current_;
};

VertexSet max_independent_lexmin(const Graph& g, VertexSet within)
{
    VertexSet best;
    std::function<void(VertexSet, VertexSet)> search = [&](VertexSet chosen, VertexSet cand) {
        if (chosen.size() > best.size())
            best = chosen;
        while (!cand.empty()) {
            if (chosen.size() + cand.size() <= best.size())
                return;
            const int v = cand.front();
            cand.erase(v);
            VertexSet next = chosen;
            next.insert(v);
            search(next, cand - g.neighbours(v));
        }
    };
    search(VertexSet{}, within);
    return best;
}

VertexSet first_maximal_independent(const Graph& g, VertexSet within)
{
    VertexSet chosen;
    while (!within.empty()) {
        const int v = within.front();
        chosen.insert(v);
        within -= g.closed_neighbourhood(v);
    }
    return chosen;
}

} // namespace

void for_each_chromatic_coloring(const Graph& g, const std::function<void(const Coloring&)>& visit)
{
    CanonicalEnumerator(g, chromatic_number(g), visit).run();
}

std::vector<Coloring> chromatic_colorings(const Graph& g)
{
    std::vector<Coloring> out;
    for_each_chromatic_coloring(g, [&](const Coloring& c) { out.push_back(c); });
    return out;
}

Coloring convention_coloring(const Graph& g, IndependentSetRule rule)
{
    Coloring c{std::vector<int>(static_cast<std::size_t>(g.order()), 0), 0};
    VertexSet remaining = g.vertices();
    while (!remaining.empty()) {
        const VertexSet chosen = rule == IndependentSetRule::maximum_lexmin ? max_independent_lexmin(g, remaining)
                                                                            : first_maximal_independent(g, remaining);
        ++c.k;
        for (int v : chosen)
            c.colors[v] = c.k;
        remaining -= chosen;
    }
    return c;
}

} // namespace fading
