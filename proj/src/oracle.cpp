#include "fading/oracle.hpp"

#include <algorithm>
#include <string>

#include "fading/errors.hpp"

namespace fading::oracle {

namespace {

using Matrix = std::vector<std::vector<bool>>;
using Lists = std::vector<std::vector<int>>;

void check_cap(const Graph& g, int cap)
{
    if (g.order() > cap)
        throw OracleRefusal("oracle refuses a graph of order " + std::to_string(g.order()) + " (cap " +
                            std::to_string(cap) + ")");
}

Matrix matrix_of(const Graph& g)
{
    Matrix m(static_cast<std::size_t>(g.order()), std::vector<bool>(static_cast<std::size_t>(g.order()), false));
    for (auto [u, v] : g.edges()) {
        m[u][v] = true;
        m[v][u] = true;
    }
    return m;
}

// Closed neighbourhood lists, the vertex itself first.
Lists closed_lists(const Graph& g)
{
    Lists out(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        out[v].push_back(v);
    for (auto [u, v] : g.edges()) {
        out[u].push_back(v);
        out[v].push_back(u);
    }
    return out;
}

bool proper(const Graph& g, const std::vector<int>& colors)
{
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v])
            return false;
    return true;
}

bool uses_all(const std::vector<int>& colors, int k)
{
    for (int c = 1; c <= k; ++c)
        if (std::find(colors.begin(), colors.end(), c) == colors.end())
            return false;
    return true;
}

// Advance an odometer over {1..k}^n, last position fastest; false once it wraps.
bool advance(std::vector<int>& colors, int k)
{
    for (int i = static_cast<int>(colors.size()) - 1; i >= 0; --i) {
        if (colors[i] < k) {
            ++colors[i];
            return true;
        }
        colors[i] = 1;
    }
    return false;
}

bool any_proper(const Graph& g, int k)
{
    std::vector<int> colors(static_cast<std::size_t>(g.order()), 1);
    do {
        if (proper(g, colors))
            return true;
    } while (advance(colors, k));
    return false;
}

int count_yielders(const Lists& closed, const std::vector<int>& colors, int k, unsigned faded)
{
    const unsigned all = (1U << (k + 1)) - 2;
    int total = 0;
    for (std::size_t u = 0; u < closed.size(); ++u) {
        if ((faded >> u) & 1U)
            continue;
        unsigned seen = 0;
        for (int w : closed[u])
            if (!((faded >> w) & 1U))
                seen |= 1U << colors[w];
        if (seen == all)
            ++total;
    }
    return total;
}

int bits_in(unsigned mask)
{
    int c = 0;
    for (; mask != 0; mask >>= 1)
        c += static_cast<int>(mask & 1U);
    return c;
}

int max_color(std::span<const int> colors)
{
    int k = 0;
    for (int c : colors)
        k = std::max(k, c);
    return k;
}

} // namespace

int chromatic_number(const Graph& g, int cap)
{
    check_cap(g, cap);
    if (g.order() == 0)
        return 0;
    for (int k = 1;; ++k)
        if (any_proper(g, k))
            return k;
}

int clique_number(const Graph& g, int cap)
{
    check_cap(g, cap);
    const Matrix m = matrix_of(g);
    const int n = g.order();
    int best = 0;
    for (unsigned s = 1; s < (1U << n); ++s) {
        bool clique = true;
        for (int u = 0; u < n && clique; ++u)
            for (int v = u + 1; v < n && clique; ++v)
                if (((s >> u) & 1U) && ((s >> v) & 1U) && !m[u][v])
                    clique = false;
        if (clique)
            best = std::max(best, bits_in(s));
    }
    return best;
}

bool is_connected(const Graph& g)
{
    const int n = g.order();
    if (n == 0)
        return true;
    const Matrix m = matrix_of(g);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w = 0; w < n; ++w)
            if (m[queue[head]][w] && !seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
    return static_cast<int>(queue.size()) == n;
}

std::vector<std::vector<int>> surjective_colorings(const Graph& g, int k, int cap)
{
    check_cap(g, cap);
    std::vector<std::vector<int>> out;
    if (g.order() == 0) {
        if (k == 0)
            out.emplace_back();
        return out;
    }
    if (k < 1)
        return out;
    std::vector<int> colors(static_cast<std::size_t>(g.order()), 1);
    do {
        if (proper(g, colors) && uses_all(colors, k))
            out.push_back(colors);
    } while (advance(colors, k));
    return out;
}

int rainbow_count(const Graph& g, std::span<const int> colors, const std::vector<bool>& faded)
{
    unsigned mask = 0;
    for (std::size_t v = 0; v < faded.size(); ++v)
        if (faded[v])
            mask |= 1U << v;
    return count_yielders(closed_lists(g), std::vector<int>(colors.begin(), colors.end()), max_color(colors), mask);
}

int fading_for_coloring(const Graph& g, std::span<const int> colors, int threshold, int cap)
{
    check_cap(g, cap);
    const Lists closed = closed_lists(g);
    const std::vector<int> col(colors.begin(), colors.end());
    const int k = max_color(colors);
    int best = -1;
    for (unsigned f = 0; f < (1U << g.order()); ++f)
        if (count_yielders(closed, col, k, f) >= threshold)
            best = std::max(best, bits_in(f));
    return best;
}

bool isomorphic(const Graph& a, const Graph& b, int cap)
{
    check_cap(a, cap);
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    const Matrix ma = matrix_of(a);
    const Matrix mb = matrix_of(b);
    const int n = a.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    do {
        bool same = true;
        for (int u = 0; u < n && same; ++u)
            for (int v = u + 1; v < n && same; ++v)
                same = ma[u][v] == mb[perm[u]][perm[v]];
        if (same)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

int uncovered_bound(const Graph& g, std::span<const int> colors)
{
    const Lists closed = closed_lists(g);
    const std::vector<int> col(colors.begin(), colors.end());
    const int k = max_color(colors);
    std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
    for (int u = 0; u < g.order(); ++u) {
        std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
        for (int w : closed[u])
            seen[col[w]] = true;
        if (std::count(seen.begin() + 1, seen.end(), true) == k)
            for (int w : closed[u])
                covered[w] = true;
    }
    return g.order() - static_cast<int>(std::count(covered.begin(), covered.end(), true));
}

Invariants invariants(const Graph& g, int cap)
{
    check_cap(g, cap);
    Invariants out;
    const int n = g.order();
    out.chi = chromatic_number(g, cap);
    out.omega = clique_number(g, cap);

    const auto colorings = surjective_colorings(g, out.chi, cap);
    const Lists closed = closed_lists(g);
    std::vector<int> counts;
    counts.reserve(colorings.size());
    for (const auto& c : colorings)
        counts.push_back(count_yielders(closed, c, out.chi, 0));
    out.r_min = *std::min_element(counts.begin(), counts.end());
    out.r_max = *std::max_element(counts.begin(), counts.end());

    int threshold_best = -1;
    int strict_best = -1;
    int plus_best = -1;
    for (std::size_t i = 0; i < colorings.size(); ++i) {
        for (unsigned f = 0; f < (1U << n); ++f) {
            const int size = bits_in(f);
            const int r = count_yielders(closed, colorings[i], out.chi, f);
            if (r >= out.r_min) {
                threshold_best = std::max(threshold_best, size);
                if (counts[i] == out.r_min)
                    strict_best = std::max(strict_best, size);
            }
            if (r >= out.r_max)
                plus_best = std::max(plus_best, size);
        }
    }
    out.f_minus_threshold = threshold_best;
    out.f_minus_strict = strict_best;
    out.f_plus = plus_best;
    return out;
}

} // namespace fading::oracle
