#include <doctest.h>

#include <random>

#include "fading/errors.hpp"
#include "fading/families.hpp"
#include "fading/oracle.hpp"
#include "fading/rainbow.hpp"
#include "support.hpp"

using namespace fading;

namespace {

Invariants fast_invariants(const Graph& g)
{
    const GraphAnalysis a = analyze(g);
    return {a.chi, a.omega, a.r_min.value, a.r_max.value, *a.f_minus_threshold.value, *a.f_minus_strict.value,
            *a.f_plus.value};
}

} // namespace

TEST_CASE("fast path matches the oracle on every connected graph up to seven vertices")
{
    for (const Graph& g : testing::connected_up_to(7))
        CHECK(fast_invariants(g) == oracle::invariants(g));
}

TEST_CASE("fast path matches the oracle on random graphs of eight and nine vertices")
{
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = trial < 8 ? 8 : 9;
        const Graph g = testing::random_connected(rng, n, 0.45);
        CHECK(fast_invariants(g) == oracle::invariants(g));
    }
}

TEST_CASE("oracle fading agrees per colouring")
{
    for (const Graph& g : testing::connected_up_to(6)) {
        for (const Coloring& c : chromatic_colorings(g)) {
            const int r = rainbow_vertices(g, c).count();
            for (int t : {0, 1, r}) {
                const FadeResult fast = fading_for_coloring(g, c, t);
                CHECK(fast.value.value_or(-1) == oracle::fading_for_coloring(g, c.colors, t));
            }
            CHECK(uncovered_bound(g, c) == oracle::uncovered_bound(g, c.colors));
        }
    }
}

TEST_CASE("oracle refuses large graphs")
{
    CHECK_THROWS_AS(oracle::invariants(cycle(10)), OracleRefusal);
    CHECK(oracle::invariants(cycle(10), 10).f_minus_threshold == *f_minus(cycle(10)).value);
}

TEST_CASE("oracle isomorphism")
{
    CHECK(oracle::isomorphic(mycielskian(complete(2)), cycle(5)));
    CHECK_FALSE(oracle::isomorphic(path(5), cycle(5)));
    CHECK_FALSE(oracle::isomorphic(path(4), star(3)));
}
