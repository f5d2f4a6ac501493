#include <doctest.h>

#include <cmath>
#include <set>

#include "fading/coloring.hpp"
#include "fading/errors.hpp"
#include "fading/families.hpp"
#include "fading/oracle.hpp"
#include "support.hpp"

using namespace fading;

namespace {

long long factorial(int k)
{
    long long f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

// Proper colourings of C_n with at most k colours.
long long cycle_chromatic_polynomial(int n, int k)
{
    return static_cast<long long>(std::pow(k - 1, n)) + (n % 2 == 0 ? 1 : -1) * (k - 1);
}

} // namespace

TEST_CASE("is_proper")
{
    CHECK(is_proper(cycle(4), std::vector<int>{1, 2, 1, 2}));
    CHECK_FALSE(is_proper(cycle(3), std::vector<int>{1, 1, 2}));
    CHECK(is_proper(null_graph(3), std::vector<int>{1, 1, 1}));
    CHECK_THROWS_AS(is_proper(cycle(3), std::vector<int>{1, 2}), ParameterError);
}

TEST_CASE("require_valid")
{
    CHECK_NOTHROW(require_valid(cycle(4), Coloring::from({1, 2, 1, 2})));
    CHECK_THROWS_AS(require_valid(cycle(4), Coloring::from({1, 1, 2, 2})), ContractError);
    CHECK_THROWS_AS(require_valid(cycle(4), Coloring{{1, 2, 1, 2}, 3}), ContractError);
    CHECK_THROWS_AS(require_valid(cycle(4), Coloring::from({1, 2, 1})), ContractError);
}

TEST_CASE("chromatic number")
{
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(complete_bipartite(3, 3)) == 2);
    CHECK(chromatic_number(mycielskian(cycle(5))) == 4);
    CHECK(chromatic_number(null_graph(4)) == 1);
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(chromatic_number(complete(6)) == 6);
}

TEST_CASE("clique number")
{
    CHECK(clique_number(complete(5)) == 5);
    CHECK(clique_number(cycle(7)) == 2);
    CHECK(clique_number(cycle(3)) == 3);
    CHECK(clique_number(mycielskian(cycle(5))) == 2);
    CHECK_THROWS_AS(clique_number(Graph(0)), ParameterError);
}

TEST_CASE("chi and omega agree with the oracle on the n <= 7 corpus")
{
    for (const Graph& g : testing::corpus().connected) {
        CAPTURE(g.order());
        const int chi = chromatic_number(g);
        const int omega = clique_number(g);
        CHECK(chi == oracle::chromatic_number(g));
        CHECK(omega == oracle::clique_number(g));
        CHECK(omega <= chi);
    }
}

TEST_CASE("chromatic colouring enumeration")
{
    const auto p3 = chromatic_colorings(path(3));
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].colors == std::vector<int>{1, 2, 1});

    const auto c4 = chromatic_colorings(cycle(4));
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].colors == std::vector<int>{1, 2, 1, 2});

    // (k-1)^n + (-1)^n (k-1) surjective colourings at k = 3, n = 5, quotient by 3!.
    const auto c5 = chromatic_colorings(cycle(5));
    CHECK(static_cast<long long>(c5.size()) == cycle_chromatic_polynomial(5, 3) / factorial(3));
    CHECK(c5.size() == 5);

    const auto empty = chromatic_colorings(Graph(0));
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].colors.empty());
}

TEST_CASE("enumeration invariants: canonical, proper, surjective, ordered, complete")
{
    for (const Graph& g : testing::connected_up_to(6)) {
        const int chi = chromatic_number(g);
        const auto stream = chromatic_colorings(g);
        std::set<std::vector<int>> distinct;
        for (std::size_t i = 0; i < stream.size(); ++i) {
            const Coloring& c = stream[i];
            CHECK(c.k == chi);
            CHECK(is_proper(g, c.colors));
            CHECK(is_surjective(c));
            CHECK(is_canonical(c));
            if (i > 0)
                CHECK(stream[i - 1].colors < c.colors);
            distinct.insert(c.colors);
        }
        CHECK(distinct.size() == stream.size());
        // every surjective proper chi-colouring is one canonical colouring up to chi! renamings
        const auto all = oracle::surjective_colorings(g, chi);
        CHECK(static_cast<long long>(stream.size()) * factorial(chi) == static_cast<long long>(all.size()));
    }
}

TEST_CASE("canonical counts match the cycle chromatic polynomial for C_3..C_8")
{
    for (int n = 3; n <= 8; ++n) {
        const int k = n % 2 == 0 ? 2 : 3;
        // surjective k-colourings = P(C_n, k) minus those using fewer colours;
        // for k = 2 and k = 3 on cycles, no proper colouring uses fewer than chi colours.
        const long long surjective = cycle_chromatic_polynomial(n, k);
        CHECK(static_cast<long long>(chromatic_colorings(cycle(n)).size()) == surjective / factorial(k));
    }
}

TEST_CASE("convention colouring")
{
    CHECK(convention_coloring(cycle(4)).colors == std::vector<int>{1, 2, 1, 2});
    CHECK(convention_coloring(cycle(5)).colors == std::vector<int>{1, 2, 1, 2, 3});
    CHECK(convention_coloring(complete(4)).colors == std::vector<int>{1, 2, 3, 4});
    CHECK(convention_coloring(path(4), IndependentSetRule::first_maximal).colors == std::vector<int>{1, 2, 1, 2});

    for (const Graph& g : testing::corpus().connected) {
        for (auto rule : {IndependentSetRule::maximum_lexmin, IndependentSetRule::first_maximal}) {
            const Coloring c = convention_coloring(g, rule);
            CHECK(is_proper(g, c.colors));
            CHECK(is_surjective(c));
            CHECK(c.k >= chromatic_number(g));
        }
    }
}
