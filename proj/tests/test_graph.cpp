#include <doctest.h>

#include <random>

#include "fading/errors.hpp"
#include "fading/families.hpp"
#include "fading/graph_io.hpp"
#include "fading/oracle.hpp"
#include "support.hpp"

using namespace fading;

namespace {

bool satisfies_invariants(const Graph& g)
{
    for (int v = 0; v < g.order(); ++v) {
        if (g.neighbours(v).contains(v))
            return false;
        if (!g.neighbours(v).subset_of(g.vertices()))
            return false;
        for (int w : g.neighbours(v))
            if (!g.neighbours(w).contains(v))
                return false;
    }
    return true;
}

bool regular(const Graph& g, int d)
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != d)
            return false;
    return true;
}

} // namespace

TEST_CASE("closed neighbourhood")
{
    CHECK(complete(3).closed_neighbourhood(0) == VertexSet{0, 1, 2});
    CHECK(cycle(5).closed_neighbourhood(0) == VertexSet{4, 0, 1});
    CHECK(null_graph(3).closed_neighbourhood(1) == VertexSet{1});
    CHECK_THROWS_AS(cycle(5).closed_neighbourhood(5), RangeError);
    CHECK_THROWS_AS(cycle(5).closed_neighbourhood(-1), RangeError);
}

TEST_CASE("graph construction rejects loops and bad ids, ignores duplicates")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), RangeError);
    const Graph g(4, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.size() == 1);
}

TEST_CASE("standard families")
{
    const Graph c5 = cycle(5);
    CHECK(c5.order() == 5);
    CHECK(c5.size() == 5);
    CHECK(regular(c5, 2));
    CHECK(complete(4).size() == 6);
    const Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.size() == 6);
    CHECK(is_bipartite(k23));
    CHECK(star(3) == complete_bipartite(1, 3));
    CHECK(path(4).size() == 3);

    CHECK_THROWS_AS(cycle(2), ParameterError);
    CHECK_THROWS_AS(complete(0), ParameterError);
    CHECK_THROWS_AS(null_graph(0), ParameterError);
    CHECK_THROWS_AS(complete_bipartite(0, 2), ParameterError);
}

TEST_CASE("predicates")
{
    CHECK(is_connected(cycle(6)));
    CHECK_FALSE(is_connected(null_graph(2)));
    CHECK(is_odd_cycle(cycle(7)));
    CHECK_FALSE(is_odd_cycle(cycle(6)));
    CHECK_FALSE(is_odd_cycle(disjoint_union(cycle(3), cycle(3))));
    CHECK_FALSE(is_bipartite(cycle(5)));
}

TEST_CASE("mycielskian")
{
    const Graph mu_k2 = mycielskian(complete(2));
    CHECK(mu_k2.order() == 5);
    CHECK(mu_k2.size() == 5);
    CHECK(is_connected(mu_k2));
    CHECK(regular(mu_k2, 2));
    CHECK(oracle::isomorphic(mu_k2, cycle(5)));

    const Graph grotzsch = mycielskian(cycle(5));
    CHECK(grotzsch.order() == 11);
    CHECK(grotzsch.size() == 20);

    const Graph mu_n1 = mycielskian(null_graph(1));
    CHECK(mu_n1.order() == 3);
    CHECK(mu_n1.edges() == std::vector<Edge>{{1, 2}});
}

TEST_CASE("thorn")
{
    const std::vector<int> ones{1, 1, 1};
    const Graph t = thorn(cycle(3), ones);
    CHECK(t.order() == 6);
    CHECK(t.size() == 6);
    for (int v = 3; v < 6; ++v)
        CHECK(t.degree(v) == 1);

    const std::vector<int> two_zero{2, 0};
    const Graph k2 = thorn(complete(2), two_zero);
    CHECK(k2.order() == 4);
    CHECK(k2.degree(0) == 3);

    const std::vector<int> too_long{1, 1, 1};
    CHECK_THROWS_AS(thorn(complete(2), too_long), ParameterError);
    const std::vector<int> negative{-1};
    CHECK_THROWS_AS(thorn(complete(2), negative), ParameterError);
}

TEST_CASE("join, corona and windmill")
{
    const Graph wheel = join(Graph(1), cycle(5));
    CHECK(wheel.order() == 6);
    CHECK(wheel.size() == 10);
    CHECK(join(null_graph(2), null_graph(3)) == complete_bipartite(2, 3));
    CHECK(join(complete(2), complete(2)) == complete(4));

    CHECK(oracle::isomorphic(corona(complete(2), Graph(1)), path(4)));
    CHECK(corona(Graph(1), cycle(3)) == complete(4));
    const std::vector<int> ones{1, 1, 1};
    CHECK(corona(cycle(3), null_graph(1)) == thorn(cycle(3), ones));

    const Graph friendship = windmill(complete(2), 2);
    CHECK(friendship.order() == 5);
    CHECK(friendship.size() == 6);
    CHECK(windmill(cycle(3), 1) == complete(4));
    CHECK(windmill(Graph(1), 3) == star(3));
    CHECK_THROWS_AS(windmill(cycle(3), 0), ParameterError);
}

TEST_CASE("operator edge counts over small corpus graphs")
{
    const auto graphs = testing::connected_up_to(4);
    for (const Graph& g : graphs) {
        CHECK(satisfies_invariants(g));
        const Graph mu = mycielskian(g);
        CHECK(satisfies_invariants(mu));
        CHECK(mu.size() == 3 * g.size() + g.order());
        for (const Graph& h : graphs) {
            const Graph j = join(g, h);
            CHECK(satisfies_invariants(j));
            CHECK(j.size() == g.size() + h.size() + g.order() * h.order());
            const Graph c = corona(g, h);
            CHECK(satisfies_invariants(c));
            CHECK(c.order() == g.order() * (1 + h.order()));
            CHECK(c.size() == g.size() + g.order() * (h.size() + h.order()));
        }
    }
}

TEST_CASE("graph6 encoding")
{
    CHECK(write_graph6(cycle(5)) == "Dhc");
    CHECK(parse_graph6(write_graph6(complete(4))) == complete(4));
    CHECK(parse_graph6(">>graph6<<Dhc\n") == cycle(5));
    CHECK(parse_graph6("?") == Graph(0));

    const Graph big = path(63);
    const std::string code = write_graph6(big);
    CHECK(code[0] == '~');
    CHECK(parse_graph6(code) == big);
}

TEST_CASE("graph6 errors carry byte offsets")
{
    CHECK_THROWS_AS(parse_graph6(""), FormatError);
    try {
        parse_graph6("Dh");
        FAIL("short input accepted");
    } catch (const FormatError& e) {
        CHECK(e.position() == 2);
    }
    try {
        parse_graph6("D h");
        FAIL("bad character accepted");
    } catch (const FormatError& e) {
        CHECK(e.position() == 1);
    }
    // C_5 uses 10 of 12 bits; setting a padding bit must be rejected.
    try {
        parse_graph6("Dhd");
        FAIL("nonzero padding accepted");
    } catch (const FormatError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("graph6 round trip on random graphs up to order 8")
{
    std::mt19937 rng(6);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + trial % 8;
        std::bernoulli_distribution coin(0.45);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        const Graph g(n, edges);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
    for (const Graph& g : testing::corpus().connected)
        CHECK(parse_graph6(write_graph6(g)) == g);
}

TEST_CASE("edge list parsing")
{
    CHECK(parse_edge_list("3\n0 1\n1 2\n2 0") == cycle(3));
    CHECK(parse_edge_list("# triangle\n3\n\n0 1\n1 2\n2 0\n") == cycle(3));
    const Graph g = parse_edge_list("4\n0 1\n0 1");
    CHECK(g.order() == 4);
    CHECK(g.size() == 1);
    CHECK(parse_edge_list(write_edge_list(cycle(6))) == cycle(6));

    auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_edge_list(text);
        } catch (const FormatError& e) {
            return e.position();
        }
        return 0;
    };
    CHECK(line_of("2\n0 0") == 2);
    CHECK(line_of("2\n0 1\n0 2") == 3);
    CHECK(line_of("2\n0 x") == 2);
    CHECK(line_of("two") == 1);
    CHECK_THROWS_AS(parse_edge_list(""), FormatError);
}

TEST_CASE("relabel")
{
    const std::vector<int> perm{2, 0, 1, 4, 3};
    const Graph g = relabel(cycle(5), perm);
    CHECK(g.size() == 5);
    CHECK(oracle::isomorphic(g, cycle(5)));
    const std::vector<int> bad{0, 0, 1, 2, 3};
    CHECK_THROWS_AS(relabel(cycle(5), bad), ParameterError);
}
