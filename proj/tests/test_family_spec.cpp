#include <doctest.h>

#include <string>

#include "fading/errors.hpp"
#include "fading/families.hpp"
#include "fading/family_spec.hpp"
#include "fading/graph_io.hpp"

using namespace fading;

TEST_CASE("named families")
{
    CHECK(build_family("cycle:7") == cycle(7));
    CHECK(build_family("complete_bipartite:2,3") == complete_bipartite(2, 3));
    CHECK(build_family("star:4") == star(4));
    CHECK(build_family("null:3") == null_graph(3));
    CHECK(build_family("g6:Dhc") == cycle(5));
}

TEST_CASE("nested operators")
{
    CHECK(build_family("mycielskian(complete:2)") == mycielskian(complete(2)));
    const std::vector<int> thorns{1, 0, 2};
    CHECK(build_family("thorn(cycle:3;1,0,2)") == thorn(cycle(3), thorns));
    CHECK(build_family("join(path:2, cycle:4)") == join(path(2), cycle(4)));
    CHECK(build_family("corona(cycle:3,complete:1)") == corona(cycle(3), complete(1)));
    CHECK(build_family("windmill(mycielskian(complete:2);3)") == windmill(mycielskian(complete(2)), 3));
}

TEST_CASE("malformed specs")
{
    for (std::string bad : {"", "cycle", "cycle:", "cycle:x", "hexagon:6", "join(cycle:3)", "thorn(cycle:3;1,1,1,1)",
                            "windmill(cycle:3;0)", "cycle:3)", "g6:~~"}) {
        CAPTURE(bad);
        CHECK_THROWS(build_family(bad));
    }
}
