#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "fading/claims.hpp"
#include "fading/errors.hpp"
#include "fading/families.hpp"
#include "fading/graph_io.hpp"
#include "fading/scan.hpp"
#include "support.hpp"

using namespace fading;

TEST_CASE("registry lists every claim once")
{
    auto ids = claim_ids();
    CHECK(ids.size() == 16);
    std::sort(ids.begin(), ids.end());
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
    CHECK_THROWS_AS(run_claim("NOT-A-CLAIM", testing::corpus()), ParameterError);
}

TEST_CASE("asserted cycle and bipartite claims hold")
{
    ClaimOptions options;
    options.exhaustive_n = 6;
    for (const char* id : {"ODD-CYCLE-FMINUS", "ODD-CYCLE-FPLUS", "BIPARTITE-ZERO", "K1-JOIN"}) {
        const ClaimReport r = run_claim(id, testing::corpus(), options);
        CAPTURE(id);
        CHECK(r.verdict == Verdict::confirmed);
        CHECK(r.instances_checked > 0);
        CHECK(r.acceptable());
    }
}

TEST_CASE("mycielskian claim exposes the inconsistent prediction")
{
    ClaimOptions options;
    options.max_base_n = 2;
    const ClaimReport r = run_claim("MYCIELSKI", testing::corpus(), options);
    CHECK(r.posture == Posture::report);
    CHECK(r.verdict != Verdict::confirmed);
    REQUIRE_FALSE(r.counterexamples.empty());
    for (const Counterexample& cx : r.counterexamples) {
        CHECK(cx.reverified);
        CHECK(reverify("MYCIELSKI", cx, options));
    }
    const auto& note = r.notes.at("inconsistency");
    CHECK(note.at("isomorphic_to_cycle5") == true);
    CHECK(note.at("adjudicated_f_minus") == 0);
    CHECK(r.acceptable());
}

TEST_CASE("claim reports serialise")
{
    ClaimOptions options;
    options.max_cycle_n = 9;
    const ClaimReport r = run_claim("ODD-CYCLE-FMINUS", testing::corpus(), options);
    const auto j = to_json(r);
    CHECK(j.at("claim_id") == "ODD-CYCLE-FMINUS");
    CHECK(j.at("verdict") == "confirmed");
    CHECK(to_text(r).find("ODD-CYCLE-FMINUS") != std::string::npos);
}

TEST_CASE("scan skips, classifies and reconciles")
{
    const std::vector<std::string> lines{write_graph6(cycle(5)), write_graph6(complete(4)),
                                         write_graph6(disjoint_union(complete(2), complete(2))), "",
                                         "!!bad", write_graph6(mycielskian(complete(2)))};
    const ScanResult r = scan_conjecture(lines);
    CHECK(r.summary.scanned == 4);
    CHECK(r.summary.skipped_odd_cycle == 2);
    CHECK(r.summary.skipped_disconnected == 1);
    CHECK(r.summary.hypothesis_failing == 1);
    CHECK(r.summary.parse_errors == 1);
    REQUIRE(r.errors.size() == 1);
    CHECK(r.errors[0].line == 5);
    CHECK(r.summary.reconciles());
}

TEST_CASE("scan of small connected graphs reconciles and hits re-verify")
{
    std::vector<std::string> lines;
    for (const Graph& g : testing::connected_up_to(6))
        lines.push_back(write_graph6(g));
    ScanOptions options;
    options.jobs = 4;
    const ScanResult r = scan_conjecture(lines, options);
    CHECK(r.summary.scanned == lines.size());
    CHECK(r.summary.reconciles());
    for (const ConjectureHit& hit : r.hits) {
        CHECK(hit.reverified);
        CHECK(hit.omega < hit.chi);
        CHECK(hit.f_plus == 0);
    }
    CHECK(std::is_sorted(r.hits.begin(), r.hits.end(),
                         [](const ConjectureHit& a, const ConjectureHit& b) { return a.graph6 < b.graph6; }));

    std::istringstream in(lines[0] + "\n" + lines[1] + "\n");
    CHECK(scan_conjecture(in).summary.scanned == 2);
}
