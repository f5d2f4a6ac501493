#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fading/graph.hpp"
#include "fading/oracle.hpp"
#include "fading/rainbow.hpp"

namespace fading {

enum class Verdict { confirmed, refuted, mixed, skipped };
// asserted claims must hold; report claims are explored and any outcome is a
// result, provided every counterexample re-verifies.
enum class Posture { asserted, report };

std::string_view to_string(Verdict v);
std::string_view to_string(Posture p);

struct Counterexample {
    std::string graph6;
    // parts (graph6 of the operands), params, expected, computed, witnesses
    nlohmann::json details;
    bool reverified = false;
};

struct ClaimReport {
    std::string claim_id;
    std::string statement;
    Posture posture = Posture::asserted;
    int instances_checked = 0;
    Verdict verdict = Verdict::skipped;
    std::vector<Counterexample> counterexamples;
    nlohmann::json notes = nlohmann::json::object();

    // asserted: confirmed or skipped. report: any verdict. Either way every
    // counterexample must have re-verified.
    bool acceptable() const;
};

// Graphs the claims draw their instances from.
struct Corpus {
    std::vector<Graph> connected; // exhaustive small connected graphs
    std::vector<Graph> trees;
};

struct ClaimOptions {
    FadeMode mode = FadeMode::threshold;
    int exhaustive_n = 7;   // largest corpus graph used directly
    int max_cycle_n = 13;   // cycles C_3 .. C_max
    int max_base_n = 4;     // Mycielskian bases
    int pair_max_n = 8;     // n1 + n2 for joins
    int corona_max_n = 9;   // order of G o H
    int thorn_max_n = 9;    // order of the thorn graph
    int windmill_max_n = 9; // order of the windmill
    int uncovered_max_n = 6;
    bool use_oracle = false;
    int oracle_cap = oracle::default_cap;
    int jobs = 1;
};

// One graph6 string per non-blank line. Throws FormatError tagged with the line.
std::vector<Graph> read_graph6_file(const std::filesystem::path& file);
Corpus load_corpus(const std::filesystem::path& connected, const std::filesystem::path& trees);

std::vector<std::string> claim_ids();

// Throws ParameterError for an unknown id.
ClaimReport run_claim(std::string_view claim_id, const Corpus& corpus, const ClaimOptions& options = {});

// Rebuilds the instance from the stored graph6 strings and parameters and
// re-evaluates it with the naive oracle. True when the claim still fails
// there with identical computed values.
bool reverify(std::string_view claim_id, const Counterexample& cx, const ClaimOptions& options = {});

nlohmann::json to_json(const ClaimReport& r);
std::string to_text(const ClaimReport& r);

} // namespace fading
