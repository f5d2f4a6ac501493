#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fading/oracle.hpp"
#include "fading/rainbow.hpp"

namespace fading {

// A connected graph, not an odd cycle, with omega < chi and yet f+ = 0.
struct ConjectureHit {
    std::string graph6;
    int omega = 0;
    int chi = 0;
    int f_plus = 0;
    bool reverified = false;
    nlohmann::json witness;
};

// scanned = skipped + hypothesis_failing + hypothesis_satisfying, where
// skipped = skipped_disconnected + skipped_odd_cycle + skipped_too_large.
struct ScanSummary {
    std::size_t scanned = 0;
    std::size_t parse_errors = 0;
    std::size_t skipped = 0;
    std::size_t skipped_disconnected = 0;
    std::size_t skipped_odd_cycle = 0;
    std::size_t skipped_too_large = 0;
    std::size_t hypothesis_failing = 0;
    std::size_t hypothesis_satisfying = 0;
    std::size_t hits = 0;

    bool reconciles() const;
};

struct ScanError {
    std::size_t line = 0;
    std::string message;
};

struct ScanOptions {
    FadeMode mode = FadeMode::threshold; // recorded; f+ does not depend on it
    bool use_oracle = false;
    int max_n = 0;                       // 0: no limit
    int oracle_cap = oracle::default_cap;
    int jobs = 1;
};

struct ScanResult {
    std::vector<ConjectureHit> hits; // sorted by graph6
    ScanSummary summary;
    std::vector<ScanError> errors;
    FadeMode mode = FadeMode::threshold;
};

// Blank lines are ignored; a line that fails to parse is recorded and the
// scan carries on.
ScanResult scan_conjecture(const std::vector<std::string>& lines, const ScanOptions& options = {});
ScanResult scan_conjecture(std::istream& in, const ScanOptions& options = {});

// Recomputes connectivity, odd-cycle exclusion, omega, chi and f+ with the
// naive oracle and checks they match the hit and still contradict the conjecture.
bool reverify(const ConjectureHit& hit, int oracle_cap = oracle::default_cap);

nlohmann::json to_json(const ScanResult& r);
std::string to_text(const ScanResult& r);

} // namespace fading
