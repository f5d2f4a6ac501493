#include "fading/scan.hpp"

#include <algorithm>
#include <sstream>

#include "fading/coloring.hpp"
#include "fading/errors.hpp"
#include "fading/graph_io.hpp"
#include "fading/parallel.hpp"
#include "fading/report.hpp"

namespace fading {

bool ScanSummary::reconciles() const
{
    return skipped == skipped_disconnected + skipped_odd_cycle + skipped_too_large &&
           scanned == skipped + hypothesis_failing + hypothesis_satisfying && hits <= hypothesis_satisfying;
}

namespace {

enum class Outcome { parse_error, disconnected, odd_cycle, too_large, failing, satisfying };

struct LineResult {
    Outcome outcome = Outcome::parse_error;
    std::string message;
    std::optional<ConjectureHit> hit;
};

LineResult examine(const std::string& line, const ScanOptions& o)
{
    LineResult out;
    Graph g;
    try {
        g = parse_graph6(line);
    } catch (const std::exception& e) {
        out.message = e.what();
        return out;
    }
    if (g.order() == 0 || !is_connected(g)) {
        out.outcome = Outcome::disconnected;
        return out;
    }
    if (is_odd_cycle(g)) {
        out.outcome = Outcome::odd_cycle;
        return out;
    }
    if (o.max_n > 0 && g.order() > o.max_n) {
        out.outcome = Outcome::too_large;
        return out;
    }

    const int omega = o.use_oracle ? oracle::clique_number(g, o.oracle_cap) : clique_number(g);
    const int chi = o.use_oracle ? oracle::chromatic_number(g, o.oracle_cap) : chromatic_number(g);
    if (omega >= chi) {
        out.outcome = Outcome::failing;
        return out;
    }
    out.outcome = Outcome::satisfying;

    int fplus = 0;
    nlohmann::json witness;
    if (o.use_oracle) {
        fplus = oracle::invariants(g, o.oracle_cap).f_plus;
    } else {
        const FadeResult r = f_plus(g);
        fplus = r.value.value_or(-1);
        witness = to_json(r);
    }
    if (fplus == 0)
        out.hit = ConjectureHit{write_graph6(g), omega, chi, fplus, false, witness};
    return out;
}

} // namespace

ScanResult scan_conjecture(const std::vector<std::string>& lines, const ScanOptions& options)
{
    std::vector<std::size_t> numbered;
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].find_first_not_of(" \t\r") != std::string::npos)
            numbered.push_back(i);

    auto results = parallel_map(numbered.size(), options.jobs,
                                [&](std::size_t j) { return examine(lines[numbered[j]], options); });

    ScanResult r;
    r.mode = options.mode;
    for (std::size_t j = 0; j < results.size(); ++j) {
        LineResult& lr = results[j];
        if (lr.outcome == Outcome::parse_error) {
            ++r.summary.parse_errors;
            r.errors.push_back({numbered[j] + 1, lr.message});
            continue;
        }
        ++r.summary.scanned;
        switch (lr.outcome) {
        case Outcome::disconnected:
            ++r.summary.skipped_disconnected;
            break;
        case Outcome::odd_cycle:
            ++r.summary.skipped_odd_cycle;
            break;
        case Outcome::too_large:
            ++r.summary.skipped_too_large;
            break;
        case Outcome::failing:
            ++r.summary.hypothesis_failing;
            break;
        case Outcome::satisfying:
            ++r.summary.hypothesis_satisfying;
            break;
        case Outcome::parse_error:
            break;
        }
        if (lr.hit)
            r.hits.push_back(std::move(*lr.hit));
    }
    r.summary.skipped = r.summary.skipped_disconnected + r.summary.skipped_odd_cycle + r.summary.skipped_too_large;
    r.summary.hits = r.hits.size();

    for (ConjectureHit& hit : r.hits)
        hit.reverified = reverify(hit, options.oracle_cap);
    std::sort(r.hits.begin(), r.hits.end(), [](const auto& a, const auto& b) { return a.graph6 < b.graph6; });
    return r;
}

ScanResult scan_conjecture(std::istream& in, const ScanOptions& options)
{
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    return scan_conjecture(lines, options);
}

bool reverify(const ConjectureHit& hit, int oracle_cap)
{
    const Graph g = parse_graph6(hit.graph6);
    if (g.order() > oracle_cap || !oracle::is_connected(g))
        return false;
    const auto edges = g.edges();
    std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
    for (auto [u, v] : edges) {
        ++degree[u];
        ++degree[v];
    }
    const bool odd_cycle =
        g.order() % 2 == 1 && std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
    if (odd_cycle)
        return false;
    const Invariants inv = oracle::invariants(g, oracle_cap);
    return inv.omega == hit.omega && inv.chi == hit.chi && inv.f_plus == hit.f_plus && inv.omega < inv.chi &&
           inv.f_plus == 0;
}

nlohmann::json to_json(const ScanResult& r)
{
    nlohmann::json hits = nlohmann::json::array();
    for (const ConjectureHit& h : r.hits)
        hits.push_back({{"graph6", h.graph6},
                        {"omega", h.omega},
                        {"chi", h.chi},
                        {"f_plus", h.f_plus},
                        {"reverified", h.reverified},
                        {"witness", h.witness}});
    nlohmann::json errors = nlohmann::json::array();
    for (const ScanError& e : r.errors)
        errors.push_back({{"line", e.line}, {"message", e.message}});
    const ScanSummary& s = r.summary;
    return {{"mode", std::string(to_string(r.mode))},
            {"hits", hits},
            {"errors", errors},
            {"summary",
             {{"scanned", s.scanned},
              {"parse_errors", s.parse_errors},
              {"skipped", s.skipped},
              {"skipped_disconnected", s.skipped_disconnected},
              {"skipped_odd_cycle", s.skipped_odd_cycle},
              {"skipped_too_large", s.skipped_too_large},
              {"hypothesis_failing", s.hypothesis_failing},
              {"hypothesis_satisfying", s.hypothesis_satisfying},
              {"hits", s.hits},
              {"reconciles", s.reconciles()}}}};
}

std::string to_text(const ScanResult& r)
{
    const ScanSummary& s = r.summary;
    std::ostringstream out;
    out << "scanned " << s.scanned << ": skipped " << s.skipped << " (disconnected " << s.skipped_disconnected
        << ", odd cycle " << s.skipped_odd_cycle << ", too large " << s.skipped_too_large << "), hypothesis failing "
        << s.hypothesis_failing << ", hypothesis satisfying " << s.hypothesis_satisfying << ", hits " << s.hits
        << ", parse errors " << s.parse_errors << '\n';
    for (const ConjectureHit& h : r.hits)
        out << "hit " << h.graph6 << " omega " << h.omega << " chi " << h.chi << " f+ " << h.f_plus
            << (h.reverified ? " (re-verified)" : " (NOT re-verified)") << '\n';
    for (const ScanError& e : r.errors)
        out << "line " << e.line << ": " << e.message << '\n';
    return out.str();
}

} // namespace fading
