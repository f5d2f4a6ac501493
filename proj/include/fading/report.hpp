#pragma once

#include <string>

#include <json.hpp>

#include "fading/coloring.hpp"
#include "fading/rainbow.hpp"

namespace fading {

// 1-based colours in vertex order.
nlohmann::json to_json(const Coloring& c);
nlohmann::json to_json(const FadeSet& s);
// {value, feasible, mode, threshold, coloring, fadeset}; value is null when infeasible.
nlohmann::json to_json(const FadeResult& r);
nlohmann::json to_json(const Extremum& e);

// Flat invariant summary used by the CLI. f_minus follows `mode`; both modes
// are always present as well.
nlohmann::json summary_json(const GraphAnalysis& a, FadeMode mode, const std::string& graph6);
std::string summary_text(const GraphAnalysis& a, FadeMode mode, const std::string& graph6);

} // namespace fading
