#include "fading/report.hpp"

#include <sstream>

namespace fading {

nlohmann::json to_json(const Coloring& c)
{
    return c.colors;
}

nlohmann::json to_json(const FadeSet& s)
{
    return s.members();
}

nlohmann::json to_json(const FadeResult& r)
{
    return {
        {"value", r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr)},
        {"feasible", r.feasible()},
        {"mode", std::string(to_string(r.mode))},
        {"threshold", r.threshold},
        {"coloring", to_json(r.coloring)},
        {"fadeset", to_json(r.fadeset)},
    };
}

nlohmann::json to_json(const Extremum& e)
{
    return {{"value", e.value}, {"coloring", to_json(e.witness)}};
}

namespace {

int value_or_zero(const FadeResult& r)
{
    return r.value.value_or(0);
}

} // namespace

nlohmann::json summary_json(const GraphAnalysis& a, FadeMode mode, const std::string& graph6)
{
    const FadeResult& chosen = mode == FadeMode::strict ? a.f_minus_strict : a.f_minus_threshold;
    return {
        {"graph6", graph6},
        {"n", a.order},
        {"m", a.size},
        {"connected", a.connected},
        {"chi", a.chi},
        {"omega", a.omega},
        {"r_min", a.r_min.value},
        {"r_max", a.r_max.value},
        {"mode", std::string(to_string(mode))},
        {"f_minus", value_or_zero(chosen)},
        {"f_minus_threshold", value_or_zero(a.f_minus_threshold)},
        {"f_minus_strict", value_or_zero(a.f_minus_strict)},
        {"f_plus", value_or_zero(a.f_plus)},
        {"uncovered_bound_best", a.uncovered_best.value},
        {"chromatic_colorings", a.coloring_count},
        {"witnesses",
         {
             {"r_min", to_json(a.r_min)},
             {"r_max", to_json(a.r_max)},
             {"f_minus_threshold", to_json(a.f_minus_threshold)},
             {"f_minus_strict", to_json(a.f_minus_strict)},
             {"f_plus", to_json(a.f_plus)},
             {"uncovered_bound_best", to_json(a.uncovered_best)},
         }},
    };
}

std::string summary_text(const GraphAnalysis& a, FadeMode mode, const std::string& graph6)
{
    const FadeResult& chosen = mode == FadeMode::strict ? a.f_minus_strict : a.f_minus_threshold;
    std::ostringstream out;
    out << "graph6       " << graph6 << '\n'
        << "n, m         " << a.order << ", " << a.size << (a.connected ? " (connected)" : " (disconnected)") << '\n'
        << "chi, omega   " << a.chi << ", " << a.omega << '\n'
        << "r_min, r_max " << a.r_min.value << ", " << a.r_max.value << '\n'
        << "f_minus      " << value_or_zero(chosen) << " (" << to_string(mode) << "; threshold "
        << value_or_zero(a.f_minus_threshold) << ", strict " << value_or_zero(a.f_minus_strict) << ")\n"
        << "f_plus       " << value_or_zero(a.f_plus) << '\n'
        << "uncovered    " << a.uncovered_best.value << '\n'
        << "fade witness " << to_json(chosen.fadeset).dump() << " under " << to_json(chosen.coloring).dump() << '\n';
    return out.str();
}

} // namespace fading
