#include "fading/claims.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "fading/coloring.hpp"
#include "fading/errors.hpp"
#include "fading/families.hpp"
#include "fading/graph_io.hpp"
#include "fading/report.hpp"

namespace fading {

using nlohmann::json;

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::confirmed:
        return "confirmed";
    case Verdict::refuted:
        return "refuted";
    case Verdict::mixed:
        return "mixed";
    case Verdict::skipped:
        return "skipped";
    }
    return "?";
}

std::string_view to_string(Posture p)
{
    return p == Posture::asserted ? "asserted" : "report";
}

bool ClaimReport::acceptable() const
{
    const bool witnesses_ok =
        std::all_of(counterexamples.begin(), counterexamples.end(), [](const auto& c) { return c.reverified; });
    if (!witnesses_ok)
        return false;
    return posture == Posture::report || verdict == Verdict::confirmed || verdict == Verdict::skipped;
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        throw ParameterError("cannot open " + file.string());
    std::vector<Graph> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const FormatError& e) {
            throw FormatError(file.string() + ":" + std::to_string(line_no) + ": " + e.what(), line_no);
        }
    }
    return out;
}

Corpus load_corpus(const std::filesystem::path& connected, const std::filesystem::path& trees)
{
    return {read_graph6_file(connected), read_graph6_file(trees)};
}

namespace {

int f_minus_of(const Invariants& inv, FadeMode mode)
{
    return mode == FadeMode::strict ? inv.f_minus_strict : inv.f_minus_threshold;
}

json invariants_json(const Invariants& inv)
{
    return {{"chi", inv.chi},
            {"omega", inv.omega},
            {"r_min", inv.r_min},
            {"r_max", inv.r_max},
            {"f_minus_threshold", inv.f_minus_threshold},
            {"f_minus_strict", inv.f_minus_strict},
            {"f_plus", inv.f_plus}};
}

struct ColoringCheck {
    std::vector<int> colors;
    std::vector<int> yielders;
    int bound = 0;
    int fading = 0;
};

// Source of ground values for claim evaluation: the fast solvers or the
// naive oracle. Invariants are cached per graph6 string.
class Engine {
public:
    virtual ~Engine() = default;

    const Invariants& invariants(const Graph& g)
    {
        const std::string key = write_graph6(g);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, compute(g)).first;
        return it->second;
    }

    virtual json witnesses(const Graph&) { return nullptr; }
    virtual std::vector<ColoringCheck> coloring_checks(const Graph& g) = 0;
    virtual int rainbow_count(const Graph& g, const std::vector<int>& colors) = 0;
    virtual bool within_reach(const Graph&) const { return true; }

protected:
    virtual Invariants compute(const Graph& g) = 0;

private:
    std::map<std::string, Invariants> cache_;
};

class FastEngine final : public Engine {
public:
    explicit FastEngine(int jobs) : jobs_(jobs) {}

    json witnesses(const Graph& g) override
    {
        const GraphAnalysis& a = analysis(g);
        return {{"r_min", to_json(a.r_min)},
                {"r_max", to_json(a.r_max)},
                {"f_minus_threshold", to_json(a.f_minus_threshold)},
                {"f_minus_strict", to_json(a.f_minus_strict)},
                {"f_plus", to_json(a.f_plus)}};
    }

    std::vector<ColoringCheck> coloring_checks(const Graph& g) override
    {
        std::vector<ColoringCheck> out;
        for (const Coloring& c : chromatic_colorings(g)) {
            const RainbowReport rep = rainbow_vertices(g, c);
            out.push_back({c.colors, rep.yielders.members(), uncovered_bound(g, c),
                           fading_for_coloring(g, c, rep.count()).value.value_or(-1)});
        }
        return out;
    }

    int rainbow_count(const Graph& g, const std::vector<int>& colors) override
    {
        return rainbow_vertices(g, Coloring::from(colors)).count();
    }

protected:
    Invariants compute(const Graph& g) override
    {
        const GraphAnalysis& a = analysis(g);
        return {a.chi,
                a.omega,
                a.r_min.value,
                a.r_max.value,
                a.f_minus_threshold.value.value_or(-1),
                a.f_minus_strict.value.value_or(-1),
                a.f_plus.value.value_or(-1)};
    }

private:
    const GraphAnalysis& analysis(const Graph& g)
    {
        const std::string key = write_graph6(g);
        auto it = analyses_.find(key);
        if (it == analyses_.end())
            it = analyses_.emplace(key, analyze(g, jobs_)).first;
        return it->second;
    }

    int jobs_;
    std::map<std::string, GraphAnalysis> analyses_;
};

class OracleEngine final : public Engine {
public:
    explicit OracleEngine(int cap) : cap_(cap) {}

    // One check per colour-class partition, reported in canonical colour
    // order so the output lines up with the fast engine's.
    std::vector<ColoringCheck> coloring_checks(const Graph& g) override
    {
        std::map<std::vector<int>, ColoringCheck> by_partition;
        const int chi = invariants(g).chi;
        for (const auto& colors : oracle::surjective_colorings(g, chi, cap_)) {
            std::vector<int> canon = relabel_by_first_use(colors);
            if (by_partition.contains(canon))
                continue;
            ColoringCheck check;
            for (int u = 0; u < g.order(); ++u)
                if (yields(g, canon, chi, u))
                    check.yielders.push_back(u);
            const int r = oracle::rainbow_count(g, canon, std::vector<bool>(canon.size(), false));
            check.bound = oracle::uncovered_bound(g, canon);
            check.fading = oracle::fading_for_coloring(g, canon, r, cap_);
            check.colors = canon;
            by_partition.emplace(std::move(canon), std::move(check));
        }
        std::vector<ColoringCheck> out;
        for (auto& [key, check] : by_partition)
            out.push_back(std::move(check));
        return out;
    }

    int rainbow_count(const Graph& g, const std::vector<int>& colors) override
    {
        return oracle::rainbow_count(g, colors, std::vector<bool>(colors.size(), false));
    }

    bool within_reach(const Graph& g) const override { return g.order() <= cap_; }

protected:
    Invariants compute(const Graph& g) override { return oracle::invariants(g, cap_); }

private:
    static std::vector<int> relabel_by_first_use(const std::vector<int>& colors)
    {
        std::map<int, int> rename;
        std::vector<int> out;
        for (int c : colors) {
            auto it = rename.emplace(c, static_cast<int>(rename.size()) + 1).first;
            out.push_back(it->second);
        }
        return out;
    }

    static bool yields(const Graph& g, const std::vector<int>& colors, int k, int u)
    {
        std::set<int> seen{colors[u]};
        for (int w : g.neighbours(u))
            seen.insert(colors[w]);
        return static_cast<int>(seen.size()) == k;
    }

    int cap_;
};

struct Instance {
    Graph graph;
    std::map<std::string, Graph> parts;
    json params = json::object();
};

struct Evaluation {
    bool holds = true;
    json expected;
    json computed;
};

using InstanceSource = std::function<std::vector<Instance>(const Corpus&, const ClaimOptions&, Engine&)>;
using Evaluator = std::function<Evaluation(const Instance&, const ClaimOptions&, Engine&)>;

struct ClaimDef {
    std::string_view id;
    Posture posture;
    std::string_view statement;
    InstanceSource instances;
    Evaluator evaluate;
};

std::vector<Graph> up_to(const std::vector<Graph>& graphs, int max_n)
{
    std::vector<Graph> out;
    for (const Graph& g : graphs)
        if (g.order() <= max_n)
            out.push_back(g);
    return out;
}

Instance single(Graph g)
{
    return Instance{std::move(g), {}, json::object()};
}

std::vector<Instance> corpus_instances(const Corpus& corpus, const ClaimOptions& o)
{
    std::vector<Instance> out;
    for (const Graph& g : up_to(corpus.connected, o.exhaustive_n))
        out.push_back(single(g));
    return out;
}

std::vector<Instance> odd_cycles(const ClaimOptions& o)
{
    std::vector<Instance> out;
    for (int n = 3; n <= o.max_cycle_n; n += 2) {
        Instance inst = single(cycle(n));
        inst.params["n"] = n;
        out.push_back(std::move(inst));
    }
    return out;
}

// Small connected graphs for pair constructions, plus C_5.
std::vector<Graph> pair_suite(const Corpus& corpus)
{
    std::vector<Graph> suite = up_to(corpus.connected, 4);
    suite.push_back(cycle(5));
    return suite;
}

std::vector<Instance> bipartite_instances(const Corpus& corpus, const ClaimOptions& o)
{
    std::vector<Instance> out;
    std::set<std::string> seen;
    auto add = [&](Graph g) {
        if (seen.insert(write_graph6(g)).second)
            out.push_back(single(std::move(g)));
    };
    for (const Graph& g : up_to(corpus.connected, o.exhaustive_n))
        if (is_bipartite(g))
            add(g);
    for (const Graph& g : corpus.trees)
        add(g);
    for (int n = 4; n <= std::min(o.max_cycle_n, 12); n += 2)
        add(cycle(n));
    for (int a = 1; a <= 4; ++a)
        for (int b = a; a + b <= 8; ++b)
            add(complete_bipartite(a, b));
    return out;
}

Evaluation eval_bipartite(const Instance& inst, const ClaimOptions&, Engine& e)
{
    const Invariants& inv = e.invariants(inst.graph);
    Evaluation ev;
    ev.expected = {{"f_minus", 0}, {"f_plus", 0}};
    ev.computed = {{"f_minus_threshold", inv.f_minus_threshold},
                   {"f_minus_strict", inv.f_minus_strict},
                   {"f_plus", inv.f_plus}};
    ev.holds = inv.f_minus_threshold == 0 && inv.f_minus_strict == 0 && inv.f_plus == 0;
    return ev;
}

Evaluation eval_odd_cycle_minus(const Instance& inst, const ClaimOptions& o, Engine& e)
{
    const int n = inst.graph.order();
    const Invariants& inv = e.invariants(inst.graph);
    const int expected = n <= 5 ? 0 : n - 5;
    Evaluation ev;
    ev.expected = {{"f_minus", expected}};
    ev.computed = {{"f_minus_threshold", inv.f_minus_threshold}, {"f_minus_strict", inv.f_minus_strict}};
    ev.holds = f_minus_of(inv, o.mode) == expected;
    return ev;
}

Evaluation eval_odd_cycle_plus(const Instance& inst, const ClaimOptions&, Engine& e)
{
    const Invariants& inv = e.invariants(inst.graph);
    Evaluation ev;
    ev.expected = {{"f_plus", 0}};
    ev.computed = {{"f_plus", inv.f_plus}};
    ev.holds = inv.f_plus == 0;
    return ev;
}

std::vector<Instance> rplus_cycles(const ClaimOptions& o)
{
    std::vector<Instance> out;
    for (int n = 7; n <= o.max_cycle_n; n += 2) {
        Instance inst = single(cycle(n));
        inst.params["n"] = n;
        out.push_back(std::move(inst));
    }
    return out;
}

Evaluation eval_rplus(const Instance& inst, const ClaimOptions&, Engine& e)
{
    const int n = inst.graph.order();
    const int ell = (n % 4 == 3) ? (n - 7) / 4 : (n - 9) / 4;
    const int expected = 3 + 2 * (ell + 1);
    const Invariants& inv = e.invariants(inst.graph);
    Evaluation ev;
    ev.expected = {{"r_max", expected}, {"ell", ell}};
    ev.computed = {{"r_max", inv.r_max}};
    ev.holds = inv.r_max == expected;
    return ev;
}

std::vector<Instance> mycielski_instances(const Corpus& corpus, const ClaimOptions& o)
{
    std::vector<Instance> out;
    for (const Graph& base : up_to(corpus.connected, o.max_base_n)) {
        Instance inst = single(mycielskian(base));
        inst.parts.emplace("G", base);
        out.push_back(std::move(inst));
    }
    return out;
}

Evaluation eval_mycielski(const Instance& inst, const ClaimOptions& o, Engine& e)
{
    const int n = inst.parts.at("G").order();
    const Invariants& inv = e.invariants(inst.graph);
    Evaluation ev;
    ev.expected = {{"f_minus", n}, {"f_plus", n}};
    ev.computed = {{"f_minus_threshold", inv.f_minus_threshold},
                   {"f_minus_strict", inv.f_minus_strict},
                   {"f_plus", inv.f_plus}};
    ev.holds = f_minus_of(inv, o.mode) == n && inv.f_plus == n;
    return ev;
}

std::vector<Instance> thorn_instances(const Corpus& corpus, const ClaimOptions& o, Engine& e)
{
    std::vector<Instance> out;
    auto add = [&](const Graph& base, std::vector<int> t) {
        int total = base.order();
        for (int x : t)
            total += x;
        if (total > o.thorn_max_n || static_cast<int>(t.size()) > base.order())
            return;
        Instance inst = single(thorn(base, t));
        inst.parts.emplace("G", base);
        inst.params["t"] = t;
        out.push_back(std::move(inst));
    };
    std::vector<Graph> bases;
    for (const Graph& g : up_to(corpus.connected, 5))
        if (e.within_reach(g) && e.invariants(g).chi >= 3)
            bases.push_back(g);
    for (const Graph& base : bases) {
        const int n = base.order();
        add(base, std::vector<int>(static_cast<std::size_t>(n), 1));
        add(base, {1});
        add(base, {2});
        std::vector<int> alternating;
        for (int i = 0; i < n; ++i)
            alternating.push_back(i % 2 == 0 ? 1 : 0);
        add(base, alternating);
    }
    add(cycle(3), {2, 1, 1});
    add(cycle(3), {2, 2, 2});
    add(cycle(3), {1, 2, 3});
    return out;
}

Evaluation eval_thorn(const Instance& inst, const ClaimOptions& o, Engine& e)
{
    int sum = 0;
    for (int x : inst.params.at("t"))
        sum += x;
    const Invariants base = e.invariants(inst.parts.at("G"));
    const Invariants& star = e.invariants(inst.graph);
    Evaluation ev;
    ev.expected = {{"f_minus_at_most", f_minus_of(base, o.mode) + sum}, {"f_plus_at_most", base.f_plus + sum}};
    ev.computed = {{"f_minus", f_minus_of(star, o.mode)}, {"f_plus", star.f_plus}, {"base", invariants_json(base)}};
    ev.holds = f_minus_of(star, o.mode) <= f_minus_of(base, o.mode) + sum && star.f_plus <= base.f_plus + sum;
    return ev;
}

std::vector<Instance> k1_join_instances(const Corpus& corpus, const ClaimOptions& o)
{
    std::vector<Instance> out;
    for (const Graph& g : up_to(corpus.connected, std::min(o.exhaustive_n, 6))) {
        Instance inst = single(join(g, Graph(1)));
        inst.parts.emplace("G", g);
        out.push_back(std::move(inst));
    }
    return out;
}

Evaluation eval_k1_join(const Instance& inst, const ClaimOptions& o, Engine& e)
{
    const Invariants base = e.invariants(inst.parts.at("G"));
    const Invariants& joined = e.invariants(inst.graph);
    Evaluation ev;
    ev.expected = {{"f_minus", f_minus_of(base, o.mode)}, {"f_plus", base.f_plus}};
    ev.computed = {{"f_minus", f_minus_of(joined, o.mode)}, {"f_plus", joined.f_plus}};
    ev.holds = f_minus_of(joined, o.mode) == f_minus_of(base, o.mode) && joined.f_plus == base.f_plus;
    return ev;
}

std::vector<Instance> windmill_instances(const Corpus& corpus, const ClaimOptions& o)
{
    std::vector<Instance> out;
    std::vector<Graph> bases = up_to(corpus.connected, 4);
    bases.push_back(cycle(5));
    for (const Graph& g : bases)
        for (int m = 1; m <= 3; ++m) {
            if (1 + m * g.order() > o.windmill_max_n)
                continue;
            Instance inst = single(windmill(g, m));
            inst.parts.emplace("G", g);
            inst.params["m"] = m;
            out.push_back(std::move(inst));
        }
    return out;
}

Evaluation eval_windmill(const Instance& inst, const ClaimOptions& o, Engine& e)
{
    const int m = inst.params.at("m");
    const Invariants base = e.invariants(inst.parts.at("G"));
    const Invariants& mill = e.invariants(inst.graph);
    Evaluation ev;
    ev.expected = {{"f_minus", m * f_minus_of(base, o.mode)}, {"f_plus", m * base.f_plus}};
    ev.computed = {{"f_minus", f_minus_of(mill, o.mode)}, {"f_plus", mill.f_plus}};
    ev.holds = f_minus_of(mill, o.mode) == m * f_minus_of(base, o.mode) && mill.f_plus == m * base.f_plus;
    return ev;
}

std::vector<Instance> join_pairs(const Corpus& corpus, const ClaimOptions& o)
{
    std::vector<Instance> out;
    const std::vector<Graph> suite = pair_suite(corpus);
    for (std::size_t i = 0; i < suite.size(); ++i)
        for (std::size_t j = i; j < suite.size(); ++j) {
            if (suite[i].order() + suite[j].order() > o.pair_max_n)
                continue;
            Instance inst = single(join(suite[i], suite[j]));
            inst.parts.emplace("G", suite[i]);
            inst.parts.emplace("H", suite[j]);
            out.push_back(std::move(inst));
        }
    return out;
}

Evaluation eval_join(const Instance& inst, const ClaimOptions& o, Engine& e)
{
    const Invariants g = e.invariants(inst.parts.at("G"));
    const Invariants h = e.invariants(inst.parts.at("H"));
    const Invariants& gh = e.invariants(inst.graph);
    Evaluation ev;
    ev.expected = {{"f_minus", f_minus_of(g, o.mode) + f_minus_of(h, o.mode)}, {"f_plus", g.f_plus + h.f_plus}};
    ev.computed = {{"f_minus", f_minus_of(gh, o.mode)},
                   {"f_plus", gh.f_plus},
                   {"G", invariants_json(g)},
                   {"H", invariants_json(h)}};
    ev.holds = f_minus_of(gh, o.mode) == f_minus_of(g, o.mode) + f_minus_of(h, o.mode) && gh.f_plus == g.f_plus + h.f_plus;
    return ev;
}

// Ordered pairs (G, H) split by whether chi(H) >= chi(G) - 1.
std::vector<Instance> corona_pairs(const Corpus& corpus, const ClaimOptions& o, Engine& e, bool high_chi)
{
    std::vector<Instance> out;
    const std::vector<Graph> suite = pair_suite(corpus);
    for (const Graph& g : suite)
        for (const Graph& h : suite) {
            if (g.order() * (1 + h.order()) > o.corona_max_n)
                continue;
            if (!e.within_reach(g) || !e.within_reach(h))
                continue;
            const bool case_a = e.invariants(h).chi >= e.invariants(g).chi - 1;
            if (case_a != high_chi)
                continue;
            Instance inst = single(corona(g, h));
            inst.parts.emplace("G", g);
            inst.parts.emplace("H", h);
            out.push_back(std::move(inst));
        }
    return out;
}

Evaluation eval_corona_a(const Instance& inst, const ClaimOptions& o, Engine& e)
{
    const int n1 = inst.parts.at("G").order();
    const Invariants h = e.invariants(inst.parts.at("H"));
    const Invariants& gh = e.invariants(inst.graph);
    Evaluation ev;
    ev.expected = {{"f_minus", n1 * f_minus_of(h, o.mode)}, {"f_plus", n1 * h.f_plus}};
    ev.computed = {{"f_minus", f_minus_of(gh, o.mode)}, {"f_plus", gh.f_plus}, {"H", invariants_json(h)}};
    ev.holds = f_minus_of(gh, o.mode) == n1 * f_minus_of(h, o.mode) && gh.f_plus == n1 * h.f_plus;
    return ev;
}

Evaluation eval_corona_b(const Instance& inst, const ClaimOptions& o, Engine& e)
{
    const int n1 = inst.parts.at("G").order();
    const int n2 = inst.parts.at("H").order();
    const Invariants g = e.invariants(inst.parts.at("G"));
    const Invariants& gh = e.invariants(inst.graph);
    Evaluation ev;
    ev.expected = {{"f_minus_at_most", f_minus_of(g, o.mode) + n1 * n2}, {"f_plus_at_most", g.f_plus + n1 * n2}};
    ev.computed = {{"f_minus", f_minus_of(gh, o.mode)}, {"f_plus", gh.f_plus}, {"G", invariants_json(g)}};
    ev.holds = f_minus_of(gh, o.mode) <= f_minus_of(g, o.mode) + n1 * n2 && gh.f_plus <= g.f_plus + n1 * n2;
    return ev;
}

Evaluation eval_iff_minus(const Instance& inst, const ClaimOptions& o, Engine& e)
{
    const int n = inst.graph.order();
    const Invariants& inv = e.invariants(inst.graph);
    Evaluation ev;
    ev.expected = {{"f_minus_positive", inv.r_min < n}};
    ev.computed = {{"f_minus", f_minus_of(inv, o.mode)}, {"r_min", inv.r_min}, {"n", n}};
    ev.holds = (f_minus_of(inv, o.mode) > 0) == (inv.r_min < n);
    return ev;
}

Evaluation eval_iff_plus(const Instance& inst, const ClaimOptions&, Engine& e)
{
    const int n = inst.graph.order();
    const Invariants& inv = e.invariants(inst.graph);
    Evaluation ev;
    ev.expected = {{"f_plus_positive", inv.r_max < n}};
    ev.computed = {{"f_plus", inv.f_plus}, {"r_max", inv.r_max}, {"n", n}};
    ev.holds = (inv.f_plus > 0) == (inv.r_max < n);
    return ev;
}

Evaluation eval_order(const Instance& inst, const ClaimOptions&, Engine& e)
{
    const int n = inst.graph.order();
    const Invariants& inv = e.invariants(inst.graph);
    Evaluation ev;
    ev.expected = {{"chain", "0 <= f_plus <= f_minus_threshold <= n - 1"}};
    ev.computed = {{"f_plus", inv.f_plus}, {"f_minus_threshold", inv.f_minus_threshold}, {"n", n}};
    ev.holds = 0 <= inv.f_plus && inv.f_plus <= inv.f_minus_threshold && inv.f_minus_threshold <= n - 1;
    return ev;
}

// The equality case: yielders' closed neighbourhoods pairwise disjoint and
// each of size chi.
bool disjoint_tight(const Graph& g, const std::vector<int>& yielders, int chi)
{
    VertexSet seen;
    for (int u : yielders) {
        const VertexSet nb = g.closed_neighbourhood(u);
        if (nb.size() != chi || nb.intersects(seen))
            return false;
        seen |= nb;
    }
    return true;
}

Evaluation eval_uncovered(const Instance& inst, const ClaimOptions&, Engine& e)
{
    const int chi = e.invariants(inst.graph).chi;
    Evaluation ev;
    json violations = json::array();
    int tight = 0;
    int tight_equal = 0;
    const auto checks = e.coloring_checks(inst.graph);
    for (const ColoringCheck& c : checks) {
        if (c.bound > c.fading)
            violations.push_back({{"coloring", c.colors}, {"bound", c.bound}, {"fading", c.fading}});
        if (disjoint_tight(inst.graph, c.yielders, chi)) {
            ++tight;
            tight_equal += c.bound == c.fading ? 1 : 0;
        }
    }
    ev.expected = {{"bound_at_most_fading", true}};
    ev.computed = {{"colorings", checks.size()},
                   {"violations", violations},
                   {"equality_case_colorings", tight},
                   {"equality_case_equal", tight_equal}};
    ev.holds = violations.empty();
    return ev;
}

Evaluation eval_conv_min(const Instance& inst, const ClaimOptions&, Engine& e)
{
    const Coloring c = convention_coloring(inst.graph);
    const Invariants& inv = e.invariants(inst.graph);
    const bool chromatic = c.k == inv.chi;
    const int r = chromatic ? e.rainbow_count(inst.graph, c.colors) : -1;
    Evaluation ev;
    ev.expected = {{"convention_is_chromatic", true}, {"convention_r", inv.r_min}};
    ev.computed = {{"convention_coloring", c.colors}, {"colors_used", c.k}, {"chi", inv.chi}, {"convention_r", r},
                   {"r_min", inv.r_min}};
    ev.holds = chromatic && r == inv.r_min;
    return ev;
}

const std::vector<ClaimDef>& registry()
{
    static const std::vector<ClaimDef> defs = {
        {"BIPARTITE-ZERO", Posture::asserted, "bipartite graphs have f- = f+ = 0",
         [](const Corpus& c, const ClaimOptions& o, Engine&) { return bipartite_instances(c, o); }, eval_bipartite},
        {"ODD-CYCLE-FMINUS", Posture::asserted, "f-(C_n) = n - 5 for odd n >= 7, and 0 for C_3, C_5",
         [](const Corpus&, const ClaimOptions& o, Engine&) { return odd_cycles(o); }, eval_odd_cycle_minus},
        {"ODD-CYCLE-FPLUS", Posture::asserted, "f+(C_n) = 0 for odd n",
         [](const Corpus&, const ClaimOptions& o, Engine&) { return odd_cycles(o); }, eval_odd_cycle_plus},
        {"RPLUS-CYCLES", Posture::asserted, "r+(C_{7+4l}) = r+(C_{9+4l}) = 3 + 2(l + 1)",
         [](const Corpus&, const ClaimOptions& o, Engine&) { return rplus_cycles(o); }, eval_rplus},
        {"MYCIELSKI", Posture::report, "f-(mu(G)) = f+(mu(G)) = |V(G)|",
         [](const Corpus& c, const ClaimOptions& o, Engine&) { return mycielski_instances(c, o); }, eval_mycielski},
        {"THORN-UPPER", Posture::asserted, "f(G*) <= f(G) + sum t_i for chi(G) >= 3, both f- and f+",
         thorn_instances, eval_thorn},
        {"K1-JOIN", Posture::asserted, "f(G + K_1) = f(G), both f- and f+",
         [](const Corpus& c, const ClaimOptions& o, Engine&) { return k1_join_instances(c, o); }, eval_k1_join},
        {"WINDMILL", Posture::asserted, "f(W^(m)_G) = m f(G), both f- and f+",
         [](const Corpus& c, const ClaimOptions& o, Engine&) { return windmill_instances(c, o); }, eval_windmill},
        {"JOIN-ADD", Posture::asserted, "f(G + H) = f(G) + f(H), both f- and f+",
         [](const Corpus& c, const ClaimOptions& o, Engine&) { return join_pairs(c, o); }, eval_join},
        {"CORONA-A", Posture::report, "f(G o H) = n1 f(H) when chi(H) >= chi(G) - 1",
         [](const Corpus& c, const ClaimOptions& o, Engine& e) { return corona_pairs(c, o, e, true); },
         eval_corona_a},
        {"CORONA-B", Posture::asserted, "f(G o H) <= f(G) + n1 n2 when chi(H) < chi(G) - 1",
         [](const Corpus& c, const ClaimOptions& o, Engine& e) { return corona_pairs(c, o, e, false); },
         eval_corona_b},
        {"IFF-FMINUS", Posture::report, "f- > 0 iff r- < n",
         [](const Corpus& c, const ClaimOptions& o, Engine&) { return corpus_instances(c, o); }, eval_iff_minus},
        {"IFF-FPLUS", Posture::report, "f+ > 0 iff r+ < n",
         [](const Corpus& c, const ClaimOptions& o, Engine&) { return corpus_instances(c, o); }, eval_iff_plus},
        {"ORDER-INEQ", Posture::asserted, "0 <= f+ <= f- (threshold) <= n - 1",
         [](const Corpus& c, const ClaimOptions& o, Engine&) { return corpus_instances(c, o); }, eval_order},
        {"UNCOVERED-BOUND", Posture::asserted,
         "n - |union of N[u] over yielders u| <= fading number of every chromatic colouring",
         [](const Corpus& c, const ClaimOptions& o, Engine&) {
             ClaimOptions narrowed = o;
             narrowed.exhaustive_n = std::min(o.exhaustive_n, o.uncovered_max_n);
             return corpus_instances(c, narrowed);
         },
         eval_uncovered},
        {"CONV-MIN", Posture::report, "the convention colouring is chromatic and attains r-",
         [](const Corpus& c, const ClaimOptions& o, Engine&) { return corpus_instances(c, o); }, eval_conv_min},
    };
    return defs;
}

const ClaimDef& find_claim(std::string_view id)
{
    for (const ClaimDef& d : registry())
        if (d.id == id)
            return d;
    throw ParameterError("unknown claim id '" + std::string(id) + "'");
}

std::unique_ptr<Engine> make_engine(const ClaimOptions& o)
{
    if (o.use_oracle)
        return std::make_unique<OracleEngine>(o.oracle_cap);
    return std::make_unique<FastEngine>(o.jobs);
}

json parts_json(const Instance& inst)
{
    json parts = json::object();
    for (const auto& [name, g] : inst.parts)
        parts[name] = write_graph6(g);
    return parts;
}

bool instance_in_reach(const Instance& inst, const Engine& e)
{
    if (!e.within_reach(inst.graph))
        return false;
    return std::all_of(inst.parts.begin(), inst.parts.end(), [&](const auto& p) { return e.within_reach(p.second); });
}

// Reports on the one instance where the Mycielskian claim and the odd-cycle
// claim speak about the same graph: mu(K_2) is C_5.
json mycielski_conflict(const ClaimOptions& o, Engine& e)
{
    const Graph mu = mycielskian(complete(2));
    const Invariants& computed = e.invariants(mu);
    json note = {
        {"base", write_graph6(complete(2))},
        {"mycielskian", write_graph6(mu)},
        {"isomorphic_to_cycle5", oracle::isomorphic(mu, cycle(5))},
        {"mycielski_predicts_f_minus", 2},
        {"odd_cycle_predicts_f_minus", 0},
        {"mode", std::string(to_string(o.mode))},
        {"computed", invariants_json(computed)},
    };
    note["predictions_compatible"] = !note["isomorphic_to_cycle5"].get<bool>();
    if (mu.order() <= o.oracle_cap) {
        const Invariants adjudicated = oracle::invariants(mu, o.oracle_cap);
        const int value = f_minus_of(adjudicated, o.mode);
        note["oracle"] = invariants_json(adjudicated);
        note["adjudicated_f_minus"] = value;
        note["agrees_with"] = value == 2 ? "MYCIELSKI" : value == 0 ? "ODD-CYCLE-FMINUS" : "neither";
    }
    note["witnesses"] = e.witnesses(mu);
    return note;
}

} // namespace

std::vector<std::string> claim_ids()
{
    std::vector<std::string> out;
    for (const ClaimDef& d : registry())
        out.emplace_back(d.id);
    return out;
}

ClaimReport run_claim(std::string_view claim_id, const Corpus& corpus, const ClaimOptions& options)
{
    const ClaimDef& def = find_claim(claim_id);
    auto engine = make_engine(options);

    ClaimReport report;
    report.claim_id = std::string(def.id);
    report.statement = std::string(def.statement);
    report.posture = def.posture;
    report.notes["mode"] = std::string(to_string(options.mode));
    report.notes["engine"] = options.use_oracle ? "oracle" : "fast";

    int out_of_reach = 0;
    for (const Instance& inst : def.instances(corpus, options, *engine)) {
        if (!instance_in_reach(inst, *engine)) {
            ++out_of_reach;
            continue;
        }
        ++report.instances_checked;
        Evaluation ev = def.evaluate(inst, options, *engine);
        if (ev.holds)
            continue;
        Counterexample cx;
        cx.graph6 = write_graph6(inst.graph);
        cx.details = {{"parts", parts_json(inst)},
                      {"params", inst.params},
                      {"expected", ev.expected},
                      {"computed", ev.computed},
                      {"witnesses", engine->witnesses(inst.graph)}};
        report.counterexamples.push_back(std::move(cx));
    }
    if (out_of_reach > 0)
        report.notes["skipped_over_oracle_cap"] = out_of_reach;

    const int failing = static_cast<int>(report.counterexamples.size());
    if (report.instances_checked == 0)
        report.verdict = Verdict::skipped;
    else if (failing == 0)
        report.verdict = Verdict::confirmed;
    else if (failing == report.instances_checked)
        report.verdict = Verdict::refuted;
    else
        report.verdict = Verdict::mixed;

    for (Counterexample& cx : report.counterexamples)
        cx.reverified = reverify(def.id, cx, options);
    std::sort(report.counterexamples.begin(), report.counterexamples.end(), [](const auto& a, const auto& b) {
        return std::tie(a.graph6, a.details) < std::tie(b.graph6, b.details);
    });

    if (def.id == "MYCIELSKI") {
        const bool has_k2 = std::any_of(corpus.connected.begin(), corpus.connected.end(), [&](const Graph& g) {
            return g.order() == 2 && g.order() <= options.max_base_n;
        });
        if (has_k2)
            report.notes["inconsistency"] = mycielski_conflict(options, *engine);
    }
    return report;
}

bool reverify(std::string_view claim_id, const Counterexample& cx, const ClaimOptions& options)
{
    const ClaimDef& def = find_claim(claim_id);
    Instance inst;
    inst.graph = parse_graph6(cx.graph6);
    if (cx.details.contains("parts"))
        for (const auto& [name, g6] : cx.details.at("parts").items())
            inst.parts.emplace(name, parse_graph6(g6.get<std::string>()));
    if (cx.details.contains("params"))
        inst.params = cx.details.at("params");

    OracleEngine oracle_engine(options.oracle_cap);
    if (!instance_in_reach(inst, oracle_engine))
        return false;
    const Evaluation ev = def.evaluate(inst, options, oracle_engine);
    return !ev.holds && ev.computed == cx.details.at("computed") && ev.expected == cx.details.at("expected");
}

json to_json(const ClaimReport& r)
{
    json cxs = json::array();
    for (const Counterexample& cx : r.counterexamples)
        cxs.push_back({{"graph6", cx.graph6}, {"details", cx.details}, {"reverified", cx.reverified}});
    return {{"claim_id", r.claim_id},
            {"statement", r.statement},
            {"posture", std::string(to_string(r.posture))},
            {"instances_checked", r.instances_checked},
            {"verdict", std::string(to_string(r.verdict))},
            {"counterexamples", cxs},
            {"acceptable", r.acceptable()},
            {"notes", r.notes}};
}

std::string to_text(const ClaimReport& r)
{
    std::ostringstream out;
    out << r.claim_id << ": " << to_string(r.verdict) << " (" << r.instances_checked << " instances, "
        << r.counterexamples.size() << " counterexamples, " << to_string(r.posture) << ")"
        << (r.acceptable() ? "" : " [NOT ACCEPTABLE]") << '\n'
        << "  " << r.statement << '\n';
    for (const Counterexample& cx : r.counterexamples)
        out << "  x " << cx.graph6 << (cx.reverified ? " (re-verified)" : " (NOT re-verified)")
            << " expected " << cx.details.at("expected").dump() << " computed " << cx.details.at("computed").dump()
            << '\n';
    if (r.notes.contains("inconsistency"))
        out << "  inconsistency " << r.notes.at("inconsistency").dump() << '\n';
    return out.str();
}

} // namespace fading
