#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fading/claims.hpp"
#include "fading/errors.hpp"
#include "fading/family_spec.hpp"
#include "fading/graph_io.hpp"
#include "fading/oracle.hpp"
#include "fading/rainbow.hpp"
#include "fading/report.hpp"
#include "fading/scan.hpp"

#ifndef FADING_DATA_DIR
#define FADING_DATA_DIR "data"
#endif

namespace {

using namespace fading;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_cap = 3;
constexpr int exit_timeout = 4;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string data_dir()
{
    if (const char* env = std::getenv("FADING_DATA_DIR"))
        return env;
    return FADING_DATA_DIR;
}

int default_size_cap()
{
    if (const char* env = std::getenv("FADING_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed FADING_MAX_N='" << env << "'\n";
        }
    }
    return 12;
}

std::string slurp(const std::string& file)
{
    if (file == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(file);
    if (!in)
        throw ParameterError("cannot open " + file);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Runs `work` and returns its exit code; exits with 4 if it overruns.
int with_timeout(double seconds, const std::function<int()>& work)
{
    if (seconds <= 0)
        return work();
    auto task = std::async(std::launch::async, work);
    if (task.wait_for(std::chrono::duration<double>(seconds)) == std::future_status::timeout) {
        std::cerr << "error: timed out after " << seconds << " s\n";
        std::cerr.flush();
        std::_Exit(exit_timeout);
    }
    return task.get();
}

void print(const json& j, const std::string& format, const std::string& text)
{
    if (format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

struct Common {
    std::string mode = "threshold";
    std::string format = "json";
    bool oracle = false;
    int jobs = 1;
    double timeout = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_format = true)
{
    cmd->add_option("--mode", c.mode, "f- mode: threshold or strict")->check(CLI::IsMember({"threshold", "strict"}));
    if (with_format)
        cmd->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--oracle", c.oracle, "use the naive exhaustive oracle");
    cmd->add_option("--jobs", c.jobs, "worker threads (output does not depend on it)");
    cmd->add_option("--timeout", c.timeout, "abort with exit code 4 after this many seconds");
}

json oracle_summary(const Graph& g, FadeMode mode, int cap)
{
    const Invariants inv = oracle::invariants(g, cap);
    return {{"graph6", write_graph6(g)},
            {"n", g.order()},
            {"m", g.size()},
            {"connected", oracle::is_connected(g)},
            {"engine", "oracle"},
            {"chi", inv.chi},
            {"omega", inv.omega},
            {"r_min", inv.r_min},
            {"r_max", inv.r_max},
            {"mode", std::string(to_string(mode))},
            {"f_minus", mode == FadeMode::strict ? inv.f_minus_strict : inv.f_minus_threshold},
            {"f_minus_threshold", inv.f_minus_threshold},
            {"f_minus_strict", inv.f_minus_strict},
            {"f_plus", inv.f_plus}};
}

std::string summary_lines(const json& j)
{
    std::ostringstream out;
    for (const auto& [key, value] : j.items())
        out << key << ": " << value.dump() << '\n';
    return out.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact rainbow neighbourhood and fading numbers of small graphs"};
    app.require_subcommand(1);

    // invariants
    Common inv_common;
    std::string family, g6, edgelist, g6_file;
    std::optional<int> max_n;
    auto* inv = app.add_subcommand("invariants", "compute chi, omega, r-, r+, f-, f+ for one graph");
    add_common(inv, inv_common);
    auto* src_family = inv->add_option("--family", family, "family expression, e.g. cycle:7 or mycielskian(cycle:5)");
    auto* src_g6 = inv->add_option("--g6", g6, "graph6 string");
    auto* src_el = inv->add_option("--edgelist", edgelist, "edge-list file ('-' for stdin)");
    auto* src_g6f = inv->add_option("--g6-file", g6_file, "file with one graph6 line; first non-blank line is used");
    src_family->excludes(src_g6, src_el, src_g6f);
    src_g6->excludes(src_el, src_g6f);
    src_el->excludes(src_g6f);
    inv->add_option("--max-n", max_n, "size cap (default 12 or $FADING_MAX_N)");
    int inv_oracle_cap = oracle::default_cap;
    inv->add_option("--oracle-cap", inv_oracle_cap, "largest order the oracle accepts");

    // construct
    std::string op, of, with, thorns, out_format = "g6";
    int copies = 1;
    auto* cons = app.add_subcommand("construct", "build a graph and print it");
    cons->add_option("op", op, "mycielskian|thorn|join|corona|windmill, or a family expression")->required();
    cons->add_option("--of", of, "operand family expression");
    cons->add_option("--with", with, "second operand for join/corona");
    cons->add_option("--t", thorns, "thorn counts, comma separated");
    cons->add_option("--m", copies, "windmill copies");
    cons->add_option("--format", out_format, "g6 or edgelist")->check(CLI::IsMember({"g6", "edgelist"}));

    // verify
    Common ver_common;
    std::vector<std::string> claim_args;
    ClaimOptions claim_opts;
    std::string corpus_file = data_dir() + "/connected_n1-7.g6";
    std::string trees_file = data_dir() + "/trees_n1-8.g6";
    auto* ver = app.add_subcommand("verify", "check claims against the corpus");
    add_common(ver, ver_common);
    ver->add_option("claims", claim_args, "claim ids or 'all'")->required();
    ver->add_option("--corpus", corpus_file, "graph6 file of connected graphs");
    ver->add_option("--trees", trees_file, "graph6 file of trees");
    ver->add_option("--exhaustive-n", claim_opts.exhaustive_n, "largest corpus order used");
    ver->add_option("--max-n", claim_opts.max_cycle_n, "largest cycle order");
    ver->add_option("--max-base-n", claim_opts.max_base_n, "largest Mycielskian base order");
    ver->add_option("--pair-max-n", claim_opts.pair_max_n, "largest n1 + n2 for joins");
    ver->add_option("--corona-max-n", claim_opts.corona_max_n, "largest corona order");
    ver->add_option("--oracle-cap", claim_opts.oracle_cap, "largest order the oracle accepts");

    // scan
    Common scan_common;
    std::string scan_input;
    ScanOptions scan_opts;
    auto* scan = app.add_subcommand("scan", "look for counterexamples to the omega < chi conjecture");
    add_common(scan, scan_common);
    scan->add_option("--input", scan_input, "graph6 file ('-' for stdin)")->required();
    scan->add_option("--max-n", scan_opts.max_n, "skip graphs above this order");
    scan->add_option("--oracle-cap", scan_opts.oracle_cap, "largest order the oracle accepts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*inv) {
            const FadeMode mode = parse_fade_mode(inv_common.mode);
            Graph g;
            try {
                if (!family.empty())
                    g = build_family(family);
                else if (!g6.empty())
                    g = parse_graph6(g6);
                else if (!edgelist.empty())
                    g = parse_edge_list(slurp(edgelist));
                else if (!g6_file.empty()) {
                    std::istringstream lines(slurp(g6_file));
                    std::string line;
                    while (std::getline(lines, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
                    }
                    g = parse_graph6(line);
                } else {
                    std::cerr << "error: give one of --family, --g6, --edgelist, --g6-file\n";
                    return exit_input;
                }
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return exit_input;
            }
            const int cap = max_n.value_or(default_size_cap());
            if (g.order() > cap) {
                std::cerr << "error: graph has " << g.order() << " vertices, above the cap of " << cap
                          << " (raise with --max-n)\n";
                return exit_cap;
            }
            if (g.order() > 10)
                std::cerr << "warning: " << g.order() << " vertices; exact search may take a while\n";
            return with_timeout(inv_common.timeout, [&] {
                if (inv_common.oracle) {
                    const json j = oracle_summary(g, mode, inv_oracle_cap);
                    print(j, inv_common.format, summary_lines(j));
                } else {
                    const GraphAnalysis a = analyze(g, inv_common.jobs);
                    const std::string code = write_graph6(g);
                    print(summary_json(a, mode, code), inv_common.format, summary_text(a, mode, code));
                }
                return exit_ok;
            });
        }

        if (*cons) {
            std::string spec;
            try {
                if (op == "mycielskian")
                    spec = "mycielskian(" + of + ")";
                else if (op == "thorn")
                    spec = "thorn(" + of + ";" + thorns + ")";
                else if (op == "windmill")
                    spec = "windmill(" + of + ";" + std::to_string(copies) + ")";
                else if (op == "join" || op == "corona")
                    spec = op + "(" + of + "," + with + ")";
                else
                    spec = op;
                const Graph g = build_family(spec);
                std::cout << (out_format == "g6" ? write_graph6(g) + "\n" : write_edge_list(g));
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return exit_input;
            }
            return exit_ok;
        }

        if (*ver) {
            claim_opts.mode = parse_fade_mode(ver_common.mode);
            claim_opts.use_oracle = ver_common.oracle;
            claim_opts.jobs = ver_common.jobs;
            std::vector<std::string> ids;
            for (const std::string& a : claim_args) {
                if (a == "all") {
                    const auto all = claim_ids();
                    ids.insert(ids.end(), all.begin(), all.end());
                } else {
                    ids.push_back(a);
                }
            }
            const auto known = claim_ids();
            for (const std::string& id : ids)
                if (std::find(known.begin(), known.end(), id) == known.end()) {
                    std::cerr << "error: unknown claim id '" << id << "'\n";
                    return exit_input;
                }
            Corpus corpus;
            try {
                corpus = load_corpus(corpus_file, trees_file);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return exit_input;
            }
            return with_timeout(ver_common.timeout, [&] {
                json reports = json::array();
                std::string text;
                bool all_ok = true;
                for (const std::string& id : ids) {
                    const ClaimReport r = run_claim(id, corpus, claim_opts);
                    all_ok = all_ok && r.acceptable();
                    reports.push_back(to_json(r));
                    text += to_text(r);
                }
                print(reports, ver_common.format, text);
                return all_ok ? exit_ok : exit_failed;
            });
        }

        if (*scan) {
            scan_opts.mode = parse_fade_mode(scan_common.mode);
            scan_opts.use_oracle = scan_common.oracle;
            scan_opts.jobs = scan_common.jobs;
            std::string content;
            try {
                content = slurp(scan_input);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return exit_input;
            }
            return with_timeout(scan_common.timeout, [&] {
                std::istringstream in(content);
                const ScanResult r = scan_conjecture(in, scan_opts);
                print(to_json(r), scan_common.format, to_text(r));
                return exit_ok;
            });
        }
    } catch (const OracleRefusal& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_cap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_ok;
}
