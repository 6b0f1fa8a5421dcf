#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <grwalk/acceptance.hpp>
#include <grwalk/graph_io.hpp>
#include <grwalk/report.hpp>

namespace {

using namespace grwalk;

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 2;
    }
    out << text;
    return 0;
}

Range parse_range(const std::string& text, const std::string& flag) {
    auto number = [&](const std::string& part) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size())
            throw ParseError(flag + ": expected an integer or lo..hi, got '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long long v = number(text);
        return {v, v};
    }
    Range r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
    if (r.lo > r.hi)
        throw ParseError(flag + ": empty range '" + text + "'");
    return r;
}

struct CommonFlags {
    std::string format = "json";
    std::string out_path;
    std::size_t max_vertices = SizeLimits{}.max_vertices;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool allow_csv) {
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember(allow_csv ? std::vector<std::string>{"json", "csv"}
                                        : std::vector<std::string>{"json"}));
    cmd->add_option("--out", flags.out_path, "write the report to a file instead of stdout");
    cmd->add_option("--max-vertices", flags.max_vertices, "vertex cap for graph construction");
}

int run_analyze(const std::string& family, const std::string& graph_path,
                const CommonFlags& flags, bool timings) {
    if (family.empty() == graph_path.empty()) {
        std::cerr << "error: analyze needs exactly one of --family or --graph\n";
        return 2;
    }
    AnalyzeOptions opts;
    opts.limits.max_vertices = flags.max_vertices;
    opts.timings = timings;
    const std::string source = family.empty() ? graph_path : family;
    const Graph g = family.empty() ? load_edge_list(graph_path, opts.limits)
                                   : build_family(family, opts.limits);
    const AnalysisReport rep = analyze_graph(g, source, opts);
    return write_output(render_json(to_json(rep)), flags.out_path);
}

int run_search(const std::string& family, const std::optional<std::string>& d_text,
               const std::optional<std::string>& q_text,
               const std::optional<std::string>& n_text,
               const std::optional<std::string>& k_text,
               const std::optional<long long>& k_max, int jobs, const CommonFlags& flags) {
    SearchOptions opts;
    opts.jobs = jobs;
    opts.limits.max_vertices = flags.max_vertices;
    SearchReport rep;
    if (family == "hamming") {
        if (n_text || k_text || k_max) {
            std::cerr << "error: hamming search takes --d and --q only\n";
            return 2;
        }
        rep = search_hamming(d_text ? parse_range(*d_text, "--d") : Range{1, 6},
                             q_text ? parse_range(*q_text, "--q") : Range{2, 12}, opts);
    } else if (family == "johnson") {
        if (d_text || q_text || k_max) {
            std::cerr << "error: johnson search takes --n and --k only\n";
            return 2;
        }
        rep = search_johnson(n_text ? parse_range(*n_text, "--n") : Range{2, 12},
                             k_text ? parse_range(*k_text, "--k") : Range{1, 6}, opts);
    } else {
        if (d_text || q_text || n_text || k_text) {
            std::cerr << "error: srg search takes --k-max only\n";
            return 2;
        }
        rep = search_srg(k_max.value_or(12), opts);
    }
    const std::string text = flags.format == "csv" ? to_csv(rep) : render_json(to_json(rep));
    return write_output(text, flags.out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact periodicity analysis of Grover walks on finite graphs"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "full report for a single graph");
    std::string family_spec, graph_path;
    bool timings = false;
    CommonFlags analyze_flags;
    analyze->add_option("--family", family_spec,
                        "family spec: hamming:d=2,q=3 | johnson:n=5,k=2 | cycle:n=7 | "
                        "complete:n=4 | multipartite:parts=2+2+2 | petersen");
    analyze->add_option("--graph", graph_path, "edge-list file, one 'u v' pair per line");
    analyze->add_flag("--timings", timings, "include per-stage wall times (non-canonical output)");
    add_common(analyze, analyze_flags, /*allow_csv=*/false);

    auto* search = app.add_subcommand("search", "scan a parameter family");
    std::string search_family;
    std::optional<std::string> d_text, q_text, n_text, k_text;
    std::optional<long long> k_max;
    int jobs = 0;
    CommonFlags search_flags;
    search->add_option("--family", search_family, "hamming | johnson | srg")
        ->required()
        ->check(CLI::IsMember({"hamming", "johnson", "srg"}));
    search->add_option("--d", d_text, "hamming dimension range, e.g. 1..6");
    search->add_option("--q", q_text, "hamming alphabet range, e.g. 2..12");
    search->add_option("--n", n_text, "johnson ground-set range, e.g. 2..12");
    search->add_option("--k", k_text, "johnson subset-size range, e.g. 1..6");
    search->add_option("--k-max", k_max, "srg valency cap (default 12)");
    search->add_option("--jobs", jobs, "worker threads, 0 = all cores");
    add_common(search, search_flags, /*allow_csv=*/true);

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::string suite = "all";
    verify->add_option("--suite", suite, "all | fast")
        ->check(CLI::IsMember({"all", "fast"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed())
            return run_analyze(family_spec, graph_path, analyze_flags, timings);
        if (search->parsed())
            return run_search(search_family, d_text, q_text, n_text, k_text, k_max, jobs,
                              search_flags);
        const int failures = run_acceptance(suite, std::cout);
        return failures == 0 ? 0 : 1;
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
