#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include <grwalk/drg.hpp>
#include <grwalk/graph.hpp>
#include <grwalk/periodicity.hpp>
#include <grwalk/search.hpp>

namespace grwalk {

struct AnalyzeOptions {
    SizeLimits limits;
    // wall times vary run to run, so they are opt-in and excluded from the
    // canonical (byte-stable) report
    bool timings = false;
};

struct AnalysisReport {
    std::string source;
    int vertices = 0;
    std::size_t edges = 0;
    std::size_t arcs = 0;
    int diameter = 0;
    bool regular = false;
    bool bipartite = false;
    std::size_t cycle_rank = 0;
    std::optional<IntersectionArray> array; // present iff distance-regular

    MinimalPolynomialResult transition_minpoly;
    RationalSpectrum transition_rational_eigenvalues;

    PeriodicityVerdict unitary;
    PeriodicityVerdict spectral;
    std::optional<PeriodicityVerdict> quotient; // present iff array is
    bool routes_agree = false;                  // unitary vs spectral, yes/no bit
    std::optional<bool> periods_agree;          // present iff both periodic

    RationalSpectrumReport spectrum_checks;
    CoefficientReport filter;

    std::map<std::string, double> timings_ms; // empty unless requested
};

AnalysisReport analyze_graph(const Graph& g, const std::string& source,
                             const AnalyzeOptions& opts = {});

nlohmann::json to_json(const AnalysisReport& rep);
nlohmann::json to_json(const SearchReport& rep);
std::string to_csv(const SearchReport& rep);

// dump(2) with a trailing newline; nlohmann objects iterate in key order, so
// equal reports render byte-identically
std::string render_json(const nlohmann::json& j);

} // namespace grwalk
