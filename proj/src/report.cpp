#include <grwalk/report.hpp>

#include <chrono>
#include <sstream>

namespace grwalk {

namespace {

using nlohmann::json;

json rational_list(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& c : v)
        out.push_back(to_string(c));
    return out;
}

json verdict_json(const PeriodicityVerdict& v) {
    json out;
    out["periodic"] = v.periodic;
    out["route"] = route_name(v.route);
    out["period"] = v.period ? json(to_string(*v.period)) : json(nullptr);
    if (v.cert) {
        json cert;
        cert["factors"] = v.cert->factors;
        cert["order_lcm"] = to_string(v.cert->order_lcm);
        out["certificate"] = cert;
    } else {
        out["certificate"] = nullptr;
    }
    out["witness"] = v.failure_witness ? json(*v.failure_witness) : json(nullptr);
    return out;
}

class StageClock {
public:
    explicit StageClock(bool enabled, std::map<std::string, double>& sink)
        : enabled_(enabled), sink_(sink) {}

    template <typename Fn>
    auto run(const std::string& stage, Fn&& fn) {
        const auto start = std::chrono::steady_clock::now();
        auto result = fn();
        if (enabled_) {
            const auto stop = std::chrono::steady_clock::now();
            sink_[stage] =
                std::chrono::duration<double, std::milli>(stop - start).count();
        }
        return result;
    }

private:
    bool enabled_;
    std::map<std::string, double>& sink_;
};

} // namespace

AnalysisReport analyze_graph(const Graph& g, const std::string& source,
                             const AnalyzeOptions& opts) {
    if (static_cast<std::size_t>(g.vertex_count()) > opts.limits.max_vertices)
        throw SizeLimitError("vertex count " + std::to_string(g.vertex_count()) +
                             " exceeds cap " + std::to_string(opts.limits.max_vertices));
    if (g.arc_count() > opts.limits.max_arcs)
        throw SizeLimitError("arc count " + std::to_string(g.arc_count()) + " exceeds cap " +
                             std::to_string(opts.limits.max_arcs));
    AnalysisReport rep;
    StageClock clock(opts.timings, rep.timings_ms);
    rep.source = source;
    rep.vertices = g.vertex_count();
    rep.edges = g.edge_count();
    rep.arcs = g.arc_count();
    rep.diameter = diameter(g);
    rep.regular = g.is_regular();
    rep.bipartite = is_bipartite(g);
    rep.cycle_rank = cycle_space_dimension(g);
    if (rep.regular)
        rep.array = clock.run("distance_regularity_scan",
                              [&] { return intersection_array_of(g); });

    rep.transition_minpoly = clock.run("transition_minpoly", [&] {
        return minimal_polynomial(transition_matrix(g));
    });
    rep.unitary = clock.run("unitary_route", [&] { return is_periodic_unitary(g); });
    rep.spectral = clock.run("spectral_route", [&] { return is_periodic_spectral(g); });
    if (rep.array)
        rep.quotient = clock.run("quotient_route",
                                 [&] { return drg_periodicity(*rep.array); });
    rep.routes_agree = rep.unitary.periodic == rep.spectral.periodic;
    if (rep.unitary.periodic && rep.spectral.periodic)
        rep.periods_agree = (*rep.unitary.period == *rep.spectral.period);

    rep.spectrum_checks =
        clock.run("rational_spectrum_checks", [&] { return rational_spectrum_check(g); });
    rep.transition_rational_eigenvalues.roots = rep.spectrum_checks.eigenvalues;
    rep.transition_rational_eigenvalues.complete = rep.spectrum_checks.splits;
    rep.filter = clock.run("coefficient_filter", [&] { return general_coefficient_filter(g); });
    return rep;
}

json to_json(const AnalysisReport& rep) {
    json out;
    out["source"] = rep.source;

    json graph;
    graph["vertices"] = rep.vertices;
    graph["edges"] = rep.edges;
    graph["arcs"] = rep.arcs;
    graph["diameter"] = rep.diameter;
    graph["regular"] = rep.regular;
    graph["bipartite"] = rep.bipartite;
    graph["cycle_rank"] = rep.cycle_rank;
    graph["intersection_array"] = rep.array ? json(rep.array->str()) : json(nullptr);
    out["graph"] = graph;

    json trans;
    json mp;
    json coeffs = json::array();
    for (const auto& c : rep.transition_minpoly.minpoly.coeffs())
        coeffs.push_back(to_string(c));
    mp["coeffs"] = coeffs;
    mp["leading"] = to_string(rep.transition_minpoly.leading);
    mp["text"] = rep.transition_minpoly.minpoly.str();
    trans["minpoly"] = mp;
    trans["distinct_eigenvalues"] = rep.transition_minpoly.distinct_eigenvalue_count;
    json rational;
    rational["complete"] = rep.transition_rational_eigenvalues.complete;
    json vals = json::array();
    for (const auto& rm : rep.transition_rational_eigenvalues.roots) {
        json entry;
        entry["value"] = to_string(rm.value);
        entry["multiplicity"] = rm.multiplicity;
        vals.push_back(entry);
    }
    rational["values"] = vals;
    trans["rational_eigenvalues"] = rational;
    out["transition"] = trans;

    json per;
    per["unitary"] = verdict_json(rep.unitary);
    per["spectral"] = verdict_json(rep.spectral);
    per["quotient"] = rep.quotient ? verdict_json(*rep.quotient) : json(nullptr);
    per["routes_agree"] = rep.routes_agree;
    per["periods_agree"] = rep.periods_agree ? json(*rep.periods_agree) : json(nullptr);
    out["periodicity"] = per;

    json checks;
    checks["splits_over_rationals"] = rep.spectrum_checks.splits;
    checks["periodic"] = rep.spectrum_checks.periodic;
    checks["applicable"] = rep.spectrum_checks.applicable;
    checks["distinct_eigenvalues"] = rep.spectrum_checks.distinct_count;
    checks["diameter"] = rep.spectrum_checks.diameter;
    auto opt_bool = [](const std::optional<bool>& b) {
        return b ? json(*b) : json(nullptr);
    };
    checks["eigenvalues_in_allowed_set"] = opt_bool(rep.spectrum_checks.values_allowed);
    checks["at_most_five_eigenvalues"] = opt_bool(rep.spectrum_checks.count_bounded);
    checks["diameter_below_five"] = opt_bool(rep.spectrum_checks.diameter_bounded);
    checks["diameter_below_distinct_count"] = rep.spectrum_checks.diameter_below_distinct;
    out["rational_spectrum_checks"] = checks;

    json filt;
    filt["pass"] = rep.filter.pass;
    filt["failing_j"] = rep.filter.failing_j ? json(*rep.filter.failing_j) : json(nullptr);
    filt["charpoly"] = rational_list(rep.filter.charpoly);
    filt["transform"] = rational_list(rep.filter.transform);
    out["coefficient_filter"] = filt;

    if (!rep.timings_ms.empty())
        out["timings_ms"] = rep.timings_ms;
    return out;
}

json to_json(const SearchReport& rep) {
    json out;
    out["family"] = rep.family;
    out["bounds"] = rep.bounds_label;
    out["note"] = "verified within the stated bounds only";
    out["param_names"] = rep.param_names;
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json row;
        row["params"] = r.params;
        row["periodic"] = r.periodic;
        row["period"] = r.period ? json(to_string(*r.period)) : json(nullptr);
        row["confirmed_by_unitary"] = r.confirmed_by_unitary;
        row["note"] = r.note ? json(*r.note) : json(nullptr);
        rows.push_back(row);
    }
    out["rows"] = rows;
    out["expected_periodic"] = rep.expected_periodic;
    out["matches_expected"] = rep.matches_expected;
    return out;
}

std::string to_csv(const SearchReport& rep) {
    std::ostringstream out;
    out << "# family=" << rep.family << " bounds: " << rep.bounds_label
        << " (verified within the stated bounds only)\n";
    for (const auto& name : rep.param_names)
        out << name << ",";
    out << "periodic,period,confirmed_by_unitary\n";
    for (const auto& r : rep.rows) {
        for (long long p : r.params)
            out << p << ",";
        out << (r.periodic ? "true" : "false") << ",";
        if (r.period)
            out << to_string(*r.period);
        out << "," << (r.confirmed_by_unitary ? "true" : "false") << "\n";
    }
    return out.str();
}

std::string render_json(const json& j) {
    return j.dump(2) + "\n";
}

} // namespace grwalk
