#pragma once

#include <optional>
#include <vector>

#include <grwalk/graph.hpp>
#include <grwalk/spectra.hpp>
#include <grwalk/verdict.hpp>

namespace grwalk {

// The walk is periodic iff the minimal polynomial of the walk operator is a
// product of cyclotomics; the period is then the lcm of the root orders.
PeriodicityVerdict is_periodic_unitary(const Graph& g);

// Same question through the transition-matrix spectrum: the walk spectrum is
// cyclotomic iff the Zhukovskij transform of minpoly(T) is, and +-1 enter
// whenever the graph has an independent cycle (and -1 for non-bipartite
// ones), which folds an extra factor of 2 into the period.
PeriodicityVerdict is_periodic_spectral(const Graph& g);

// Checks on a periodic graph with fully rational transition spectrum: the
// eigenvalues land in {0, +-1/2, +-1}, at most 5 of them, and the diameter
// stays below both 5 and the count of distinct eigenvalues.
struct RationalSpectrumReport {
    bool splits = false;   // characteristic polynomial has only rational roots
    bool periodic = false; // spectral-route verdict
    bool applicable = false;
    std::vector<RootMultiplicity> eigenvalues;
    int distinct_count = 0;
    int diameter = 0;
    std::optional<bool> values_allowed;   // subset of {0, +-1/2, +-1}
    std::optional<bool> count_bounded;    // distinct_count <= 5
    std::optional<bool> diameter_bounded; // diameter < 5
    bool diameter_below_distinct = false; // holds for every connected graph
};

RationalSpectrumReport rational_spectrum_check(const Graph& g);

// The coefficient integrality filter applied to the full characteristic
// polynomial of the transition matrix.
CoefficientReport general_coefficient_filter(const Graph& g);

} // namespace grwalk
