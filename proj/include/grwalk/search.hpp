#pragma once

#include <optional>
#include <string>
#include <vector>

#include <grwalk/drg.hpp>
#include <grwalk/graph.hpp>
#include <grwalk/verdict.hpp>

namespace grwalk {

struct Range {
    long long lo;
    long long hi;
};

struct SearchOptions {
    int jobs = 1;
    SizeLimits limits;
};

struct SearchRow {
    std::vector<long long> params;
    bool periodic = false;
    std::optional<Integer> period;
    // survivor rebuilt as an explicit graph and confirmed by the walk
    // operator's minimal polynomial (only attempted within the size caps)
    bool confirmed_by_unitary = false;
    std::optional<std::string> note;
};

// Verdicts for every parameter point scanned, in lexicographic parameter
// order, against the known classification restricted to the same bounds.
// The scan proves nothing outside these bounds.
struct SearchReport {
    std::string family;
    std::vector<std::string> param_names;
    std::string bounds_label;
    std::vector<SearchRow> rows;
    std::vector<std::vector<long long>> expected_periodic;
    bool matches_expected = false;
};

SearchReport search_hamming(Range d, Range q, const SearchOptions& opts = {});
// Johnson parameters are folded to k <= n-k first; mirror pairs are scanned once.
SearchReport search_johnson(Range n, Range k, const SearchOptions& opts = {});
SearchReport search_srg(long long k_max, const SearchOptions& opts = {});

} // namespace grwalk
