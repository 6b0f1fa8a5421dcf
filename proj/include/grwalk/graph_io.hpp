#pragma once

#include <string>

#include <grwalk/graph.hpp>

namespace grwalk {

// One "u v" edge per line, blank lines and '#' comments allowed.
Graph parse_edge_list_text(const std::string& text, const SizeLimits& limits = {});
Graph load_edge_list(const std::string& path, const SizeLimits& limits = {});

// "hamming:d=2,q=3", "johnson:n=5,k=2", "cycle:n=7", "complete:n=4",
// "multipartite:parts=2+2+2", "petersen"
Graph build_family(const std::string& spec, const SizeLimits& limits = {});

} // namespace grwalk
