#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <grwalk/matrix.hpp>

namespace grwalk {

// Directed arc of a symmetric digraph: one orientation of an undirected edge.
struct Arc {
    int origin;
    int terminus;
    friend bool operator==(const Arc&, const Arc&) = default;
};

struct SizeLimits {
    std::size_t max_vertices = 4096;
    std::size_t max_arcs = 65536;
};

// Finite simple connected undirected graph, vertices 0..n-1. Construction
// rejects loops, duplicate edges and disconnected inputs. Arc order is
// lexicographic by (origin, terminus) and is the row/column order of the
// walk matrix.
class Graph {
public:
    static Graph from_edge_list(const std::vector<std::pair<int, int>>& edges,
                                const SizeLimits& limits = {});

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return arcs_.size() / 2; }
    std::size_t arc_count() const { return arcs_.size(); }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool is_regular() const;

    const std::vector<Arc>& arcs() const { return arcs_; }
    std::size_t arc_index(const Arc& a) const;
    std::size_t inverse_arc_index(std::size_t idx) const;

    // BFS distances; -1 never appears (graph is connected)
    std::vector<int> distances_from(int src) const;

private:
    Graph() = default;
    std::vector<std::vector<int>> adj_;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> arc_offset_;
};

// families
Graph hamming_graph(int d, int q, const SizeLimits& limits = {});
Graph johnson_graph(int n, int k, const SizeLimits& limits = {});
Graph cycle_graph(int n, const SizeLimits& limits = {});
Graph complete_graph(int n, const SizeLimits& limits = {});
Graph complete_multipartite_graph(const std::vector<int>& parts, const SizeLimits& limits = {});
Graph petersen_graph();

int diameter(const Graph& g);
bool is_bipartite(const Graph& g);
// independent cycle count |E| - |V| + 1
std::size_t cycle_space_dimension(const Graph& g);

// random-walk transition matrix, row u has 1/deg(u) at u's neighbors
RatMatrix transition_matrix(const Graph& g);

// Walk operator on arcs: column f feeds the arcs leaving the head of f,
// with weight 2/deg - 1 on the reversal of f and 2/deg on the rest.
RatMatrix grover_unitary(const Graph& g);

} // namespace grwalk
