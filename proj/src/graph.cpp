#include <grwalk/graph.hpp>

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <queue>
#include <set>
#include <sstream>
#include <string>

#include <grwalk/errors.hpp>

namespace grwalk {

namespace {

std::string edge_str(int u, int v) {
    std::ostringstream out;
    out << "(" << u << "," << v << ")";
    return out.str();
}

void check_vertex_cap(std::size_t n, const SizeLimits& limits) {
    if (n > limits.max_vertices) {
        std::ostringstream out;
        out << "vertex count " << n << " exceeds cap " << limits.max_vertices;
        throw SizeLimitError(out.str());
    }
}

void check_arc_cap(std::size_t arcs, const SizeLimits& limits) {
    if (arcs > limits.max_arcs) {
        std::ostringstream out;
        out << "arc count " << arcs << " exceeds cap " << limits.max_arcs;
        throw SizeLimitError(out.str());
    }
}

} // namespace

Graph Graph::from_edge_list(const std::vector<std::pair<int, int>>& edges,
                            const SizeLimits& limits) {
    if (edges.empty())
        throw InvalidParamsError("empty edge list");
    int max_id = 0;
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0)
            throw InvalidParamsError("negative vertex id in edge " + edge_str(u, v));
        if (u == v)
            throw LoopEdgeError("loop edge " + edge_str(u, v));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw DuplicateEdgeError("duplicate edge " + edge_str(key.first, key.second));
        max_id = std::max({max_id, u, v});
    }
    const std::size_t n = static_cast<std::size_t>(max_id) + 1;
    check_vertex_cap(n, limits);
    check_arc_cap(2 * edges.size(), limits);

    Graph g;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_)
        std::sort(nb.begin(), nb.end());

    // connectivity from vertex 0
    std::vector<char> vis(n, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj_[static_cast<std::size_t>(u)])
            if (!vis[static_cast<std::size_t>(v)]) {
                vis[static_cast<std::size_t>(v)] = 1;
                q.push(v);
            }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!vis[v]) {
            std::ostringstream out;
            out << "vertex " << v << " is unreachable from vertex 0";
            throw DisconnectedError(out.str());
        }

    g.arc_offset_.resize(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) {
        g.arc_offset_[u] = g.arcs_.size();
        for (int v : g.adj_[u])
            g.arcs_.push_back({static_cast<int>(u), v});
    }
    g.arc_offset_[n] = g.arcs_.size();
    return g;
}

bool Graph::is_regular() const {
    for (int v = 1; v < vertex_count(); ++v)
        if (degree(v) != degree(0))
            return false;
    return true;
}

std::size_t Graph::arc_index(const Arc& a) const {
    const auto& nb = neighbors(a.origin);
    auto it = std::lower_bound(nb.begin(), nb.end(), a.terminus);
    assert(it != nb.end() && *it == a.terminus);
    return arc_offset_[static_cast<std::size_t>(a.origin)] +
           static_cast<std::size_t>(it - nb.begin());
}

std::size_t Graph::inverse_arc_index(std::size_t idx) const {
    const Arc& a = arcs_[idx];
    return arc_index({a.terminus, a.origin});
}

std::vector<int> Graph::distances_from(int src) const {
    std::vector<int> dist(static_cast<std::size_t>(vertex_count()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : neighbors(u))
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

// ---- families ----

Graph hamming_graph(int d, int q, const SizeLimits& limits) {
    if (d < 1 || q < 2)
        throw InvalidParamsError("hamming graph needs d >= 1 and q >= 2");
    std::size_t n = 1;
    for (int i = 0; i < d; ++i) {
        n *= static_cast<std::size_t>(q);
        check_vertex_cap(n, limits);
    }
    check_arc_cap(n * static_cast<std::size_t>(d) * static_cast<std::size_t>(q - 1), limits);

    // vertex = base-q word, digit i has stride q^i
    std::vector<std::pair<int, int>> edges;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t stride = 1;
        std::size_t rest = v;
        for (int pos = 0; pos < d; ++pos) {
            const int digit = static_cast<int>(rest % static_cast<std::size_t>(q));
            for (int s = digit + 1; s < q; ++s) {
                std::size_t w = v + stride * static_cast<std::size_t>(s - digit);
                edges.emplace_back(static_cast<int>(v), static_cast<int>(w));
            }
            rest /= static_cast<std::size_t>(q);
            stride *= static_cast<std::size_t>(q);
        }
    }
    return Graph::from_edge_list(edges, limits);
}

Graph johnson_graph(int n, int k, const SizeLimits& limits) {
    if (n < 2 || k < 1 || k > n - 1)
        throw InvalidParamsError("johnson graph needs n >= 2 and 1 <= k <= n-1");
    if (n > 63)
        throw SizeLimitError("johnson ground set capped at 63");
    // k-subsets of {0..n-1} as bitmasks, lexicographic by mask value
    std::vector<std::uint64_t> subsets;
    std::uint64_t mask = (k == 0) ? 0 : ((1ull << k) - 1);
    const std::uint64_t top = 1ull << n;
    while (mask < top) {
        subsets.push_back(mask);
        check_vertex_cap(subsets.size(), limits);
        // next mask with the same popcount
        std::uint64_t c = mask & (~mask + 1);
        std::uint64_t r = mask + c;
        if (r >= top || c == 0)
            break;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if (std::popcount(subsets[i] & subsets[j]) == k - 1)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    check_arc_cap(2 * edges.size(), limits);
    return Graph::from_edge_list(edges, limits);
}

Graph cycle_graph(int n, const SizeLimits& limits) {
    if (n < 3)
        throw InvalidParamsError("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(edges, limits);
}

Graph complete_graph(int n, const SizeLimits& limits) {
    if (n < 2)
        throw InvalidParamsError("complete graph needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edge_list(edges, limits);
}

Graph complete_multipartite_graph(const std::vector<int>& parts, const SizeLimits& limits) {
    if (parts.size() < 2)
        throw InvalidParamsError("multipartite graph needs at least two parts");
    for (int p : parts)
        if (p < 1)
            throw InvalidParamsError("multipartite part sizes must be >= 1");
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i)
            part_of.push_back(static_cast<int>(p));
    check_vertex_cap(part_of.size(), limits);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < part_of.size(); ++i)
        for (std::size_t j = i + 1; j < part_of.size(); ++j)
            if (part_of[i] != part_of[j])
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edge_list(edges, limits);
}

Graph petersen_graph() {
    // 2-subsets of {0..4}, adjacent iff disjoint
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            pairs.emplace_back(a, b);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const auto& [a, b] = pairs[i];
            const auto& [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph::from_edge_list(edges);
}

// ---- derived quantities ----

int diameter(const Graph& g) {
    int diam = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = g.distances_from(v);
        diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
    }
    return diam;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (color[static_cast<std::size_t>(v)] < 0) {
                color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                q.push(v);
            } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                return false;
            }
        }
    }
    return true;
}

std::size_t cycle_space_dimension(const Graph& g) {
    return g.edge_count() - static_cast<std::size_t>(g.vertex_count()) + 1;
}

RatMatrix transition_matrix(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    RatMatrix t(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        Rational w = make_rational(1, g.degree(static_cast<int>(u)));
        for (int v : g.neighbors(static_cast<int>(u)))
            t.at(u, static_cast<std::size_t>(v)) = w;
    }
    return t;
}

RatMatrix grover_unitary(const Graph& g) {
    const std::size_t m = g.arc_count();
    RatMatrix u(m, m);
    for (std::size_t f = 0; f < m; ++f) {
        const int head = g.arcs()[f].terminus;
        const Rational w = make_rational(2, g.degree(head));
        const std::size_t rev = g.inverse_arc_index(f);
        for (int v : g.neighbors(head)) {
            const std::size_t e = g.arc_index({head, v});
            u.at(e, f) = (e == rev) ? w - 1 : w;
        }
    }
    return u;
}

} // namespace grwalk
