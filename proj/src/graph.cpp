#include "tcc/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tcc/errors.hpp"

namespace tcc {

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(n_) + ")");
}

Graph Graph::from_edges(Vertex n, const std::vector<Edge>& edges) {
    if (n < 0) throw InputError("negative vertex count");
    std::vector<Edge> directed;
    directed.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside [0, " + std::to_string(n) + ")");
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        directed.emplace_back(u, v);
        directed.emplace_back(v, u);
    }
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

    Graph g;
    g.n_ = n;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : directed)
        ++g.offsets_[static_cast<std::size_t>(u) + 1];
    for (std::size_t i = 1; i < g.offsets_.size(); ++i)
        g.offsets_[i] += g.offsets_[i - 1];
    g.adj_.reserve(directed.size());
    for (const auto& [u, v] : directed) g.adj_.push_back(v);
    return g;
}

Graph Graph::from_csr(Vertex n, std::vector<std::int64_t> offsets,
                      std::vector<Vertex> adjacency) {
    if (n < 0) throw InputError("negative vertex count");
    if (offsets.size() != static_cast<std::size_t>(n) + 1 || offsets.front() != 0 ||
        offsets.back() != static_cast<std::int64_t>(adjacency.size()))
        throw InputError("csr offsets inconsistent with adjacency length");
    for (Vertex v = 0; v < n; ++v) {
        const auto lo = offsets[static_cast<std::size_t>(v)];
        const auto hi = offsets[static_cast<std::size_t>(v) + 1];
        if (lo > hi) throw InputError("csr offsets not nondecreasing");
        for (std::int64_t i = lo; i < hi; ++i) {
            const Vertex w = adjacency[static_cast<std::size_t>(i)];
            if (w < 0 || w >= n) throw InputError("csr neighbor out of range");
            if (w == v) throw InputError("csr self-loop at vertex " + std::to_string(v));
            if (i > lo && adjacency[static_cast<std::size_t>(i - 1)] >= w)
                throw InputError("csr neighbor list not strictly ascending");
        }
    }
    Graph g;
    g.n_ = n;
    g.offsets_ = std::move(offsets);
    g.adj_ = std::move(adjacency);
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto nbrs = neighbors(u);
    check_vertex(v);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::int64_t min_degree(const Graph& g) {
    if (g.num_vertices() == 0) throw InputError("min_degree of empty graph");
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

Rational average_degree(const Graph& g) {
    if (g.num_vertices() == 0) throw InputError("average_degree of empty graph");
    return Rational(2 * g.num_edges(), g.num_vertices());
}

std::optional<std::int64_t> regularity(const Graph& g) {
    if (g.num_vertices() == 0) throw InputError("regularity of empty graph");
    const std::int64_t d = g.degree(0);
    for (Vertex v = 1; v < g.num_vertices(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

std::int64_t neighborhood_min_degree(const Graph& g, Vertex v) {
    const auto nbrs = g.neighbors(v);
    if (nbrs.empty())
        throw DomainError("neighborhood_min_degree of isolated vertex " + std::to_string(v));
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (Vertex u : nbrs)
        best = std::min(best, sorted_intersection_size(nbrs, g.neighbors(u)));
    return best;
}

std::int64_t sigma(const Graph& g) {
    if (min_degree(g) < 1)
        throw DomainError("sigma undefined: graph has an isolated vertex");
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        best = std::min(best, neighborhood_min_degree(g, v));
    return best;
}

}  // namespace tcc
