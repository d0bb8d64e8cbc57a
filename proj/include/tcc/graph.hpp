#ifndef TCC_GRAPH_HPP
#define TCC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tcc/rational.hpp"

namespace tcc {

using Vertex = std::int32_t;

// Immutable simple undirected graph in CSR form. Per-vertex neighbor
// lists are strictly ascending, symmetric, and self-loop free; vertices
// are 0..n-1. Safe to share across threads after construction, all
// queries are const.
class Graph {
public:
    using Edge = std::pair<Vertex, Vertex>;

    Graph() = default;  // the empty graph

    // Duplicate pairs and reversed duplicates collapse to one edge.
    // Throws InputError on out-of-range endpoints or self-loops.
    static Graph from_edges(Vertex n, const std::vector<Edge>& edges);

    // Adopts a prebuilt CSR layout. Offsets/adjacency must already
    // satisfy the class invariants; the cheap ones (monotone offsets,
    // strictly ascending in-range lists, no self-loops) are verified.
    static Graph from_csr(Vertex n, std::vector<std::int64_t> offsets,
                          std::vector<Vertex> adjacency);

    Vertex num_vertices() const { return n_; }
    std::int64_t num_edges() const { return static_cast<std::int64_t>(adj_.size()) / 2; }

    std::int64_t degree(Vertex v) const {
        check_vertex(v);
        return offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)];
    }

    // Strictly ascending, excludes v itself.
    std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        const auto* base = adj_.data();
        return {base + offsets_[static_cast<std::size_t>(v)],
                base + offsets_[static_cast<std::size_t>(v) + 1]};
    }

    bool has_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    Vertex n_ = 0;
    std::vector<std::int64_t> offsets_ = {0};
    std::vector<Vertex> adj_;
};

// Size of the intersection of two strictly ascending vertex lists.
// This merge is the shared kernel behind triangle counts, induced
// neighborhood degrees and srg detection.
inline std::int64_t sorted_intersection_size(std::span<const Vertex> a,
                                             std::span<const Vertex> b) {
    std::int64_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

std::int64_t min_degree(const Graph& g);

// 2|E|/n, exact; call .to_double() for the floating value.
Rational average_degree(const Graph& g);

// The common degree if the graph is regular, otherwise nullopt.
std::optional<std::int64_t> regularity(const Graph& g);

// Minimum degree of the subgraph induced by N(v). A degree-1 vertex
// yields 0 (single-vertex induced subgraph); degree-0 is a DomainError.
std::int64_t neighborhood_min_degree(const Graph& g, Vertex v);

// min over all v of neighborhood_min_degree(v). DomainError if the
// graph has an isolated vertex.
std::int64_t sigma(const Graph& g);

}  // namespace tcc

#endif
