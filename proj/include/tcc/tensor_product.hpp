#ifndef TCC_TENSOR_PRODUCT_HPP
#define TCC_TENSOR_PRODUCT_HPP

#include <cstdint>
#include <utility>

#include "tcc/graph.hpp"

namespace tcc {

// Row-major pairing of factor vertices with the product's flat ids:
// (u, v) <-> u * n2 + v. Fixed so implicit and explicit results can be
// compared per-vertex.
inline std::int64_t encode_pair(Vertex u, Vertex v, Vertex n2) {
    return static_cast<std::int64_t>(u) * n2 + v;
}

inline std::pair<Vertex, Vertex> decode_pair(std::int64_t index, Vertex n2) {
    return {static_cast<Vertex>(index / n2), static_cast<Vertex>(index % n2)};
}

// Explicit materialization is a verification oracle, not the scalable
// path; products beyond this many edges are rejected by default.
inline constexpr std::int64_t kDefaultEdgeBudget = 100'000'000;

// Graph on V(G) x V(H) where (u,v)(u',v') is an edge iff uu' in E(G)
// and vv' in E(H). |E| = 2 |E(G)| |E(H)|. Throws CapacityError when the
// vertex count overflows the index range or the edge count exceeds
// edge_budget.
Graph tensor_product(const Graph& g, const Graph& h,
                     std::int64_t edge_budget = kDefaultEdgeBudget, int workers = 1);

// deg(u) * deg(v); equals the degree of encode_pair(u, v) in the
// materialized product.
std::int64_t product_degree(const Graph& g, const Graph& h, Vertex u, Vertex v);

}  // namespace tcc

#endif
