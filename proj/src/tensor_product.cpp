#include "tcc/tensor_product.hpp"

#include <limits>
#include <string>

#include "tcc/errors.hpp"
#include "tcc/parallel.hpp"

namespace tcc {

Graph tensor_product(const Graph& g, const Graph& h, std::int64_t edge_budget,
                     int workers) {
    const Vertex n1 = g.num_vertices();
    const Vertex n2 = h.num_vertices();
    if (n1 == 0 || n2 == 0) throw InputError("tensor product of an empty graph");

    const auto nv_wide = static_cast<std::int64_t>(n1) * n2;
    if (nv_wide > std::numeric_limits<Vertex>::max())
        throw CapacityError("product would have " + std::to_string(nv_wide) +
                            " vertices, beyond the 32-bit vertex index range");
    const auto ne_wide =
        static_cast<__int128>(2) * g.num_edges() * h.num_edges();
    if (ne_wide > edge_budget)
        throw CapacityError("product would have " +
                            std::to_string(static_cast<std::int64_t>(ne_wide)) +
                            " edges, budget is " + std::to_string(edge_budget));

    const Vertex nv = static_cast<Vertex>(nv_wide);
    std::vector<std::int64_t> offsets(static_cast<std::size_t>(nv) + 1, 0);
    for (Vertex u = 0; u < n1; ++u) {
        const std::int64_t du = g.degree(u);
        for (Vertex v = 0; v < n2; ++v)
            offsets[static_cast<std::size_t>(encode_pair(u, v, n2)) + 1] =
                du * h.degree(v);
    }
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];

    std::vector<Vertex> adj(static_cast<std::size_t>(offsets.back()));
    // Each product vertex fills its own slice; neighbors (u', v') emitted
    // with u' ascending then v' ascending are already ascending flat ids.
    parallel_blocks(nv, workers, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t i = lo; i < hi; ++i) {
            const auto [u, v] = decode_pair(i, n2);
            const auto gu = g.neighbors(u);
            const auto hv = h.neighbors(v);
            std::int64_t out = offsets[static_cast<std::size_t>(i)];
            for (Vertex up : gu)
                for (Vertex vp : hv)
                    adj[static_cast<std::size_t>(out++)] =
                        static_cast<Vertex>(encode_pair(up, vp, n2));
        }
    });

    return Graph::from_csr(nv, std::move(offsets), std::move(adj));
}

std::int64_t product_degree(const Graph& g, const Graph& h, Vertex u, Vertex v) {
    return g.degree(u) * h.degree(v);
}

}  // namespace tcc
