#include <doctest.h>

#include <queue>
#include <vector>

#include "tcc/errors.hpp"
#include "tcc/generators.hpp"
#include "tcc/tensor_product.hpp"
#include "tcc/triangles.hpp"

using tcc::Graph;
using tcc::Vertex;

namespace {

// Independent oracle: enumerate all product vertex pairs and apply the
// adjacency condition directly.
Graph product_by_definition(const Graph& g, const Graph& h) {
    const Vertex n1 = g.num_vertices();
    const Vertex n2 = h.num_vertices();
    const Vertex n = static_cast<Vertex>(n1 * n2);
    std::vector<Graph::Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        const auto [u, v] = tcc::decode_pair(a, n2);
        for (Vertex b = static_cast<Vertex>(a + 1); b < n; ++b) {
            const auto [up, vp] = tcc::decode_pair(b, n2);
            if (g.has_edge(u, up) && h.has_edge(v, vp))
                edges.emplace_back(a, b);
        }
    }
    return Graph::from_edges(n, edges);
}

std::int64_t component_size_of(const Graph& g, Vertex start) {
    std::vector<bool> seen(g.num_vertices(), false);
    std::queue<Vertex> queue;
    queue.push(start);
    seen[start] = true;
    std::int64_t size = 0;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        ++size;
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                queue.push(w);
            }
    }
    return size;
}

}  // namespace

TEST_CASE("pair encoding is a bijection") {
    const Vertex n1 = 7, n2 = 11;
    for (Vertex u = 0; u < n1; ++u)
        for (Vertex v = 0; v < n2; ++v) {
            const auto idx = tcc::encode_pair(u, v, n2);
            CHECK(idx >= 0);
            CHECK(idx < static_cast<std::int64_t>(n1) * n2);
            CHECK(tcc::decode_pair(idx, n2) == std::pair<Vertex, Vertex>{u, v});
        }
}

TEST_CASE("K2 x K2 is two disjoint edges") {
    const Graph p = tcc::tensor_product(tcc::complete(2), tcc::complete(2));
    CHECK(p.num_vertices() == 4);
    CHECK(p.num_edges() == 2);
    for (Vertex v = 0; v < 4; ++v) CHECK(p.degree(v) == 1);
}

TEST_CASE("K3 x K3: nine vertices, eighteen edges, two triangles per vertex") {
    const Graph k3 = tcc::complete(3);
    const Graph p = tcc::tensor_product(k3, k3);
    CHECK(p.num_vertices() == 9);
    CHECK(p.num_edges() == 18);
    for (Vertex v = 0; v < 9; ++v) {
        CHECK(p.degree(v) == 4);
        CHECK(tcc::oracle_triangles(p, v) == 2);
        CHECK(tcc::local_cc_exact(p, v) == tcc::Rational(1, 3));
    }
    CHECK(p == product_by_definition(k3, k3));
}

TEST_CASE("C4 x K2 is two disjoint 4-cycles") {
    const Graph p = tcc::tensor_product(tcc::cycle(4), tcc::complete(2));
    CHECK(p.num_vertices() == 8);
    CHECK(p.num_edges() == 8);
    CHECK(tcc::regularity(p) == 2);
    CHECK(tcc::is_triangle_free(p));
    CHECK(component_size_of(p, 0) == 4);
    CHECK(p == product_by_definition(tcc::cycle(4), tcc::complete(2)));
}

TEST_CASE("materialization equals the definitional oracle on a corpus") {
    std::vector<std::pair<Graph, Graph>> pairs;
    pairs.emplace_back(tcc::petersen(), tcc::complete(3));
    pairs.emplace_back(tcc::path(4), tcc::cycle(5));
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
        pairs.emplace_back(tcc::erdos_renyi(9, 0.5, seed),
                           tcc::erdos_renyi(8, 0.5, seed + 100));

    for (const auto& [g, h] : pairs) {
        const Graph p = tcc::tensor_product(g, h);
        CHECK(p == product_by_definition(g, h));
        CHECK(p.num_edges() == 2 * g.num_edges() * h.num_edges());
        for (Vertex u = 0; u < g.num_vertices(); ++u)
            for (Vertex v = 0; v < h.num_vertices(); ++v)
                CHECK(p.degree(static_cast<Vertex>(
                          tcc::encode_pair(u, v, h.num_vertices()))) ==
                      tcc::product_degree(g, h, u, v));
    }
}

TEST_CASE("product degree spot values") {
    const Graph k3 = tcc::complete(3);
    CHECK(tcc::product_degree(k3, k3, 0, 1) == 4);
    CHECK(tcc::product_degree(tcc::path(3), k3, 0, 0) == 2);
    const Graph pet = tcc::petersen();
    const Graph k4 = tcc::complete(4);
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = 0; v < 4; ++v) CHECK(tcc::product_degree(pet, k4, u, v) == 9);
}

TEST_CASE("commutes up to relabeling") {
    const Graph g = tcc::erdos_renyi(8, 0.5, 3);
    const Graph h = tcc::paley(5);
    const auto gh = tcc::global_cc_exact(tcc::tensor_product(g, h));
    const auto hg = tcc::global_cc_exact(tcc::tensor_product(h, g));
    CHECK(gh == hg);
}

TEST_CASE("triangle-free factor makes the product triangle-free") {
    const std::vector<Graph> free_factors = {tcc::cycle(6), tcc::petersen(),
                                             tcc::complete_bipartite(3, 3)};
    const Graph other = tcc::erdos_renyi(9, 0.6, 2);
    for (const auto& f : free_factors)
        CHECK(tcc::is_triangle_free(tcc::tensor_product(f, other)));
}

TEST_CASE("empty factors and capacity are rejected") {
    const Graph empty = Graph::from_edges(0, {});
    CHECK_THROWS_AS(tcc::tensor_product(empty, tcc::complete(3)), tcc::InputError);
    // 2 * 1225 * 1225 edges, way past a budget of 1000
    CHECK_THROWS_AS(tcc::tensor_product(tcc::complete(50), tcc::complete(50), 1000),
                    tcc::CapacityError);
}

TEST_CASE("parallel materialization matches sequential") {
    // 50 * 50 product vertices, past the serial-fallback grain
    const Graph g = tcc::erdos_renyi(50, 0.15, 11);
    const Graph h = tcc::erdos_renyi(50, 0.15, 12);
    CHECK(tcc::tensor_product(g, h, tcc::kDefaultEdgeBudget, 1) ==
          tcc::tensor_product(g, h, tcc::kDefaultEdgeBudget, 4));
}
