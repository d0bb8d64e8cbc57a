#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "tcc/errors.hpp"
#include "tcc/generators.hpp"
#include "tcc/graph.hpp"

using tcc::Graph;
using tcc::Vertex;

namespace {

// Independent sigma oracle: adjacency-matrix scan, no sorted-list merge.
std::int64_t sigma_by_matrix(const Graph& g) {
    const Vertex n = g.num_vertices();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w : g.neighbors(u)) adj[u][w] = true;
    std::int64_t best = -1;
    for (Vertex v = 0; v < n; ++v) {
        const auto nbrs = g.neighbors(v);
        std::int64_t local_min = -1;
        for (Vertex u : nbrs) {
            std::int64_t deg_in = 0;
            for (Vertex w : nbrs)
                if (adj[u][w]) ++deg_in;
            if (local_min < 0 || deg_in < local_min) local_min = deg_in;
        }
        if (best < 0 || local_min < best) best = local_min;
    }
    return best;
}

Graph permuted(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<Graph::Edge> edges;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        for (Vertex v : g.neighbors(u))
            if (v > u) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.num_vertices(), edges);
}

}  // namespace

TEST_CASE("from_edges builds K3 and deduplicates") {
    const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.num_vertices() == 3);
    CHECK(k3.num_edges() == 3);
    for (Vertex v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    const Graph single = Graph::from_edges(2, {{0, 1}, {1, 0}});
    CHECK(single.num_edges() == 1);

    const Graph dup = Graph::from_edges(2, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(dup == single);
}

TEST_CASE("from_edges rejects bad input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), tcc::InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), tcc::InputError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), tcc::InputError);
}

TEST_CASE("from_csr validates the layout it adopts") {
    CHECK(Graph::from_csr(2, {0, 1, 2}, {1, 0}) == tcc::complete(2));
    CHECK_THROWS_AS(Graph::from_csr(2, {0, 1}, {1, 0}), tcc::InputError);
    CHECK_THROWS_AS(Graph::from_csr(2, {0, 1, 2}, {1, 5}), tcc::InputError);
    CHECK_THROWS_AS(Graph::from_csr(1, {0, 1}, {0}), tcc::InputError);       // self-loop
    CHECK_THROWS_AS(Graph::from_csr(2, {0, 2, 2}, {1, 1}), tcc::InputError); // not ascending
}

TEST_CASE("degree and neighbors") {
    const Graph p3 = tcc::path(3);
    CHECK(p3.degree(1) == 2);
    CHECK(p3.degree(0) == 1);
    CHECK_THROWS_AS(p3.degree(3), tcc::InputError);

    const Graph k3 = tcc::complete(3);
    const auto nbrs = k3.neighbors(1);
    CHECK(std::vector<Vertex>(nbrs.begin(), nbrs.end()) == std::vector<Vertex>{0, 2});

    const Graph edgeless = Graph::from_edges(4, {});
    CHECK(edgeless.neighbors(2).empty());

    const Graph c4 = tcc::cycle(4);
    const auto c4n = c4.neighbors(0);
    CHECK(std::vector<Vertex>(c4n.begin(), c4n.end()) == std::vector<Vertex>{1, 3});

    CHECK(k3.has_edge(0, 2));
    CHECK_FALSE(c4.has_edge(0, 2));
}

TEST_CASE("min_degree") {
    CHECK(tcc::min_degree(tcc::complete(4)) == 3);
    CHECK(tcc::min_degree(tcc::path(3)) == 1);
    const Graph isolated = Graph::from_edges(4, {{0, 1}, {1, 2}});
    CHECK(tcc::min_degree(isolated) == 0);
    CHECK_THROWS_AS(tcc::min_degree(Graph::from_edges(0, {})), tcc::InputError);
}

TEST_CASE("average_degree is exact") {
    CHECK(tcc::average_degree(tcc::complete(4)) == tcc::Rational(3));
    CHECK(tcc::average_degree(tcc::path(3)) == tcc::Rational(4, 3));
    CHECK(tcc::average_degree(tcc::cycle(5)) == tcc::Rational(2));
    CHECK(tcc::average_degree(tcc::path(3)).to_double() ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("regularity") {
    CHECK(tcc::regularity(tcc::cycle(6)) == 2);
    CHECK_FALSE(tcc::regularity(tcc::path(3)).has_value());
    CHECK(tcc::regularity(tcc::petersen()) == 3);
}

TEST_CASE("neighborhood_min_degree") {
    const Graph k4 = tcc::complete(4);
    for (Vertex v = 0; v < 4; ++v) CHECK(tcc::neighborhood_min_degree(k4, v) == 2);
    const Graph c5 = tcc::cycle(5);
    for (Vertex v = 0; v < 5; ++v) CHECK(tcc::neighborhood_min_degree(c5, v) == 0);
    const Graph k3 = tcc::complete(3);
    for (Vertex v = 0; v < 3; ++v) CHECK(tcc::neighborhood_min_degree(k3, v) == 1);

    // degree-1 vertex: single-vertex induced subgraph
    CHECK(tcc::neighborhood_min_degree(tcc::path(3), 0) == 0);
    const Graph isolated = Graph::from_edges(2, {});
    CHECK_THROWS_AS(tcc::neighborhood_min_degree(isolated, 0), tcc::DomainError);
}

TEST_CASE("sigma") {
    CHECK(tcc::sigma(tcc::complete(4)) == 2);
    CHECK(tcc::sigma(tcc::petersen()) == 0);

    const Graph paley13 = tcc::paley(13);
    CHECK(sigma_by_matrix(paley13) == 2);
    CHECK(tcc::sigma(paley13) == 2);

    const Graph isolated = Graph::from_edges(4, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(tcc::sigma(isolated), tcc::DomainError);
}

TEST_CASE("sigma equals the matrix oracle on random graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = tcc::erdos_renyi(12, 0.6, seed);
        if (tcc::min_degree(g) < 1) continue;
        CHECK(tcc::sigma(g) == sigma_by_matrix(g));
    }
}

TEST_CASE("structural invariants on a random corpus") {
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const Graph g = tcc::erdos_renyi(15, 0.4, seed);

        std::int64_t degree_sum = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            degree_sum += g.degree(v);
            CHECK(static_cast<std::int64_t>(g.neighbors(v).size()) == g.degree(v));
            if (g.degree(v) >= 1) {
                const auto nmd = tcc::neighborhood_min_degree(g, v);
                CHECK(nmd >= 0);
                CHECK(nmd <= g.degree(v) - 1);
            }
        }
        CHECK(degree_sum == 2 * g.num_edges());
        if (tcc::min_degree(g) >= 1)
            CHECK(tcc::sigma(g) <= tcc::min_degree(g) - 1);

        // permutation of the edge list yields the identical Graph
        std::vector<Graph::Edge> edges;
        for (Vertex u = 0; u < g.num_vertices(); ++u)
            for (Vertex v : g.neighbors(u))
                if (v > u) edges.emplace_back(u, v);
        std::shuffle(edges.begin(), edges.end(), rng);
        for (auto& e : edges)
            if (rng() % 2) std::swap(e.first, e.second);
        CHECK(Graph::from_edges(g.num_vertices(), edges) == g);
    }
}

TEST_CASE("relabeling keeps degrees and sigma") {
    std::mt19937_64 rng(7);
    const Graph g = tcc::paley(13);
    std::vector<Vertex> perm(13);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph pg = permuted(g, perm);
    CHECK(tcc::min_degree(pg) == tcc::min_degree(g));
    CHECK(tcc::sigma(pg) == tcc::sigma(g));
    CHECK(tcc::average_degree(pg) == tcc::average_degree(g));
}
