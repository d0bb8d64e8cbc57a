#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "tcc/errors.hpp"
#include "tcc/generators.hpp"
#include "tcc/triangles.hpp"

using tcc::Graph;
using tcc::Vertex;

namespace {

// Third, fully naive triangle oracle: enumerate vertex triples.
std::int64_t triangles_by_triples(const Graph& g, Vertex v) {
    std::int64_t count = 0;
    for (Vertex a = 0; a < g.num_vertices(); ++a) {
        if (a == v || !g.has_edge(v, a)) continue;
        for (Vertex b = a + 1; b < g.num_vertices(); ++b) {
            if (b == v || !g.has_edge(v, b)) continue;
            if (g.has_edge(a, b)) ++count;
        }
    }
    return count;
}

// Hub joined to every rim vertex of a C5.
Graph wheel5() {
    std::vector<Graph::Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % 5));
        edges.emplace_back(i, 5);
    }
    return Graph::from_edges(6, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Graph::Edge> edges;
    for (Vertex u = 0; u < a.num_vertices(); ++u)
        for (Vertex v : a.neighbors(u))
            if (v > u) edges.emplace_back(u, v);
    for (Vertex u = 0; u < b.num_vertices(); ++u)
        for (Vertex v : b.neighbors(u))
            if (v > u)
                edges.emplace_back(static_cast<Vertex>(a.num_vertices() + u),
                                   static_cast<Vertex>(a.num_vertices() + v));
    return Graph::from_edges(a.num_vertices() + b.num_vertices(), edges);
}

}  // namespace

TEST_CASE("triangles_per_vertex on the named families") {
    CHECK(tcc::triangles_per_vertex(tcc::complete(3)) ==
          std::vector<std::int64_t>{1, 1, 1});
    const auto pt = tcc::triangles_per_vertex(tcc::petersen());
    CHECK(std::all_of(pt.begin(), pt.end(), [](std::int64_t t) { return t == 0; }));
    CHECK(tcc::triangles_per_vertex(tcc::complete(4)) ==
          std::vector<std::int64_t>{3, 3, 3, 3});
}

TEST_CASE("local_cc") {
    const Graph k4 = tcc::complete(4);
    for (Vertex v = 0; v < 4; ++v) CHECK(tcc::local_cc(k4, v) == 1.0);

    CHECK(tcc::local_cc(tcc::path(3), 1) == 0.0);

    // wheel hub: degree 5, one triangle per rim edge
    const Graph w5 = wheel5();
    CHECK(triangles_by_triples(w5, 5) == 5);
    CHECK(tcc::local_cc(w5, 5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(tcc::local_cc_exact(w5, 5) == tcc::Rational(1, 2));

    CHECK_THROWS_AS(tcc::local_cc(k4, 4), tcc::InputError);
}

TEST_CASE("global_cc") {
    CHECK(tcc::global_cc(tcc::complete(5)) == 1.0);
    CHECK(tcc::global_cc(tcc::cycle(6)) == 0.0);

    // K3 plus one isolated vertex: three vertices contribute 1, n = 4
    const Graph k3_iso = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tcc::global_cc(k3_iso) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(tcc::global_cc_exact(k3_iso) == tcc::Rational(3, 4));

    CHECK_THROWS_AS(tcc::global_cc(Graph::from_edges(0, {})), tcc::InputError);
}

TEST_CASE("global_cc is 1 exactly for unions of complete components >= K3") {
    CHECK(tcc::global_cc_exact(disjoint_union(tcc::complete(3), tcc::complete(4))) ==
          tcc::Rational(1));
    CHECK(tcc::global_cc_exact(disjoint_union(tcc::complete(3), tcc::complete(2))) !=
          tcc::Rational(1));
    CHECK(tcc::global_cc(tcc::complete(2)) == 0.0);
}

TEST_CASE("is_triangle_free") {
    CHECK(tcc::is_triangle_free(tcc::petersen()));
    CHECK_FALSE(tcc::is_triangle_free(tcc::complete(3)));
    CHECK(tcc::is_triangle_free(tcc::cycle(4)));
    CHECK(tcc::is_triangle_free(tcc::complete_bipartite(3, 3)));
}

TEST_CASE("oracle_triangles spot values") {
    CHECK(tcc::oracle_triangles(tcc::complete(4), 0) == 3);
    CHECK(tcc::oracle_triangles(tcc::cycle(5), 0) == 0);
    const Graph paley13 = tcc::paley(13);
    for (Vertex v = 0; v < 13; ++v) CHECK(tcc::oracle_triangles(paley13, v) == 6);
}

TEST_CASE("merge kernel equals the oracle and the triple scan everywhere") {
    std::vector<Graph> corpus = {tcc::complete(6),          tcc::petersen(),
                                 tcc::paley(13),            tcc::cycle(7),
                                 tcc::complete_bipartite(3, 4), wheel5()};
    for (std::uint64_t seed = 1; seed <= 15; ++seed)
        corpus.push_back(tcc::erdos_renyi(14, 0.45, seed));

    for (const auto& g : corpus) {
        const auto t = tcc::triangles_per_vertex(g);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            CHECK(t[static_cast<std::size_t>(v)] == tcc::oracle_triangles(g, v));
            CHECK(t[static_cast<std::size_t>(v)] == triangles_by_triples(g, v));
        }
    }
}

TEST_CASE("cc_report invariants on a random corpus") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const Graph g = tcc::erdos_renyi(13, 0.5, seed);
        const auto rep = tcc::cc_report(g);

        const std::int64_t sum =
            std::accumulate(rep.triangles.begin(), rep.triangles.end(), std::int64_t{0});
        CHECK(sum % 3 == 0);
        CHECK(rep.triangle_total == sum / 3);
        CHECK(rep.global_cc >= 0.0);
        CHECK(rep.global_cc <= 1.0);

        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            const auto idx = static_cast<std::size_t>(v);
            CHECK(rep.local_cc[idx] >= 0.0);
            CHECK(rep.local_cc[idx] <= 1.0);
            const bool zero = g.degree(v) <= 1 || rep.triangles[idx] == 0;
            CHECK((rep.local_cc[idx] == 0.0) == zero);
            // local cc is 1 iff the neighborhood is complete and deg >= 2
            const std::int64_t d = g.degree(v);
            const bool complete_nbhd = d >= 2 && rep.triangles[idx] == d * (d - 1) / 2;
            CHECK((rep.local_cc[idx] == 1.0) == complete_nbhd);
        }
    }
}

TEST_CASE("worker count never changes results") {
    const Graph small = tcc::erdos_renyi(40, 0.2, 5);
    CHECK(tcc::triangles_per_vertex(small, 1) == tcc::triangles_per_vertex(small, 4));
    CHECK(tcc::global_cc(small, 1) == tcc::global_cc(small, 4));

    // past the serial-fallback grain, so threads really run
    const Graph large = tcc::erdos_renyi(2500, 0.004, 6);
    CHECK(tcc::triangles_per_vertex(large, 1) == tcc::triangles_per_vertex(large, 4));
    CHECK(tcc::global_cc(large, 1) == tcc::global_cc(large, 4));
}

TEST_CASE("relabeling invariance of the coefficients") {
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = tcc::erdos_renyi(12, 0.5, seed);
        std::vector<Vertex> perm(12);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        std::vector<Graph::Edge> edges;
        for (Vertex u = 0; u < 12; ++u)
            for (Vertex v : g.neighbors(u))
                if (v > u) edges.emplace_back(perm[u], perm[v]);
        const Graph pg = Graph::from_edges(12, edges);

        CHECK(tcc::global_cc_exact(pg) == tcc::global_cc_exact(g));
        CHECK(tcc::global_cc(pg) == doctest::Approx(tcc::global_cc(g)).epsilon(1e-12));
        for (Vertex v = 0; v < 12; ++v)
            CHECK(tcc::local_cc(pg, perm[v]) == tcc::local_cc(g, v));
    }
}
