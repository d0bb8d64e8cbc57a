#include "tcc/triangles.hpp"

#include <algorithm>

#include "tcc/errors.hpp"
#include "tcc/parallel.hpp"

namespace tcc {

namespace {

// t(v) by merge-intersection: every edge of <N(v)> is seen once from
// each endpoint, so the sum over neighbors is 2 t(v).
std::int64_t merge_triangles_at(const Graph& g, Vertex v) {
    const auto nbrs = g.neighbors(v);
    std::int64_t twice = 0;
    for (Vertex u : nbrs) twice += sorted_intersection_size(nbrs, g.neighbors(u));
    return twice / 2;
}

std::int64_t pairs(std::int64_t d) { return d * (d - 1) / 2; }

}  // namespace

std::int64_t triangle_count_at(const Graph& g, Vertex v) {
    return merge_triangles_at(g, v);
}

std::vector<std::int64_t> triangles_per_vertex(const Graph& g, int workers) {
    std::vector<std::int64_t> t(static_cast<std::size_t>(g.num_vertices()), 0);
    parallel_blocks(g.num_vertices(), workers, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t v = lo; v < hi; ++v)
            t[static_cast<std::size_t>(v)] = merge_triangles_at(g, static_cast<Vertex>(v));
    });
    return t;
}

double local_cc(const Graph& g, Vertex v) {
    const std::int64_t d = g.degree(v);
    if (d <= 1) return 0.0;
    return static_cast<double>(merge_triangles_at(g, v)) / static_cast<double>(pairs(d));
}

Rational local_cc_exact(const Graph& g, Vertex v) {
    const std::int64_t d = g.degree(v);
    if (d <= 1) return Rational(0);
    return Rational(merge_triangles_at(g, v), pairs(d));
}

double global_cc(const Graph& g, int workers) {
    return cc_report(g, workers).global_cc;
}

Rational global_cc_exact(const Graph& g, int workers) {
    if (g.num_vertices() == 0) throw InputError("global_cc of empty graph");
    const auto t = triangles_per_vertex(g, workers);
    Rational sum(0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const std::int64_t d = g.degree(v);
        if (d >= 2) sum += Rational(t[static_cast<std::size_t>(v)], pairs(d));
    }
    return sum / Rational(g.num_vertices());
}

bool is_triangle_free(const Graph& g, int workers) {
    const auto t = triangles_per_vertex(g, workers);
    return std::all_of(t.begin(), t.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t oracle_triangles(const Graph& g, Vertex v) {
    const auto nbrs = g.neighbors(v);
    std::int64_t count = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (g.has_edge(nbrs[i], nbrs[j])) ++count;
    return count;
}

CcReport cc_report(const Graph& g, int workers) {
    if (g.num_vertices() == 0) throw InputError("global_cc of empty graph");
    CcReport rep;
    rep.triangles = triangles_per_vertex(g, workers);
    rep.local_cc.resize(rep.triangles.size(), 0.0);

    std::int64_t triangle_sum = 0;
    double cc_sum = 0.0;  // serial, in index order, for worker-count independence
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto idx = static_cast<std::size_t>(v);
        const std::int64_t d = g.degree(v);
        triangle_sum += rep.triangles[idx];
        if (d >= 2 && rep.triangles[idx] > 0)
            rep.local_cc[idx] =
                static_cast<double>(rep.triangles[idx]) / static_cast<double>(pairs(d));
        cc_sum += rep.local_cc[idx];
    }
    rep.triangle_total = triangle_sum / 3;
    rep.global_cc = cc_sum / static_cast<double>(g.num_vertices());
    return rep;
}

}  // namespace tcc
