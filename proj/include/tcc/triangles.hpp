#ifndef TCC_TRIANGLES_HPP
#define TCC_TRIANGLES_HPP

#include <cstdint>
#include <vector>

#include "tcc/graph.hpp"
#include "tcc/rational.hpp"

namespace tcc {

// Per-vertex triangle counts and clustering coefficients of one graph.
struct CcReport {
    std::vector<std::int64_t> triangles;  // t(v) = edges among N(v)
    std::vector<double> local_cc;         // 0 when deg <= 1, else t / C(deg, 2)
    double global_cc = 0.0;               // mean of local_cc over all n vertices
    std::int64_t triangle_total = 0;      // distinct triangles = sum t(v) / 3
};

// t(v) for every vertex via merge-intersection of sorted neighbor
// lists. Pure map over vertices; identical output for any worker count.
std::vector<std::int64_t> triangles_per_vertex(const Graph& g, int workers = 1);

// t(v) for a single vertex, same merge kernel.
std::int64_t triangle_count_at(const Graph& g, Vertex v);

double local_cc(const Graph& g, Vertex v);
Rational local_cc_exact(const Graph& g, Vertex v);

// (1/n) * sum over vertices with deg >= 2 of local_cc(v); vertices with
// deg <= 1 contribute 0 but still count in n.
double global_cc(const Graph& g, int workers = 1);
Rational global_cc_exact(const Graph& g, int workers = 1);

bool is_triangle_free(const Graph& g, int workers = 1);

// Independent verification oracle: double loop over neighbor pairs with
// a binary-search adjacency test. Deliberately shares nothing with the
// merge-intersection kernel.
std::int64_t oracle_triangles(const Graph& g, Vertex v);

CcReport cc_report(const Graph& g, int workers = 1);

}  // namespace tcc

#endif
