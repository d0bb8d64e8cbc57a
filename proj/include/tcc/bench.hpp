#ifndef TCC_BENCH_HPP
#define TCC_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tcc/graph.hpp"
#include "tcc/tensor_product.hpp"

namespace tcc {

// Implicit closed-form evaluation vs materialize-and-count on one
// factor pair. Times are medians over the repetitions; measurement
// only, nothing is asserted.
struct BenchRow {
    Vertex factor_n = 0;
    std::int64_t product_vertices = 0;
    std::int64_t product_edges = 0;
    double implicit_cc = 0.0;
    double implicit_ms = 0.0;
    double explicit_ms = 0.0;
    double speedup = 0.0;
};

struct BenchResult {
    std::vector<Vertex> sizes;
    int repetitions = 0;
    std::uint64_t seed = 0;
    std::vector<BenchRow> rows;
};

inline const std::vector<Vertex> kDefaultBenchSizes = {50, 100, 200, 400};

// Factor pairs are sparse random graphs (edge probability 3/(n-1), so
// roughly 3-regular) drawn from fixed seeds.
BenchResult run_bench(const std::vector<Vertex>& sizes = kDefaultBenchSizes,
                      int repetitions = 5, std::uint64_t seed = 7,
                      int workers = 1,
                      std::int64_t edge_budget = kDefaultEdgeBudget);

std::string render_bench_text(const BenchResult& result);
std::string render_bench_json(const BenchResult& result);

}  // namespace tcc

#endif
