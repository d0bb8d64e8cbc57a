#include "tcc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "tcc/closed_forms.hpp"
#include "tcc/errors.hpp"
#include "tcc/generators.hpp"
#include "tcc/report_json.hpp"
#include "tcc/triangles.hpp"

namespace tcc {

namespace {

using Clock = std::chrono::steady_clock;

double median_ms(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

template <typename Fn>
double time_ms(Fn&& fn) {
    const auto start = Clock::now();
    fn();
    const auto stop = Clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

BenchResult run_bench(const std::vector<Vertex>& sizes, int repetitions,
                      std::uint64_t seed, int workers, std::int64_t edge_budget) {
    if (repetitions < 1) throw InputError("bench needs at least one repetition");
    BenchResult result;
    result.sizes = sizes;
    result.repetitions = repetitions;
    result.seed = seed;

    std::uint64_t next_seed = seed;
    for (Vertex n : sizes) {
        if (n < 2) throw InputError("bench factor size must be at least 2");
        const double p = 3.0 / static_cast<double>(n - 1);
        const Graph g = erdos_renyi(n, p, next_seed++);
        const Graph h = erdos_renyi(n, p, next_seed++);

        BenchRow row;
        row.factor_n = n;
        row.product_vertices = static_cast<std::int64_t>(n) * n;
        row.product_edges = 2 * g.num_edges() * h.num_edges();

        row.implicit_cc = product_global_cc(g, h, workers);  // warm-up
        std::vector<double> implicit_samples, explicit_samples;
        for (int rep = 0; rep < repetitions; ++rep)
            implicit_samples.push_back(
                time_ms([&] { row.implicit_cc = product_global_cc(g, h, workers); }));

        double explicit_cc = 0.0;
        for (int rep = 0; rep < repetitions; ++rep)
            explicit_samples.push_back(time_ms([&] {
                const Graph product = tensor_product(g, h, edge_budget, workers);
                explicit_cc = global_cc(product, workers);
            }));
        (void)explicit_cc;

        row.implicit_ms = median_ms(std::move(implicit_samples));
        row.explicit_ms = median_ms(std::move(explicit_samples));
        row.speedup = row.implicit_ms > 0.0 ? row.explicit_ms / row.implicit_ms : 0.0;
        result.rows.push_back(row);
    }
    return result;
}

std::string render_bench_text(const BenchResult& result) {
    std::ostringstream out;
    out << "bench: implicit closed form vs materialize-and-count (median of "
        << result.repetitions << " reps, seed " << result.seed << ")\n";
    out << "     n  product_v  product_e  implicit_ms  explicit_ms    speedup\n";
    char line[128];
    for (const auto& row : result.rows) {
        std::snprintf(line, sizeof line, "%6d %10ld %10ld %12.4f %12.4f %10.2f\n",
                      row.factor_n, static_cast<long>(row.product_vertices),
                      static_cast<long>(row.product_edges), row.implicit_ms,
                      row.explicit_ms, row.speedup);
        out << line;
    }
    return out.str();
}

std::string render_bench_json(const BenchResult& result) {
    OrderedJson out;
    out["kind"] = "bench";
    out["sizes"] = result.sizes;
    out["repetitions"] = result.repetitions;
    out["seed"] = result.seed;
    OrderedJson rows = OrderedJson::array();
    for (const auto& row : result.rows) {
        OrderedJson r;
        r["n"] = row.factor_n;
        r["product_vertices"] = row.product_vertices;
        r["product_edges"] = row.product_edges;
        r["implicit_global_cc"] = row.implicit_cc;
        r["implicit_ms"] = row.implicit_ms;
        r["explicit_ms"] = row.explicit_ms;
        r["speedup"] = row.speedup;
        rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    return write_report(out);
}

}  // namespace tcc
