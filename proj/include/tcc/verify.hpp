#ifndef TCC_VERIFY_HPP
#define TCC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tcc/closed_forms.hpp"
#include "tcc/graph.hpp"

namespace tcc {

enum class CheckStatus { Pass, Fail, NotApplicable };

using DetailValue = std::variant<std::int64_t, double, bool, std::string>;

// One verification check: implicit closed form against the materialized
// product, or a bound / formula identity. Details are ordered so the
// rendered output is stable.
struct VerifyCheck {
    std::string name;
    CheckStatus status = CheckStatus::NotApplicable;
    std::string note;
    std::vector<std::pair<std::string, DetailValue>> details;
};

struct VerifyOptions {
    std::int64_t edge_budget = kDefaultEdgeBudget;
    int workers = 1;
    Vertex srg_size_cap = kDefaultSrgSizeCap;
};

struct VerifyResult {
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

// Materializes G x H (subject to the edge budget) and runs, in order:
//   product_triangle_count          per-vertex t = 2 t_G t_H, exact
//   local_cc_factorization          pointwise closed form vs product
//   global_cc_implicit_vs_explicit  global closed form vs product
//   upper_bound_product_of_factor_cc  Cc(GxH) <= Cc(G) Cc(H)
//   lower_bound_sigma_over_avg_degree Cc(GxH) >= sigma sigma / (dd - 1)
//   regular_product_formula         exact, regular factors only
//   srg_factor_cc_formula           exact, srg factors only
//   srg_product_formula_sharpness   exact, srg factors only
// Checks whose hypothesis fails are reported not-applicable, never
// silently skipped. Output is independent of the worker count.
VerifyResult run_verify(const Graph& g, const Graph& h, const VerifyOptions& options);

// Stable text rendering: one status line per check plus a summary line.
std::string render_verify_text(const VerifyResult& result);

}  // namespace tcc

#endif
