#ifndef TCC_CLOSED_FORMS_HPP
#define TCC_CLOSED_FORMS_HPP

#include <cstdint>
#include <optional>

#include "tcc/graph.hpp"
#include "tcc/rational.hpp"
#include "tcc/tensor_product.hpp"

namespace tcc {

// Absolute tolerance for implicit-vs-explicit floating comparisons.
// Both paths are short sums of small exactly-representable rationals,
// so this leaves orders of magnitude of headroom.
inline constexpr double kCcTolerance = 1e-12;

// Strongly regular graph parameters: d-regular on n vertices, adjacent
// pairs share mu1 common neighbors, non-adjacent pairs mu2. mu2 is
// absent exactly when no non-adjacent pair exists (complete graph).
struct SrgParams {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::int64_t mu1 = 0;
    std::optional<std::int64_t> mu2;
};

// Triangles at a product vertex: 2 * t_G(u) * t_H(v). Each pair of
// factor triangles yields two product triangles.
std::int64_t product_triangles(std::int64_t tg_u, std::int64_t th_v);

// (deg_G u - 1)(deg_H v - 1) / (deg_G u * deg_H v - 1); lies in (0, 1)
// for degrees >= 2. DomainError below degree 2.
double coupling_factor(std::int64_t deg_g_u, std::int64_t deg_h_v);
Rational coupling_factor_exact(std::int64_t deg_g_u, std::int64_t deg_h_v);

// Local clustering coefficient of a product vertex from the factor
// statistics alone. Uses the coupling-factor form when both degrees are
// >= 2 and the direct triangles-over-pairs form otherwise, so it is
// defined for all simple graphs and always matches the materialized
// product.
double product_local_cc_from_stats(std::int64_t tg, std::int64_t dg,
                                   std::int64_t th, std::int64_t dh);
Rational product_local_cc_exact_from_stats(std::int64_t tg, std::int64_t dg,
                                           std::int64_t th, std::int64_t dh);

double product_local_cc(const Graph& g, const Graph& h, Vertex u, Vertex v);
Rational product_local_cc_exact(const Graph& g, const Graph& h, Vertex u, Vertex v);

// Global clustering coefficient of G x H without materializing it:
// (1/(n1 n2)) * sum over (u, v) of the local closed form. Vertices are
// grouped by (degree, triangle count), so the double sum runs over
// class pairs; results are identical for every worker count.
double product_global_cc(const Graph& g, const Graph& h, int workers = 1);
Rational product_global_cc_exact(const Graph& g, const Graph& h, int workers = 1);

// Cc(G x H) <= Cc(G) * Cc(H); strict when both factors contain a
// triangle, equality when one is triangle-free. The hypothesis (both
// min degrees >= 2) gates `applicable`; the numbers are reported either
// way.
struct UpperBoundCheck {
    bool applicable = false;
    double bound = 0.0;
    bool holds = false;
    bool strict_expected = false;
};
UpperBoundCheck cc_upper_bound_check(const Graph& g, const Graph& h, int workers = 1);

// sigma_G * sigma_H / (avg_deg_G * avg_deg_H - 1), exact. nullopt when
// a factor has min degree < 2 (hypothesis not met).
std::optional<Rational> cc_lower_bound(const Graph& g, const Graph& h);

// For d_G- and d_H-regular factors with d >= 2:
// ((d_G-1)(d_H-1)/(d_G d_H - 1)) * Cc(G) * Cc(H), exact.
// DomainError on non-regular factors or regularity < 2.
Rational regular_product_cc(const Graph& g, const Graph& h, int workers = 1);

// Detection is a verification aid, not a production kernel; the
// O(n^2 d) pair scan is capped.
inline constexpr Vertex kDefaultSrgSizeCap = 5000;

// Present iff g is regular with uniform common-neighbor counts over
// adjacent and over non-adjacent pairs. CapacityError above size_cap.
std::optional<SrgParams> srg_detect(const Graph& g, Vertex size_cap = kDefaultSrgSizeCap);

// Cc of a strongly regular graph: mu1 / (d - 1). DomainError for d < 2.
Rational srg_cc(const SrgParams& p);

// Cc(G x H) for strongly regular factors: mu1^G mu1^H / (d_G d_H - 1).
// Coincides with cc_lower_bound on the same factors (the bound is sharp
// there). DomainError for d < 2.
Rational srg_product_cc(const SrgParams& pg, const SrgParams& ph);

enum class ProductMode { Implicit, Explicit, Both };

// Implicit (closed-form) and optionally explicit global cc for a factor
// pair plus the two bounds. Exact companions are filled in exact mode.
struct ProductCcReport {
    double implicit_global_cc = 0.0;
    std::optional<double> explicit_global_cc;
    std::optional<double> abs_diff;
    double upper_bound = 0.0;
    bool upper_ok = false;
    std::optional<double> lower_bound;  // present only when both min degrees >= 2
    bool lower_ok = true;
    std::optional<Rational> implicit_exact;
    std::optional<Rational> explicit_exact;
    std::optional<Rational> upper_bound_exact;
    std::optional<Rational> lower_bound_exact;
};

ProductCcReport product_cc_report(const Graph& g, const Graph& h, ProductMode mode,
                                  bool exact = false,
                                  std::int64_t edge_budget = kDefaultEdgeBudget,
                                  int workers = 1);

}  // namespace tcc

#endif
