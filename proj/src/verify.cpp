#include "tcc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "tcc/errors.hpp"
#include "tcc/report_json.hpp"
#include "tcc/triangles.hpp"

namespace tcc {

bool VerifyResult::all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const VerifyCheck& c) {
        return c.status == CheckStatus::Fail;
    });
}

namespace {

void put(VerifyCheck& c, std::string key, DetailValue value) {
    c.details.emplace_back(std::move(key), std::move(value));
}

std::string srg_string(const SrgParams& p) {
    return "srg(" + std::to_string(p.n) + "," + std::to_string(p.d) + "," +
           std::to_string(p.mu1) + "," +
           (p.mu2 ? std::to_string(*p.mu2) : std::string("-")) + ")";
}

std::optional<SrgParams> try_srg(const Graph& g, Vertex cap) {
    if (g.num_vertices() < 2 || g.num_vertices() > cap) return std::nullopt;
    return srg_detect(g, cap);
}

}  // namespace

VerifyResult run_verify(const Graph& g, const Graph& h, const VerifyOptions& options) {
    VerifyResult result;
    const Vertex n1 = g.num_vertices();
    const Vertex n2 = h.num_vertices();

    const auto tg = triangles_per_vertex(g, options.workers);
    const auto th = triangles_per_vertex(h, options.workers);

    const Graph product = tensor_product(g, h, options.edge_budget, options.workers);
    const CcReport product_rep = cc_report(product, options.workers);
    const double implicit_cc = product_global_cc(g, h, options.workers);

    const auto deg_g = regularity(g);
    const auto deg_h = regularity(h);
    const bool both_regular = deg_g && deg_h;

    // Exact implicit value, computed once on demand. Cheap whenever it
    // is needed: regular factors collapse to few (degree, t) classes and
    // triangle-free factors make every term zero.
    std::optional<Rational> implicit_exact;
    auto exact_implicit = [&]() -> const Rational& {
        if (!implicit_exact)
            implicit_exact = product_global_cc_exact(g, h, options.workers);
        return *implicit_exact;
    };

    {
        VerifyCheck c;
        c.name = "product_triangle_count";
        std::int64_t mismatches = 0;
        for (Vertex u = 0; u < n1; ++u) {
            for (Vertex v = 0; v < n2; ++v) {
                const auto idx = static_cast<std::size_t>(encode_pair(u, v, n2));
                const std::int64_t expected =
                    product_triangles(tg[static_cast<std::size_t>(u)],
                                      th[static_cast<std::size_t>(v)]);
                if (product_rep.triangles[idx] != expected) ++mismatches;
            }
        }
        put(c, "vertices_checked", static_cast<std::int64_t>(n1) * n2);
        put(c, "mismatches", mismatches);
        put(c, "tolerance", std::string("exact"));
        c.status = mismatches == 0 ? CheckStatus::Pass : CheckStatus::Fail;
        result.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c;
        c.name = "local_cc_factorization";
        double max_diff = 0.0;
        for (Vertex u = 0; u < n1; ++u) {
            for (Vertex v = 0; v < n2; ++v) {
                const auto idx = static_cast<std::size_t>(encode_pair(u, v, n2));
                const double closed = product_local_cc_from_stats(
                    tg[static_cast<std::size_t>(u)], g.degree(u),
                    th[static_cast<std::size_t>(v)], h.degree(v));
                max_diff = std::max(max_diff,
                                    std::fabs(closed - product_rep.local_cc[idx]));
            }
        }
        put(c, "max_abs_diff", max_diff);
        put(c, "tolerance", kCcTolerance);
        c.status = max_diff <= kCcTolerance ? CheckStatus::Pass : CheckStatus::Fail;
        result.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c;
        c.name = "global_cc_implicit_vs_explicit";
        const double diff = std::fabs(implicit_cc - product_rep.global_cc);
        put(c, "implicit", implicit_cc);
        put(c, "explicit", product_rep.global_cc);
        put(c, "abs_diff", diff);
        put(c, "tolerance", kCcTolerance);
        c.status = diff <= kCcTolerance ? CheckStatus::Pass : CheckStatus::Fail;
        result.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c;
        c.name = "upper_bound_product_of_factor_cc";
        const auto ub = cc_upper_bound_check(g, h, options.workers);
        if (!ub.applicable) {
            c.status = CheckStatus::NotApplicable;
            c.note = "hypothesis not met: a factor has min degree < 2";
        } else {
            put(c, "implicit", implicit_cc);
            put(c, "bound", ub.bound);
            put(c, "tolerance", kCcTolerance);
            bool ok = ub.holds;
            if (ub.strict_expected) {
                ok = ok && implicit_cc < ub.bound;
                c.note = "strict inequality (both factors contain a triangle)";
            } else {
                // One factor triangle-free: both sides are exactly zero.
                const Rational bound_exact =
                    global_cc_exact(g, options.workers) * global_cc_exact(h, options.workers);
                ok = ok && exact_implicit().is_zero() && bound_exact.is_zero();
                c.note = "equality (triangle-free factor)";
            }
            c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        }
        result.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c;
        c.name = "lower_bound_sigma_over_avg_degree";
        const auto lb = cc_lower_bound(g, h);
        if (!lb) {
            c.status = CheckStatus::NotApplicable;
            c.note = "hypothesis not met: a factor has min degree < 2";
        } else {
            const double bound = lb->to_double();
            put(c, "implicit", implicit_cc);
            put(c, "bound", bound);
            put(c, "bound_exact", lb->to_string());
            put(c, "tolerance", kCcTolerance);
            c.status = implicit_cc >= bound - kCcTolerance ? CheckStatus::Pass
                                                           : CheckStatus::Fail;
            if (both_regular && exact_implicit() == *lb) c.note = "sharp (equality)";
        }
        result.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c;
        c.name = "regular_product_formula";
        if (!both_regular) {
            c.status = CheckStatus::NotApplicable;
            c.note = "a factor is not regular";
        } else if (*deg_g < 2 || *deg_h < 2) {
            c.status = CheckStatus::NotApplicable;
            c.note = "regularity < 2";
        } else {
            const Rational formula = regular_product_cc(g, h, options.workers);
            const double float_diff = std::fabs(formula.to_double() - implicit_cc);
            put(c, "formula", formula.to_string());
            put(c, "implicit_exact", exact_implicit().to_string());
            put(c, "float_abs_diff", float_diff);
            put(c, "tolerance", std::string("exact"));
            c.status = formula == exact_implicit() && float_diff <= kCcTolerance
                           ? CheckStatus::Pass
                           : CheckStatus::Fail;
        }
        result.checks.push_back(std::move(c));
    }

    const auto srg_g = try_srg(g, options.srg_size_cap);
    const auto srg_h = try_srg(h, options.srg_size_cap);
    const char* srg_gap = nullptr;
    if (g.num_vertices() > options.srg_size_cap || h.num_vertices() > options.srg_size_cap)
        srg_gap = "srg detection skipped: factor exceeds the size cap";
    else if (!srg_g || !srg_h)
        srg_gap = "a factor is not strongly regular";
    else if (srg_g->d < 2 || srg_h->d < 2)
        srg_gap = "srg degree < 2";

    {
        VerifyCheck c;
        c.name = "srg_factor_cc_formula";
        if (srg_gap) {
            c.status = CheckStatus::NotApplicable;
            c.note = srg_gap;
        } else {
            const Rational cc_g = srg_cc(*srg_g);
            const Rational cc_h = srg_cc(*srg_h);
            const bool ok = cc_g == global_cc_exact(g, options.workers) &&
                            cc_h == global_cc_exact(h, options.workers);
            put(c, "g_params", srg_string(*srg_g));
            put(c, "g_cc", cc_g.to_string());
            put(c, "h_params", srg_string(*srg_h));
            put(c, "h_cc", cc_h.to_string());
            put(c, "tolerance", std::string("exact"));
            c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        }
        result.checks.push_back(std::move(c));
    }

    {
        VerifyCheck c;
        c.name = "srg_product_formula_sharpness";
        if (srg_gap) {
            c.status = CheckStatus::NotApplicable;
            c.note = srg_gap;
        } else {
            const Rational formula = srg_product_cc(*srg_g, *srg_h);
            const auto lb = cc_lower_bound(g, h);  // defined: srg with d >= 2
            const bool ok = lb && formula == *lb && formula == exact_implicit();
            put(c, "formula", formula.to_string());
            put(c, "lower_bound", lb ? lb->to_string() : std::string("-"));
            put(c, "implicit_exact", exact_implicit().to_string());
            put(c, "tolerance", std::string("exact"));
            if (ok) c.note = "sharp (equality with lower bound)";
            c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        }
        result.checks.push_back(std::move(c));
    }

    return result;
}

namespace {

std::string detail_to_text(const DetailValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&v)) return canonical_double(*d);
    if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    return std::get<std::string>(v);
}

}  // namespace

std::string render_verify_text(const VerifyResult& result) {
    std::ostringstream out;
    int passed = 0, failed = 0, skipped = 0;
    for (const auto& check : result.checks) {
        const char* tag = check.status == CheckStatus::Pass   ? "PASS"
                          : check.status == CheckStatus::Fail ? "FAIL"
                                                              : "N/A ";
        (check.status == CheckStatus::Pass   ? passed
         : check.status == CheckStatus::Fail ? failed
                                             : skipped)++;
        out << tag << " " << check.name;
        for (std::size_t i = check.name.size(); i < 34; ++i) out << ' ';
        for (const auto& [key, value] : check.details)
            out << ' ' << key << '=' << detail_to_text(value);
        if (!check.note.empty()) out << " note=" << check.note;
        out << '\n';
    }
    out << "result: " << passed << " passed, " << failed << " failed, " << skipped
        << " not-applicable\n";
    return out.str();
}

}  // namespace tcc
