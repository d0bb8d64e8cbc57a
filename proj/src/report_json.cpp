#include "tcc/report_json.hpp"

namespace tcc {

std::string canonical_double(double x) { return nlohmann::json(x).dump(); }

namespace {

std::int64_t pairs(std::int64_t d) { return d * (d - 1) / 2; }

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "not-applicable";
    }
}

OrderedJson detail_to_json(const DetailValue& v) {
    return std::visit([](const auto& x) { return OrderedJson(x); }, v);
}

}  // namespace

OrderedJson cc_report_json(const GraphSource& src, const CcReport& rep,
                           bool exact, bool per_vertex) {
    const Graph& g = src.graph;
    OrderedJson out;
    out["kind"] = "cc";
    out["source"] = src.origin;
    out["n"] = g.num_vertices();
    out["edges"] = g.num_edges();
    out["triangle_total"] = rep.triangle_total;
    out["global_cc"] = rep.global_cc;
    if (exact) out["global_cc_exact"] = global_cc_exact(g).to_string();
    if (per_vertex) {
        OrderedJson pv;
        if (src.relabel_map) pv["original_labels"] = *src.relabel_map;
        pv["triangles"] = rep.triangles;
        pv["local_cc"] = rep.local_cc;
        if (exact) {
            std::vector<std::string> exact_cc;
            exact_cc.reserve(rep.triangles.size());
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                const std::int64_t d = g.degree(v);
                const Rational r = d <= 1 ? Rational(0)
                                          : Rational(rep.triangles[static_cast<std::size_t>(v)],
                                                     pairs(d));
                exact_cc.push_back(r.to_string());
            }
            pv["local_cc_exact"] = exact_cc;
        }
        out["per_vertex"] = std::move(pv);
    }
    return out;
}

OrderedJson product_report_json(const std::string& g_origin,
                                const std::string& h_origin, ProductMode mode,
                                const ProductCcReport& rep) {
    OrderedJson out;
    out["kind"] = "product_cc";
    out["g_source"] = g_origin;
    out["h_source"] = h_origin;
    out["mode"] = mode == ProductMode::Implicit   ? "implicit"
                  : mode == ProductMode::Explicit ? "explicit"
                                                  : "both";
    out["implicit_global_cc"] = rep.implicit_global_cc;
    if (rep.implicit_exact) out["implicit_global_cc_exact"] = rep.implicit_exact->to_string();
    if (rep.explicit_global_cc) out["explicit_global_cc"] = *rep.explicit_global_cc;
    if (rep.explicit_exact) out["explicit_global_cc_exact"] = rep.explicit_exact->to_string();
    if (rep.abs_diff) out["abs_diff"] = *rep.abs_diff;
    out["upper_bound"] = rep.upper_bound;
    if (rep.upper_bound_exact) out["upper_bound_exact"] = rep.upper_bound_exact->to_string();
    out["upper_ok"] = rep.upper_ok;
    if (rep.lower_bound) {
        out["lower_bound"] = *rep.lower_bound;
        if (rep.lower_bound_exact) out["lower_bound_exact"] = rep.lower_bound_exact->to_string();
        out["lower_ok"] = rep.lower_ok;
    }
    return out;
}

OrderedJson srg_report_json(const SrgParams& params) {
    OrderedJson out;
    out["kind"] = "srg";
    out["n"] = params.n;
    out["d"] = params.d;
    out["mu1"] = params.mu1;
    if (params.mu2)
        out["mu2"] = *params.mu2;
    else
        out["mu2"] = nullptr;
    if (params.d >= 2) {
        const Rational cc = srg_cc(params);
        out["cc"] = cc.to_double();
        out["cc_exact"] = cc.to_string();
    }
    return out;
}

OrderedJson verify_report_json(const std::string& g_origin,
                               const std::string& h_origin,
                               const VerifyResult& result) {
    OrderedJson out;
    out["kind"] = "verify";
    out["g_source"] = g_origin;
    out["h_source"] = h_origin;
    out["passed"] = result.all_passed();
    OrderedJson checks = OrderedJson::array();
    for (const auto& check : result.checks) {
        OrderedJson c;
        c["name"] = check.name;
        c["status"] = status_name(check.status);
        for (const auto& [key, value] : check.details) c[key] = detail_to_json(value);
        if (!check.note.empty()) c["note"] = check.note;
        checks.push_back(std::move(c));
    }
    out["checks"] = std::move(checks);
    return out;
}

std::string write_report(const OrderedJson& report) { return report.dump(2) + "\n"; }

}  // namespace tcc
