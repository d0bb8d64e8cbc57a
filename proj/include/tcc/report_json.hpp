#ifndef TCC_REPORT_JSON_HPP
#define TCC_REPORT_JSON_HPP

#include <string>

#include <json.hpp>

#include "tcc/closed_forms.hpp"
#include "tcc/graph_io.hpp"
#include "tcc/triangles.hpp"
#include "tcc/verify.hpp"

namespace tcc {

using OrderedJson = nlohmann::ordered_json;

// Shortest round-trip decimal for a double; the one number format used
// by every rendering so JSON and text output agree.
std::string canonical_double(double x);

// Report objects. Key order is fixed and documented in the README;
// exact values appear as "num/den" strings next to their floats.
OrderedJson cc_report_json(const GraphSource& src, const CcReport& rep,
                           bool exact, bool per_vertex);
OrderedJson product_report_json(const std::string& g_origin,
                                const std::string& h_origin, ProductMode mode,
                                const ProductCcReport& rep);
OrderedJson srg_report_json(const SrgParams& params);
OrderedJson verify_report_json(const std::string& g_origin,
                               const std::string& h_origin,
                               const VerifyResult& result);

// One JSON object, two-space indent, trailing newline.
std::string write_report(const OrderedJson& report);

}  // namespace tcc

#endif
