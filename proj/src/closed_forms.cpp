#include "tcc/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tcc/errors.hpp"
#include "tcc/triangles.hpp"

namespace tcc {

namespace {

std::int64_t pairs(std::int64_t d) { return d * (d - 1) / 2; }

// One (degree, triangle-count) class of factor vertices. The product
// term depends on a vertex only through these two scalars.
struct Profile {
    std::int64_t d = 0;
    std::int64_t t = 0;
    std::int64_t count = 0;
};

std::vector<Profile> degree_triangle_profiles(const Graph& g, int workers) {
    const auto tri = triangles_per_vertex(g, workers);
    std::vector<std::pair<std::int64_t, std::int64_t>> dt;
    dt.reserve(tri.size());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        dt.emplace_back(g.degree(v), tri[static_cast<std::size_t>(v)]);
    std::sort(dt.begin(), dt.end());

    std::vector<Profile> profiles;
    for (std::size_t i = 0; i < dt.size();) {
        std::size_t j = i;
        while (j < dt.size() && dt[j] == dt[i]) ++j;
        profiles.push_back({dt[i].first, dt[i].second,
                            static_cast<std::int64_t>(j - i)});
        i = j;
    }
    return profiles;
}

void require_nonempty(const Graph& g, const Graph& h, const char* what) {
    if (g.num_vertices() == 0 || h.num_vertices() == 0)
        throw InputError(std::string(what) + " of an empty factor");
}

}  // namespace

std::int64_t product_triangles(std::int64_t tg_u, std::int64_t th_v) {
    const auto wide = static_cast<__int128>(2) * tg_u * th_v;
    if (wide > std::numeric_limits<std::int64_t>::max())
        throw CapacityError("product triangle count overflows 64-bit range");
    return static_cast<std::int64_t>(wide);
}

double coupling_factor(std::int64_t deg_g_u, std::int64_t deg_h_v) {
    if (deg_g_u < 2 || deg_h_v < 2)
        throw DomainError("coupling factor undefined for degree < 2");
    return static_cast<double>((deg_g_u - 1) * (deg_h_v - 1)) /
           static_cast<double>(deg_g_u * deg_h_v - 1);
}

Rational coupling_factor_exact(std::int64_t deg_g_u, std::int64_t deg_h_v) {
    if (deg_g_u < 2 || deg_h_v < 2)
        throw DomainError("coupling factor undefined for degree < 2");
    return Rational((deg_g_u - 1) * (deg_h_v - 1), deg_g_u * deg_h_v - 1);
}

double product_local_cc_from_stats(std::int64_t tg, std::int64_t dg,
                                   std::int64_t th, std::int64_t dh) {
    if (dg >= 2 && dh >= 2) {
        const double cc_g = static_cast<double>(tg) / static_cast<double>(pairs(dg));
        const double cc_h = static_cast<double>(th) / static_cast<double>(pairs(dh));
        return coupling_factor(dg, dh) * cc_g * cc_h;
    }
    const std::int64_t product_deg = dg * dh;
    if (product_deg <= 1) return 0.0;
    const double choose2 =
        static_cast<double>(product_deg) * static_cast<double>(product_deg - 1) / 2.0;
    return 2.0 * static_cast<double>(tg) * static_cast<double>(th) / choose2;
}

Rational product_local_cc_exact_from_stats(std::int64_t tg, std::int64_t dg,
                                           std::int64_t th, std::int64_t dh) {
    if (dg >= 2 && dh >= 2)
        return coupling_factor_exact(dg, dh) * Rational(tg, pairs(dg)) *
               Rational(th, pairs(dh));
    const std::int64_t product_deg = dg * dh;
    if (product_deg <= 1) return Rational(0);
    const Rational choose2 =
        Rational(product_deg) * Rational(product_deg - 1) / Rational(2);
    return Rational(2) * Rational(tg) * Rational(th) / choose2;
}

double product_local_cc(const Graph& g, const Graph& h, Vertex u, Vertex v) {
    return product_local_cc_from_stats(triangle_count_at(g, u), g.degree(u),
                                       triangle_count_at(h, v), h.degree(v));
}

Rational product_local_cc_exact(const Graph& g, const Graph& h, Vertex u, Vertex v) {
    return product_local_cc_exact_from_stats(triangle_count_at(g, u), g.degree(u),
                                             triangle_count_at(h, v), h.degree(v));
}

double product_global_cc(const Graph& g, const Graph& h, int workers) {
    require_nonempty(g, h, "product clustering coefficient");
    const auto pg = degree_triangle_profiles(g, workers);
    const auto ph = degree_triangle_profiles(h, workers);
    double sum = 0.0;
    for (const auto& a : pg)
        for (const auto& b : ph)
            sum += product_local_cc_from_stats(a.t, a.d, b.t, b.d) *
                   static_cast<double>(a.count) * static_cast<double>(b.count);
    return sum / (static_cast<double>(g.num_vertices()) *
                  static_cast<double>(h.num_vertices()));
}

Rational product_global_cc_exact(const Graph& g, const Graph& h, int workers) {
    require_nonempty(g, h, "product clustering coefficient");
    const auto pg = degree_triangle_profiles(g, workers);
    const auto ph = degree_triangle_profiles(h, workers);
    Rational sum(0);
    for (const auto& a : pg)
        for (const auto& b : ph)
            sum += product_local_cc_exact_from_stats(a.t, a.d, b.t, b.d) *
                   Rational(a.count) * Rational(b.count);
    return sum / (Rational(g.num_vertices()) * Rational(h.num_vertices()));
}

UpperBoundCheck cc_upper_bound_check(const Graph& g, const Graph& h, int workers) {
    require_nonempty(g, h, "upper bound check");
    UpperBoundCheck check;
    check.applicable = min_degree(g) >= 2 && min_degree(h) >= 2;
    check.bound = global_cc(g, workers) * global_cc(h, workers);
    check.holds = product_global_cc(g, h, workers) <= check.bound + kCcTolerance;
    check.strict_expected = !is_triangle_free(g, workers) && !is_triangle_free(h, workers);
    return check;
}

std::optional<Rational> cc_lower_bound(const Graph& g, const Graph& h) {
    require_nonempty(g, h, "lower bound");
    if (min_degree(g) < 2 || min_degree(h) < 2) return std::nullopt;
    const Rational denom = average_degree(g) * average_degree(h) - Rational(1);
    return Rational(sigma(g)) * Rational(sigma(h)) / denom;
}

Rational regular_product_cc(const Graph& g, const Graph& h, int workers) {
    require_nonempty(g, h, "regular product formula");
    const auto dg = regularity(g);
    const auto dh = regularity(h);
    if (!dg || !dh)
        throw DomainError("regular product formula requires regular factors");
    if (*dg < 2 || *dh < 2)
        throw DomainError("regular product formula requires regularity >= 2");
    return coupling_factor_exact(*dg, *dh) * global_cc_exact(g, workers) *
           global_cc_exact(h, workers);
}

std::optional<SrgParams> srg_detect(const Graph& g, Vertex size_cap) {
    const Vertex n = g.num_vertices();
    if (n < 2) throw InputError("srg detection needs at least two vertices");
    if (n > size_cap)
        throw CapacityError("srg detection capped at " + std::to_string(size_cap) +
                            " vertices, graph has " + std::to_string(n));
    const auto d = regularity(g);
    if (!d) return std::nullopt;

    std::optional<std::int64_t> mu1, mu2;
    for (Vertex u = 0; u < n; ++u) {
        const auto nu = g.neighbors(u);
        for (Vertex v = u + 1; v < n; ++v) {
            const std::int64_t common = sorted_intersection_size(nu, g.neighbors(v));
            auto& slot = g.has_edge(u, v) ? mu1 : mu2;
            if (!slot)
                slot = common;
            else if (*slot != common)
                return std::nullopt;
        }
    }
    SrgParams p;
    p.n = n;
    p.d = *d;
    p.mu1 = mu1.value_or(0);  // vacuous for edgeless graphs
    p.mu2 = mu2;              // absent iff complete
    return p;
}

Rational srg_cc(const SrgParams& p) {
    if (p.d < 2) throw DomainError("srg clustering formula requires d >= 2");
    return Rational(p.mu1, p.d - 1);
}

Rational srg_product_cc(const SrgParams& pg, const SrgParams& ph) {
    if (pg.d < 2 || ph.d < 2)
        throw DomainError("srg product formula requires d >= 2");
    return Rational(pg.mu1 * ph.mu1, pg.d * ph.d - 1);
}

ProductCcReport product_cc_report(const Graph& g, const Graph& h, ProductMode mode,
                                  bool exact, std::int64_t edge_budget, int workers) {
    require_nonempty(g, h, "product report");
    ProductCcReport rep;
    rep.implicit_global_cc = product_global_cc(g, h, workers);
    if (exact) rep.implicit_exact = product_global_cc_exact(g, h, workers);

    if (mode != ProductMode::Implicit) {
        const Graph prod = tensor_product(g, h, edge_budget, workers);
        rep.explicit_global_cc = global_cc(prod, workers);
        if (mode == ProductMode::Both)
            rep.abs_diff = std::fabs(rep.implicit_global_cc - *rep.explicit_global_cc);
        if (exact) rep.explicit_exact = global_cc_exact(prod, workers);
    }

    rep.upper_bound = global_cc(g, workers) * global_cc(h, workers);
    rep.upper_ok = rep.implicit_global_cc <= rep.upper_bound + kCcTolerance;
    if (exact)
        rep.upper_bound_exact = global_cc_exact(g, workers) * global_cc_exact(h, workers);

    if (const auto lb = cc_lower_bound(g, h)) {
        rep.lower_bound = lb->to_double();
        rep.lower_ok = rep.implicit_global_cc >= *rep.lower_bound - kCcTolerance;
        if (exact) rep.lower_bound_exact = *lb;
    }
    return rep;
}

}  // namespace tcc
