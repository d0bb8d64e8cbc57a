#include "tcc/generators.hpp"

#include <charconv>
#include <limits>
#include <random>
#include <vector>

#include "tcc/errors.hpp"

namespace tcc {

namespace {

using Edge = Graph::Edge;

bool is_prime(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

}  // namespace

Graph complete(Vertex n) {
    if (n < 1) throw InputError("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph cycle(Vertex n) {
    if (n < 3) throw InputError("cycle needs at least three vertices");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph path(Vertex n) {
    if (n < 1) throw InputError("path needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(Vertex a, Vertex b) {
    if (a < 1 || b < 1) throw InputError("complete bipartite graph needs nonempty parts");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(a) * b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
    return Graph::from_edges(a + b, edges);
}

Graph petersen() {
    // Outer 5-cycle, spokes, inner pentagram.
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % 5));
        edges.emplace_back(i, static_cast<Vertex>(i + 5));
        edges.emplace_back(static_cast<Vertex>(i + 5),
                           static_cast<Vertex>(5 + (i + 2) % 5));
    }
    return Graph::from_edges(10, edges);
}

Graph paley(std::int64_t q) {
    if (!is_prime(q) || q % 4 != 1)
        throw InputError("paley graph needs a prime q with q = 1 (mod 4), got " +
                         std::to_string(q));
    std::vector<bool> residue(static_cast<std::size_t>(q), false);
    for (std::int64_t x = 1; x < q; ++x)
        residue[static_cast<std::size_t>(x * x % q)] = true;
    // q = 1 (mod 4) makes -1 a residue, so the relation is symmetric.
    std::vector<Edge> edges;
    for (std::int64_t u = 0; u < q; ++u)
        for (std::int64_t v = u + 1; v < q; ++v)
            if (residue[static_cast<std::size_t>(v - u)])
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return Graph::from_edges(static_cast<Vertex>(q), edges);
}

Graph erdos_renyi(Vertex n, double p, std::uint64_t seed) {
    if (n < 1) throw InputError("erdos_renyi needs at least one vertex");
    if (!(p >= 0.0 && p <= 1.0))
        throw InputError("edge probability must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const double draw =
                static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
            if (draw < p) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::int64_t parse_int(const std::string& tok, const std::string& spec) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("bad integer '" + tok + "' in family spec '" + spec + "'");
    return value;
}

double parse_real(const std::string& tok, const std::string& spec) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("bad number '" + tok + "' in family spec '" + spec + "'");
    return value;
}

Vertex parse_vertex_count(const std::string& tok, const std::string& spec) {
    const std::int64_t v = parse_int(tok, spec);
    if (v < 0 || v > std::numeric_limits<Vertex>::max())
        throw InputError("vertex count out of range in family spec '" + spec + "'");
    return static_cast<Vertex>(v);
}

}  // namespace

Graph from_family_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string family = spec.substr(0, colon);
    const std::string arg_text =
        colon == std::string::npos ? std::string() : spec.substr(colon + 1);
    const auto args = arg_text.empty() ? std::vector<std::string>{} : split(arg_text, ',');

    auto expect_args = [&](std::size_t count) {
        if (args.size() != count)
            throw InputError("family spec '" + spec + "' expects " +
                             std::to_string(count) + " parameter(s)");
    };

    if (family == "complete") {
        expect_args(1);
        return complete(parse_vertex_count(args[0], spec));
    }
    if (family == "cycle") {
        expect_args(1);
        return cycle(parse_vertex_count(args[0], spec));
    }
    if (family == "path") {
        expect_args(1);
        return path(parse_vertex_count(args[0], spec));
    }
    if (family == "bipartite") {
        expect_args(2);
        return complete_bipartite(parse_vertex_count(args[0], spec),
                                  parse_vertex_count(args[1], spec));
    }
    if (family == "petersen") {
        expect_args(0);
        return petersen();
    }
    if (family == "paley") {
        expect_args(1);
        return paley(parse_int(args[0], spec));
    }
    if (family == "er") {
        expect_args(3);
        const auto seed = parse_int(args[2], spec);
        if (seed < 0) throw InputError("seed must be nonnegative in '" + spec + "'");
        return erdos_renyi(parse_vertex_count(args[0], spec),
                           parse_real(args[1], spec),
                           static_cast<std::uint64_t>(seed));
    }
    throw InputError("unknown graph family '" + family +
                     "'; known: complete, cycle, path, bipartite, petersen, paley, er");
}

}  // namespace tcc
