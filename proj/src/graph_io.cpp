#include "tcc/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "tcc/errors.hpp"
#include "tcc/generators.hpp"

namespace tcc {

namespace {

struct RawEdge {
    std::int64_t u;
    std::int64_t v;
    std::size_t line;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; }

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::int64_t parse_label(std::string_view tok, std::size_t line_no) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        throw ParseError("malformed token '" + std::string(tok) + "'", line_no);
    return value;
}

}  // namespace

GraphSource read_edge_list(std::string_view text, std::string origin) {
    std::vector<RawEdge> raw;
    std::optional<std::int64_t> header_n;
    bool seen_edges = false;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        const auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0].front() == '#') continue;

        if (tokens[0] == "n" && !header_n && !seen_edges) {
            if (tokens.size() != 2)
                throw ParseError("header expects 'n <count>'", line_no);
            const std::int64_t n = parse_label(tokens[1], line_no);
            if (n > std::numeric_limits<Vertex>::max())
                throw CapacityError("declared vertex count " + std::to_string(n) +
                                    " exceeds the 32-bit index range");
            header_n = n;
            continue;
        }

        if (tokens.size() != 2)
            throw ParseError("expected 'u v', got " + std::to_string(tokens.size()) +
                             " token(s)", line_no);
        const std::int64_t u = parse_label(tokens[0], line_no);
        const std::int64_t v = parse_label(tokens[1], line_no);
        if (u == v) throw ParseError("self-loop " + std::to_string(u) + " " +
                                     std::to_string(v), line_no);
        raw.push_back({u, v, line_no});
        seen_edges = true;
    }

    GraphSource src;
    src.origin = std::move(origin);

    if (header_n) {
        const auto n = static_cast<Vertex>(*header_n);
        std::vector<Graph::Edge> edges;
        edges.reserve(raw.size());
        for (const auto& e : raw) {
            if (e.u >= n || e.v >= n)
                throw ParseError("label exceeds declared vertex count " +
                                 std::to_string(n), e.line);
            edges.emplace_back(static_cast<Vertex>(e.u), static_cast<Vertex>(e.v));
        }
        src.graph = Graph::from_edges(n, edges);
        return src;
    }

    std::vector<std::int64_t> labels;
    labels.reserve(raw.size() * 2);
    for (const auto& e : raw) {
        labels.push_back(e.u);
        labels.push_back(e.v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    const bool dense = labels.empty() ||
                       labels.back() == static_cast<std::int64_t>(labels.size()) - 1;
    if (dense) {
        const std::int64_t n = labels.empty() ? 0 : labels.back() + 1;
        std::vector<Graph::Edge> edges;
        edges.reserve(raw.size());
        for (const auto& e : raw)
            edges.emplace_back(static_cast<Vertex>(e.u), static_cast<Vertex>(e.v));
        src.graph = Graph::from_edges(static_cast<Vertex>(n), edges);
        return src;
    }

    // Gappy labels: compact onto 0..k-1 and remember the originals.
    if (labels.size() > static_cast<std::size_t>(std::numeric_limits<Vertex>::max()))
        throw CapacityError("too many distinct labels for the 32-bit index range");
    auto index_of = [&](std::int64_t label) {
        return static_cast<Vertex>(
            std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
    };
    std::vector<Graph::Edge> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) edges.emplace_back(index_of(e.u), index_of(e.v));
    src.graph = Graph::from_edges(static_cast<Vertex>(labels.size()), edges);
    src.relabel_map = std::move(labels);
    return src;
}

GraphSource read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_edge_list(buffer.str(), path);
}

std::string write_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.num_vertices()) + "\n";
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        for (Vertex v : g.neighbors(u))
            if (v > u)
                out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

GraphSource load_source(const std::string& path_or_spec, bool force_generator) {
    if (!force_generator && std::filesystem::exists(path_or_spec))
        return read_edge_list_file(path_or_spec);
    GraphSource src;
    src.graph = from_family_spec(path_or_spec);
    src.origin = path_or_spec;
    return src;
}

}  // namespace tcc
