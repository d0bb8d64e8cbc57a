#ifndef TCC_GRAPH_IO_HPP
#define TCC_GRAPH_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcc/graph.hpp"

namespace tcc {

// A parsed or generated graph plus where it came from. relabel_map,
// when present, lists the original file labels in ascending order;
// index i is the original label of vertex i.
struct GraphSource {
    Graph graph;
    std::string origin;
    std::optional<std::vector<std::int64_t>> relabel_map;
};

// Edge-list text: optional first line "n <count>", then "u v" lines.
// '#' lines and blank lines are ignored; duplicate and reversed edges
// collapse; self-loops are rejected with their line number. With a
// header, labels must be < count and isolated vertices are kept.
// Without one, the vertex set is the labels present: {0..max} stays as
// is, gappy label sets are compacted with a recorded relabel_map.
GraphSource read_edge_list(std::string_view text, std::string origin = "<string>");

GraphSource read_edge_list_file(const std::string& path);

// "n <count>" then one "u v" line per edge with u < v in lexicographic
// order, every line '\n'-terminated. read_edge_list of the result
// reproduces the Graph exactly.
std::string write_edge_list(const Graph& g);

// A source argument is a path if a file exists there, otherwise a
// generator family spec. force_generator skips the file probe.
GraphSource load_source(const std::string& path_or_spec, bool force_generator = false);

}  // namespace tcc

#endif
