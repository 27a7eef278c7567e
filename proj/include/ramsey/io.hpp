#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/designs.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Plain edge list: optional leading "# ..." comment lines (provenance), a
// "n <count>" header, then one "u v" pair per line. Writing what was read
// reproduces the bytes exactly.
std::string write_edge_list(const Graph& g, const std::vector<std::string>& comments = {});
Graph read_edge_list(const std::string& text);

// JSON object {"n": int, "edges": [[u,v], ...]} with edges in canonical order.
std::string write_graph_json(const Graph& g);
Graph read_graph_json(const std::string& text);

// Colouring file: one "u v red|blue" line per host edge, canonical order.
std::string write_coloring(const TwoColoring& c);
TwoColoring read_coloring(const std::string& text, GraphPtr host);

// Design file: {"n": int, "C": int, "blocks": [[...],...],
//               "parallel_classes": [[...],...] | null}.
std::string write_design_json(const BlockDesign& d);
BlockDesign read_design_json(const std::string& text);

std::string write_matchings_json(const std::vector<std::vector<int>>& matchings,
                                 const std::vector<int>& leftover);

// File helpers.
std::string slurp_file(const std::string& path);
void spit_file(const std::string& path, const std::string& content);

// FNV-1a 64-bit content hash, hex encoded; used by host bundle manifests.
std::string content_hash(const std::string& bytes);

}  // namespace ramsey
