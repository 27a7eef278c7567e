#include "ramsey/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ramsey/error.hpp"

namespace ramsey {

using nlohmann::json;

std::string write_edge_list(const Graph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << "\n";
  out << "n " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Vertex n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      fields >> tag >> n;
      require(tag == "n" && !fields.fail() && n >= 0, ErrorCode::io_failure,
              "edge list must start with 'n <count>'");
      continue;
    }
    Vertex u, v;
    fields >> u >> v;
    require(!fields.fail(), ErrorCode::io_failure,
            "bad edge at line " + std::to_string(line_no));
    edges.push_back({u, v});
  }
  require(n >= 0, ErrorCode::io_failure, "edge list missing header");
  return Graph(n, std::move(edges));
}

std::string write_graph_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  auto& edges = j["edges"] = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return j.dump();
}

Graph read_graph_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded() && j.contains("n") && j.contains("edges"),
          ErrorCode::io_failure, "bad graph json");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"])
    edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
  return Graph(j["n"].get<Vertex>(), std::move(edges));
}

std::string write_coloring(const TwoColoring& c) {
  std::ostringstream out;
  const Graph& host = c.host();
  for (std::size_t i = 0; i < host.edge_count(); ++i) {
    const auto& [u, v] = host.edges()[i];
    out << u << " " << v << " " << colour_name(c.colour_of_index(i)) << "\n";
  }
  return out.str();
}

TwoColoring read_coloring(const std::string& text, GraphPtr host) {
  std::vector<Colour> colours(host->edge_count(), Colour::red);
  std::vector<char> seen(host->edge_count(), 0);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    Vertex u, v;
    std::string name;
    fields >> u >> v >> name;
    require(!fields.fail() && (name == "red" || name == "blue"), ErrorCode::io_failure,
            "bad colouring line " + std::to_string(line_no));
    auto idx = host->edge_index(u, v);
    require(idx >= 0, ErrorCode::io_failure,
            "colouring mentions a non-edge at line " + std::to_string(line_no));
    colours[idx] = name == "red" ? Colour::red : Colour::blue;
    seen[idx] = 1;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    require(seen[i], ErrorCode::io_failure, "colouring misses a host edge");
  return TwoColoring(std::move(host), std::move(colours));
}

std::string write_design_json(const BlockDesign& d) {
  json j;
  j["n"] = d.n;
  j["C"] = d.block_size;
  j["blocks"] = d.blocks;
  if (d.parallel_classes.has_value())
    j["parallel_classes"] = *d.parallel_classes;
  else
    j["parallel_classes"] = nullptr;
  return j.dump();
}

BlockDesign read_design_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded() && j.contains("n") && j.contains("C") && j.contains("blocks"),
          ErrorCode::io_failure, "bad design json");
  BlockDesign d;
  d.n = j["n"].get<Vertex>();
  d.block_size = j["C"].get<int>();
  d.blocks = j["blocks"].get<std::vector<std::vector<Vertex>>>();
  if (j.contains("parallel_classes") && !j["parallel_classes"].is_null())
    d.parallel_classes = j["parallel_classes"].get<std::vector<std::vector<int>>>();
  return d;
}

std::string write_matchings_json(const std::vector<std::vector<int>>& matchings,
                                 const std::vector<int>& leftover) {
  json j;
  j["matchings"] = matchings;
  j["leftover"] = leftover;
  return j.dump();
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::io_failure, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spit_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), ErrorCode::io_failure, "cannot write " + path);
  out << content;
  require(out.good(), ErrorCode::io_failure, "write failed for " + path);
}

std::string content_hash(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace ramsey
