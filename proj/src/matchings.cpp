#include "ramsey/matchings.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "ramsey/error.hpp"

namespace ramsey {

MatchingCollection partition_blocks_into_matchings(const std::vector<int>& present_blocks,
                                                   const BlockDesign& d, double eta,
                                                   int z_target, double p) {
  require(eta >= 0.0 && eta < 1.0, ErrorCode::invalid_argument, "eta outside [0,1)");
  MatchingCollection result;
  result.z_target = z_target;
  if (p > 0.0) {
    double t = static_cast<double>(d.n - 1) * p / (d.block_size - 1);
    result.z_window_low = (1.0 - eta) * t;
    result.z_window_high = (1.0 + eta) * t;
  }
  if (present_blocks.empty()) return result;

  // Conflict degree: number of other present blocks sharing a vertex. Blocks
  // of a pairwise-balanced design meet in at most one point, so counting per
  // vertex gives distinct conflicts.
  std::vector<int> blocks_at_vertex(d.n, 0);
  for (int b : present_blocks)
    for (Vertex v : d.blocks[b]) ++blocks_at_vertex[v];
  std::vector<std::pair<int, int>> order;  // (-degree, canonical index)
  order.reserve(present_blocks.size());
  for (int b : present_blocks) {
    int conflicts = 0;
    for (Vertex v : d.blocks[b]) conflicts += blocks_at_vertex[v] - 1;
    order.emplace_back(-conflicts, b);
  }
  std::sort(order.begin(), order.end());

  // First-fit: occupied[m] marks the vertices used by matching m.
  std::vector<std::vector<char>> occupied;
  std::vector<std::vector<int>> matchings;
  for (const auto& [neg_deg, b] : order) {
    const auto& block = d.blocks[b];
    std::size_t m = 0;
    for (; m < matchings.size(); ++m) {
      bool clash = false;
      for (Vertex v : block)
        if (occupied[m][v]) {
          clash = true;
          break;
        }
      if (!clash) break;
    }
    if (m == matchings.size()) {
      matchings.emplace_back();
      occupied.emplace_back(d.n, 0);
    }
    matchings[m].push_back(b);
    for (Vertex v : block) occupied[m][v] = 1;
  }

  Vertex bar = static_cast<Vertex>(std::ceil((1.0 - eta) * d.n));
  for (std::size_t m = 0; m < matchings.size(); ++m) {
    Vertex covered = static_cast<Vertex>(matchings[m].size()) * d.block_size;
    if (covered >= bar) {
      std::sort(matchings[m].begin(), matchings[m].end());
      result.matchings.push_back(std::move(matchings[m]));
      result.coverage.push_back(covered);
    } else {
      ++result.dissolved;
      for (int b : matchings[m]) result.leftover_blocks.push_back(b);
    }
  }
  std::sort(result.leftover_blocks.begin(), result.leftover_blocks.end());
  return result;
}

BlocksMeetingSet blocks_meeting_set(const std::vector<int>& matching, const BlockDesign& d,
                                    const std::vector<Vertex>& set, double gamma,
                                    Vertex host_n) {
  BlocksMeetingSet result;
  Vertex covered = static_cast<Vertex>(matching.size()) * d.block_size;
  result.applicable = covered >= (1.0 - gamma) * host_n &&
                      static_cast<double>(set.size()) >= 4.0 * gamma * host_n;
  std::vector<char> in_set(d.n, 0);
  for (Vertex v : set) in_set[v] = 1;
  double intersection_bar = gamma * d.block_size / 2.0;
  for (int b : matching) {
    int hit = 0;
    for (Vertex v : d.blocks[b]) hit += in_set[v];
    if (hit >= intersection_bar) result.blocks.push_back(b);
  }
  result.bound = static_cast<double>(set.size()) / (2.0 * d.block_size);
  result.count_at_least_bound = static_cast<double>(result.blocks.size()) >= result.bound;
  return result;
}

MultiplicityReport edge_multiplicity_report(const LayerSet& layers) {
  MultiplicityReport report;
  std::unordered_map<std::uint64_t, int> counts;
  std::size_t total = 0;
  for (const Graph& a : layers.layers) total += a.edge_count();
  counts.reserve(total * 2);
  for (const Graph& a : layers.layers)
    for (const auto& [u, v] : a.edges()) ++counts[edge_key(u, v)];
  for (const auto& [key, mult] : counts) {
    ++report.histogram[mult];
    if (mult >= 2) ++report.edges_in_multiple;
    if (mult >= 5) report.multiplicity_five_or_more = true;
  }
  double n = 0.0;
  if (!layers.layers.empty()) n = static_cast<double>(layers.layers.front().vertex_count());
  report.multiple_exceeds_n_to_three_halves =
      static_cast<double>(report.edges_in_multiple) > std::pow(n, 1.5);
  return report;
}

}  // namespace ramsey
