#include "ramsey/cycles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ramsey/error.hpp"

namespace ramsey {

CandidateAssignment make_candidate_assignment(const Graph& h, const Decomposition& d) {
  CandidateAssignment a;
  a.phi.assign(h.vertex_count(), -1);
  a.anchor.assign(h.vertex_count(), -1);
  a.candidates.assign(h.vertex_count(), {});

  std::vector<char> on_cycle(h.vertex_count(), 0);
  for (const auto& cyc : d.cycles)
    for (Vertex v : cyc) on_cycle[v] = 1;

  // Greedy colouring of the square of the cycle union, ascending vertex order.
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (!on_cycle[v]) continue;
    std::vector<char> used(h.vertex_count() + 1, 0);
    for (Vertex w : h.neighbors(v)) {
      if (on_cycle[w] && a.phi[w] >= 0) used[a.phi[w]] = 1;
      for (Vertex x : h.neighbors(w))
        if (x != v && on_cycle[x] && a.phi[x] >= 0) used[a.phi[x]] = 1;
    }
    int colour = 0;
    while (used[colour]) ++colour;
    a.phi[v] = colour;
    a.class_count = std::max(a.class_count, colour + 1);
  }
  return a;
}

AssignmentCheck validate_candidate_assignment(const Graph& h, const Decomposition& d,
                                              const CandidateAssignment& a) {
  AssignmentCheck check;
  std::vector<char> on_cycle(h.vertex_count(), 0);
  for (const auto& cyc : d.cycles)
    for (Vertex v : cyc) on_cycle[v] = 1;
  check.distance2_ok = true;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (!on_cycle[v]) continue;
    if (a.phi[v] < 0) {
      check.distance2_ok = false;
      continue;
    }
    for (Vertex w : h.neighbors(v)) {
      if (on_cycle[w] && a.phi[w] == a.phi[v]) check.distance2_ok = false;
      for (Vertex x : h.neighbors(w))
        if (x != v && on_cycle[x] && a.phi[x] == a.phi[v]) check.distance2_ok = false;
    }
  }
  std::map<Vertex, int> anchor_uses;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (a.anchor[v] >= 0) ++anchor_uses[a.anchor[v]];
  check.anchors_ok = true;
  for (const auto& [host_v, uses] : anchor_uses)
    if (uses > 3) check.anchors_ok = false;
  return check;
}

namespace {

struct CycleSolver {
  const Graph& host;
  int length;
  std::vector<std::vector<Vertex>> domains;  // current candidate lists
  std::vector<Vertex> image;
  std::vector<char> assigned;
  std::vector<char> used_host;
  long budget;  // < 0 unlimited
  long explored = 0;
  std::vector<Vertex> deepest;

  bool over_budget() const { return budget >= 0 && explored >= budget; }

  int pick_position() const {
    int best = -1;
    std::size_t best_size = ~0ull;
    for (int i = 0; i < length; ++i) {
      if (assigned[i]) continue;
      std::size_t size = domains[i].size();
      // Prefer positions adjacent to assigned ones, then smallest domain.
      bool anchored = assigned[(i + 1) % length] || assigned[(i + length - 1) % length];
      std::size_t key = anchored ? size : size + 100000;
      if (key < best_size) {
        best_size = key;
        best = i;
      }
    }
    return best;
  }

  bool solve(int placed) {
    if (placed == length) return true;
    if (over_budget()) return false;
    int pos = pick_position();
    int prev = (pos + length - 1) % length;
    int next = (pos + 1) % length;
    for (Vertex hv : domains[pos]) {
      if (used_host[hv]) continue;
      if (assigned[prev] && !host.has_edge(image[prev], hv)) continue;
      if (assigned[next] && !host.has_edge(hv, image[next])) continue;
      ++explored;
      image[pos] = hv;
      assigned[pos] = 1;
      used_host[hv] = 1;
      if (placed + 1 > static_cast<int>(deepest.size())) {
        deepest.clear();
        for (int i = 0; i < length; ++i)
          if (assigned[i]) deepest.push_back(image[i]);
      }
      // Forward check: unassigned neighbours keep a compatible value.
      bool viable = true;
      for (int nb : {prev, next}) {
        if (assigned[nb]) continue;
        bool any = false;
        for (Vertex cand : domains[nb])
          if (!used_host[cand] && host.has_edge(hv, cand)) {
            any = true;
            break;
          }
        if (!any) {
          viable = false;
          break;
        }
      }
      if (viable && solve(placed + 1)) return true;
      assigned[pos] = 0;
      used_host[hv] = 0;
      image[pos] = -1;
      if (over_budget()) return false;
    }
    return false;
  }
};

}  // namespace

CycleEmbedResult embed_cycle(const Graph& host, int cycle_length,
                             const std::vector<std::vector<Vertex>>& candidates,
                             long node_budget) {
  require(cycle_length >= 3, ErrorCode::invalid_argument, "cycles have length >= 3");
  require(static_cast<int>(candidates.size()) == cycle_length, ErrorCode::invalid_argument,
          "one candidate set per cycle position");
  CycleEmbedResult result;
  for (const auto& c : candidates)
    if (c.empty()) {
      result.error = "cycle-embedding-failed";
      return result;
    }
  CycleSolver solver{host,
                     cycle_length,
                     candidates,
                     std::vector<Vertex>(cycle_length, -1),
                     std::vector<char>(cycle_length, 0),
                     std::vector<char>(host.vertex_count(), 0),
                     node_budget == 0 ? -1 : node_budget,
                     0,
                     {}};
  for (auto& d : solver.domains) std::sort(d.begin(), d.end());
  result.success = solver.solve(0);
  result.nodes_explored = solver.explored;
  if (result.success) {
    result.image = solver.image;
  } else {
    result.deepest_partial = solver.deepest;
    result.error = "cycle-embedding-failed";
  }
  return result;
}

CyclesPipelineResult embed_cycles_pipeline(
    const Graph& host, const std::vector<std::vector<Vertex>>& half_sets, int class_count,
    const Graph& h, const Decomposition& decomp, const CandidateAssignment& assignment,
    const std::vector<Vertex>& pre_embedded, int min_candidates, long node_budget) {
  require(static_cast<int>(half_sets.size()) >= 2 * class_count,
          ErrorCode::invalid_argument, "need two half families per class");
  CyclesPipelineResult result;
  result.image = pre_embedded;
  result.image.resize(h.vertex_count(), -1);

  std::vector<char> occupied(host.vertex_count(), 0);
  for (Vertex img : result.image)
    if (img >= 0) occupied[img] = 1;

  for (std::size_t ci = 0; ci < decomp.cycles.size(); ++ci) {
    const auto& cycle = decomp.cycles[ci];
    int length = static_cast<int>(cycle.size());
    std::vector<std::vector<Vertex>> position_candidates(length);
    for (int pos = 0; pos < length; ++pos) {
      Vertex v = cycle[pos];
      // Anchor: image of an embedded pattern neighbour, else the supplied one.
      Vertex anchor = -1;
      for (Vertex w : h.neighbors(v))
        if (result.image[w] >= 0) {
          anchor = result.image[w];
          break;
        }
      if (anchor < 0) anchor = assignment.anchor[v];

      const std::vector<Vertex>* explicit_cand =
          assignment.candidates[v].empty() ? nullptr : &assignment.candidates[v];
      int phi = assignment.phi[v];
      require(phi >= 0 && phi < class_count, ErrorCode::invalid_argument,
              "cycle vertex without a class label");

      std::vector<Vertex> chosen;
      for (int b = 0; b < 2 && chosen.empty(); ++b) {
        const auto& family = half_sets[static_cast<std::size_t>(phi) * 2 + b];
        std::vector<Vertex> pool;
        for (Vertex cand : family) {
          if (occupied[cand]) continue;
          if (anchor >= 0 && !host.has_edge(anchor, cand)) continue;
          if (explicit_cand && std::find(explicit_cand->begin(), explicit_cand->end(),
                                         cand) == explicit_cand->end())
            continue;
          pool.push_back(cand);
        }
        if (static_cast<int>(pool.size()) >= std::max(1, min_candidates))
          chosen = std::move(pool);
      }
      if (chosen.empty()) {
        result.failed_stage = "half-selection";
        result.failed_cycle = static_cast<int>(ci);
        result.failed_vertex = v;
        return result;
      }
      position_candidates[pos] = std::move(chosen);
    }

    auto embedded = embed_cycle(host, length, position_candidates, node_budget);
    result.nodes_explored += embedded.nodes_explored;
    if (!embedded.success) {
      result.failed_stage = "cycle-embedding";
      result.failed_cycle = static_cast<int>(ci);
      return result;
    }
    for (int pos = 0; pos < length; ++pos) {
      result.image[cycle[pos]] = embedded.image[pos];
      occupied[embedded.image[pos]] = 1;
    }
  }
  result.success = true;
  return result;
}

}  // namespace ramsey
