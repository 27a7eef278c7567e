#include "ramsey/search.hpp"

#include <algorithm>
#include <string>

namespace ramsey {

namespace {

// Backtracking state for the fixed-length induced-cycle search rooted at s.
// Path vertices other than the root must be larger than the root (the root is
// the cycle minimum), and the second vertex stays below the last one to break
// the reflection symmetry.
struct CycleSearch {
  const Graph& g;
  int target;
  std::vector<Vertex> path;
  std::vector<char> blocked;  // adjacent-to-or-on-path marker
  bool reached_full_depth = false;

  explicit CycleSearch(const Graph& graph, int t)
      : g(graph), target(t), blocked(graph.vertex_count(), 0) {}

  bool extend() {
    int depth = static_cast<int>(path.size());
    if (depth == target) {
      reached_full_depth = true;
      Vertex last = path.back();
      Vertex root = path.front();
      if (!g.has_edge(last, root)) return false;
      // Internal chords were excluded while extending; the closing edge makes
      // the vertex set induce exactly the cycle. Reflection symmetry: require
      // second < last.
      return path[1] < last;
    }
    Vertex tail = path.back();
    for (Vertex w : g.neighbors(tail)) {
      if (w <= path.front()) continue;
      if (blocked[w]) continue;
      // w may touch the root only if it could close the cycle later; interior
      // vertices must avoid the root's neighbourhood.
      bool is_last = depth + 1 == target;
      if (!is_last && g.has_edge(w, path.front())) continue;
      // No chords to any path vertex except the tail.
      bool chord = false;
      for (int i = 1; i + 1 < depth; ++i)
        if (g.has_edge(w, path[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      path.push_back(w);
      blocked[w] = 1;
      if (extend()) return true;
      blocked[w] = 0;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, int min_len) {
  require(min_len >= 3, ErrorCode::invalid_argument, "cycles have length >= 3");
  Vertex n = g.vertex_count();
  for (int target = min_len; target <= n; ++target) {
    bool reached = false;
    for (Vertex s = 0; s < n; ++s) {
      CycleSearch search(g, target);
      search.path.push_back(s);
      search.blocked[s] = 1;
      if (search.extend()) return search.path;
      reached = reached || search.reached_full_depth;
    }
    // An induced cycle on more than `target` vertices contains an induced
    // path on `target` vertices starting at its minimum vertex, so if no such
    // path was reached the sweep can stop.
    if (!reached) return std::nullopt;
  }
  return std::nullopt;
}

namespace {

bool extend_clique(const TwoColoring& colouring, const std::vector<Vertex>& set, Colour c,
                   int size, std::size_t from, std::vector<Vertex>& chosen) {
  if (static_cast<int>(chosen.size()) == size) return true;
  for (std::size_t i = from; i < set.size(); ++i) {
    Vertex v = set[i];
    bool ok = true;
    for (Vertex u : chosen)
      if (!colouring.has_edge_of(u, v, c)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(v);
    if (extend_clique(colouring, set, c, size, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_monochromatic_clique(
    const TwoColoring& colouring, const std::vector<Vertex>& set, Colour c, int size,
    const SearchLimits& limits) {
  require(size >= 1, ErrorCode::invalid_argument, "clique size must be positive");
  if (static_cast<int>(set.size()) > limits.clique_set_cap)
    fail(ErrorCode::search_capped,
         "clique search over " + std::to_string(set.size()) + " vertices exceeds cap " +
             std::to_string(limits.clique_set_cap));
  if (static_cast<int>(set.size()) < size) return std::nullopt;
  std::vector<Vertex> chosen;
  chosen.reserve(size);
  if (extend_clique(colouring, set, c, size, 0, chosen)) return chosen;
  return std::nullopt;
}

namespace {

bool extend_biclique(const TwoColoring& colouring, const std::vector<Vertex>& a,
                     const std::vector<Vertex>& b, Colour c, int s, std::size_t from,
                     std::vector<Vertex>& left, std::vector<char>& b_alive, int alive_count,
                     std::vector<Vertex>* right_out) {
  if (static_cast<int>(left.size()) == s) {
    if (alive_count < s) return false;
    right_out->clear();
    for (std::size_t j = 0; j < b.size() && static_cast<int>(right_out->size()) < s; ++j)
      if (b_alive[j]) right_out->push_back(b[j]);
    return true;
  }
  int needed = s - static_cast<int>(left.size());
  for (std::size_t i = from; i + needed <= a.size(); ++i) {
    Vertex v = a[i];
    // Filter the surviving B-side by v's colour-c adjacency.
    std::vector<std::size_t> killed;
    int alive = alive_count;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b_alive[j]) continue;
      if (!colouring.has_edge_of(v, b[j], c)) {
        b_alive[j] = 0;
        killed.push_back(j);
        --alive;
      }
    }
    if (alive >= s) {
      left.push_back(v);
      if (extend_biclique(colouring, a, b, c, s, i + 1, left, b_alive, alive, right_out))
        return true;
      left.pop_back();
    }
    for (std::size_t j : killed) b_alive[j] = 1;
  }
  return false;
}

}  // namespace

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
find_monochromatic_biclique(const TwoColoring& colouring, const std::vector<Vertex>& a,
                            const std::vector<Vertex>& b, Colour c, int s,
                            const SearchLimits& limits) {
  require(s >= 1, ErrorCode::invalid_argument, "biclique size must be positive");
  for (Vertex u : a)
    for (Vertex v : b)
      require(u != v, ErrorCode::invalid_argument, "biclique sides must be disjoint");
  if (static_cast<int>(a.size()) > limits.biclique_side_cap ||
      static_cast<int>(b.size()) > limits.biclique_side_cap)
    fail(ErrorCode::search_capped,
         "biclique search sides " + std::to_string(a.size()) + "x" + std::to_string(b.size()) +
             " exceed cap " + std::to_string(limits.biclique_side_cap));
  if (static_cast<int>(a.size()) < s || static_cast<int>(b.size()) < s) return std::nullopt;
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  std::vector<char> alive(b.size(), 1);
  if (extend_biclique(colouring, a, b, c, s, 0, left, alive, static_cast<int>(b.size()),
                      &right))
    return std::make_pair(left, right);
  return std::nullopt;
}

TwoColoring auxiliary_coloring(const TwoColoring& colouring,
                               const std::vector<std::vector<Vertex>>& parts, int s,
                               const SearchLimits& limits) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(static_cast<int>(parts[i].size()) >= s, ErrorCode::invalid_argument,
            "auxiliary colouring needs parts of size >= s");
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (Vertex v : parts[i])
        require(std::find(parts[j].begin(), parts[j].end(), v) == parts[j].end(),
                ErrorCode::invalid_argument, "auxiliary colouring parts must be disjoint");
  }
  Vertex m = static_cast<Vertex>(parts.size());
  auto complete = share(Graph::complete(m));
  std::vector<Colour> colours(complete->edge_count(), Colour::red);
  for (std::size_t e = 0; e < complete->edge_count(); ++e) {
    auto [i, j] = complete->edges()[e];
    if (find_monochromatic_biclique(colouring, parts[i], parts[j], Colour::blue, s, limits)
            .has_value())
      colours[e] = Colour::blue;
  }
  return TwoColoring(complete, std::move(colours));
}

}  // namespace ramsey
