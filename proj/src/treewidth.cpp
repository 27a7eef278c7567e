#include "ramsey/treewidth.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <functional>
#include <unordered_map>

#include "ramsey/error.hpp"

namespace ramsey {

bool TreeDecomposition::valid_for(const Graph& g) const {
  // Vertex coverage.
  std::vector<char> seen(g.vertex_count(), 0);
  for (const auto& bag : bags)
    for (Vertex v : bag) {
      if (v < 0 || v >= g.vertex_count()) return false;
      seen[v] = 1;
    }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!seen[v]) return false;
  // Edge coverage.
  for (const auto& [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& bag : bags) {
      bool has_u = std::find(bag.begin(), bag.end(), u) != bag.end();
      bool has_v = std::find(bag.begin(), bag.end(), v) != bag.end();
      if (has_u && has_v) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  // Running intersection: bags containing v induce a connected subtree.
  std::vector<std::vector<int>> bag_adj(bags.size());
  for (const auto& [a, b] : tree_edges) {
    bag_adj[a].push_back(b);
    bag_adj[b].push_back(a);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> holding;
    for (std::size_t i = 0; i < bags.size(); ++i)
      if (std::find(bags[i].begin(), bags[i].end(), v) != bags[i].end())
        holding.push_back(static_cast<int>(i));
    if (holding.empty()) return false;
    std::set<int> holding_set(holding.begin(), holding.end());
    std::queue<int> queue;
    std::set<int> reached;
    queue.push(holding[0]);
    reached.insert(holding[0]);
    while (!queue.empty()) {
      int bag = queue.front();
      queue.pop();
      for (int next : bag_adj[bag])
        if (holding_set.count(next) && !reached.count(next)) {
          reached.insert(next);
          queue.push(next);
        }
    }
    if (reached.size() != holding_set.size()) return false;
  }
  return true;
}

namespace {

// Fill-in graph state for elimination-order algorithms, on adjacency sets.
struct EliminationState {
  std::vector<std::set<Vertex>> adj;

  explicit EliminationState(const Graph& g) : adj(g.vertex_count()) {
    for (const auto& [u, v] : g.edges()) {
      adj[u].insert(v);
      adj[v].insert(u);
    }
  }

  // Eliminates v: connects its neighbourhood into a clique, removes v.
  void eliminate(Vertex v) {
    std::vector<Vertex> nbrs(adj[v].begin(), adj[v].end());
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        adj[nbrs[i]].insert(nbrs[j]);
        adj[nbrs[j]].insert(nbrs[i]);
      }
    for (Vertex w : nbrs) adj[w].erase(v);
    adj[v].clear();
  }

  int fill_needed(Vertex v) const {
    std::vector<Vertex> nbrs(adj[v].begin(), adj[v].end());
    int fill = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!adj[nbrs[i]].count(nbrs[j])) ++fill;
    return fill;
  }
};

std::vector<Vertex> min_fill_order(const Graph& g) {
  EliminationState state(g);
  Vertex n = g.vertex_count();
  std::vector<char> eliminated(n, 0);
  std::vector<Vertex> order;
  for (Vertex step = 0; step < n; ++step) {
    Vertex best = -1;
    long best_key = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      long key = static_cast<long>(state.fill_needed(v)) * (n + 1) +
                 static_cast<long>(state.adj[v].size());
      if (best < 0 || key < best_key) {
        best = v;
        best_key = key;
      }
    }
    order.push_back(best);
    state.eliminate(best);
    eliminated[best] = 1;
  }
  return order;
}

int order_width(const Graph& g, const std::vector<Vertex>& order) {
  EliminationState state(g);
  int width = 0;
  for (Vertex v : order) {
    width = std::max(width, static_cast<int>(state.adj[v].size()));
    state.eliminate(v);
  }
  return width;
}

TreeDecomposition decomposition_from_order(const Graph& g,
                                           const std::vector<Vertex>& order) {
  // Standard construction: bag(v) = {v} u higher neighbourhood in the filled
  // graph; bag(v) hangs off the bag of the first later vertex it contains.
  EliminationState state(g);
  Vertex n = g.vertex_count();
  std::vector<int> position(n);
  for (Vertex i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::vector<Vertex>> bags(n);
  for (Vertex v : order) {
    bags[position[v]].push_back(v);
    for (Vertex w : state.adj[v]) bags[position[v]].push_back(w);
    std::sort(bags[position[v]].begin(), bags[position[v]].end());
    state.eliminate(v);
  }
  TreeDecomposition td;
  td.bags = bags;
  for (Vertex i = 0; i < n; ++i) {
    // Attach to the bag of the earliest-later vertex in this bag.
    int attach = -1;
    for (Vertex w : bags[i]) {
      if (position[w] > i && (attach < 0 || position[w] < attach)) attach = position[w];
    }
    if (attach >= 0) td.tree_edges.push_back({static_cast<int>(i), attach});
  }
  td.width = 0;
  for (const auto& bag : td.bags)
    td.width = std::max(td.width, static_cast<int>(bag.size()) - 1);
  return td;
}

// MMD lower bound: repeatedly remove the minimum-degree vertex and track the
// largest minimum degree seen.
int mmd_lower_bound(const Graph& g) {
  EliminationState state(g);
  Vertex n = g.vertex_count();
  std::vector<char> gone(n, 0);
  int bound = 0;
  for (Vertex step = 0; step < n; ++step) {
    Vertex arg = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (arg < 0 || state.adj[v].size() < state.adj[arg].size())) arg = v;
    bound = std::max(bound, static_cast<int>(state.adj[arg].size()));
    for (Vertex w : state.adj[arg]) state.adj[w].erase(arg);
    state.adj[arg].clear();
    gone[arg] = 1;
  }
  return bound;
}

// Branch and bound over elimination orders, memoised per eliminated set (the
// remaining graph depends only on that set, so a revisit with an equal or
// larger running width is dominated). A node budget guards the worst case;
// when it runs out the heuristic order stands and exactness is not claimed.
struct ExactSolver {
  const Graph& g;
  Vertex n;
  int best_width;
  std::vector<Vertex> best_order;
  std::unordered_map<std::uint64_t, int> seen_width;  // eliminated mask -> width
  long budget;

  ExactSolver(const Graph& graph, int upper, std::vector<Vertex> upper_order)
      : g(graph), n(graph.vertex_count()), best_width(upper),
        best_order(std::move(upper_order)), budget(2'000'000) {}

  void search(EliminationState& state, std::vector<char>& gone, int done, int width,
              std::vector<Vertex>& order) {
    if (budget-- <= 0) return;
    if (done == n) {
      if (width < best_width) {
        best_width = width;
        best_order = order;
      }
      return;
    }
    if (width >= best_width) return;
    std::uint64_t mask = 0;
    for (Vertex v = 0; v < n; ++v)
      if (gone[v]) mask |= (1ULL << v);
    auto [it, inserted] = seen_width.try_emplace(mask, width);
    if (!inserted) {
      if (it->second <= width) return;
      it->second = width;
    }

    // A simplicial vertex dominates every alternative: its neighbourhood is a
    // clique, so the remaining width is at least its degree anyway.
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      if (state.fill_needed(v) == 0) {
        int deg = static_cast<int>(state.adj[v].size());
        if (deg >= best_width) return;
        EliminationState saved = state;
        gone[v] = 1;
        order.push_back(v);
        state.eliminate(v);
        search(state, gone, done + 1, std::max(width, deg), order);
        state = saved;
        order.pop_back();
        gone[v] = 0;
        return;
      }
    }

    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      int deg = static_cast<int>(state.adj[v].size());
      if (deg >= best_width) continue;
      EliminationState saved = state;
      gone[v] = 1;
      order.push_back(v);
      state.eliminate(v);
      search(state, gone, done + 1, std::max(width, deg), order);
      state = saved;
      order.pop_back();
      gone[v] = 0;
    }
  }

  bool run() {
    EliminationState state(g);
    std::vector<char> gone(n, 0);
    std::vector<Vertex> order;
    search(state, gone, 0, 0, order);
    return budget > 0;
  }
};

}  // namespace

TreeDecompositionResult tree_decomposition_small(const Graph& g, int width_cap,
                                                 int exact_cap) {
  TreeDecompositionResult result;
  if (g.vertex_count() == 0) {
    result.decomposition.bags = {{}};
    result.decomposition.width = 0;
    result.decomposition.exact = true;
    return result;
  }
  auto heuristic_order = min_fill_order(g);
  std::vector<Vertex> order = heuristic_order;
  bool exact = false;
  if (g.vertex_count() <= exact_cap && g.vertex_count() <= 56) {
    int upper = order_width(g, heuristic_order);
    if (upper <= mmd_lower_bound(g)) {
      exact = true;  // heuristic already meets the lower bound
    } else {
      ExactSolver solver(g, upper, heuristic_order);
      exact = solver.run();
      order = solver.best_order;
    }
  }
  result.decomposition = decomposition_from_order(g, order);
  result.decomposition.exact = exact;
  result.width_cap_exceeded = result.decomposition.width > width_cap;
  require(result.decomposition.valid_for(g), ErrorCode::internal,
          "tree decomposition failed self-validation");
  return result;
}

TreeBlowupContainer build_tree_blowup_container(const Graph& g,
                                                const TreeDecomposition& tdecomp,
                                                int d_max) {
  require(tdecomp.valid_for(g), ErrorCode::invalid_argument,
          "container needs a valid tree decomposition");
  require(g.max_degree() <= d_max, ErrorCode::degree_exceeded,
          "graph degree exceeds d_max");

  // Tree partition via BFS layer components. Parts with several parents merge
  // until every part has at most one, which keeps edges within a part or
  // between a part and its parent.
  Vertex n = g.vertex_count();
  std::vector<int> part_of(n, -1);
  std::vector<std::vector<Vertex>> parts;
  std::vector<int> parent_part;
  std::vector<int> layer_of_part;

  auto components = g.connected_components();
  std::vector<Vertex> dist(n, -1);
  for (const auto& comp : components) {
    Vertex root = comp.front();
    std::queue<Vertex> queue;
    dist[root] = 0;
    queue.push(root);
    std::map<int, std::vector<Vertex>> layers;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      layers[dist[v]].push_back(v);
      for (Vertex w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
    }
    for (const auto& [layer, vertices] : layers) {
      // Components of the induced layer graph.
      std::set<Vertex> pending(vertices.begin(), vertices.end());
      while (!pending.empty()) {
        Vertex s = *pending.begin();
        std::vector<Vertex> cluster;
        std::queue<Vertex> bfs;
        bfs.push(s);
        pending.erase(s);
        while (!bfs.empty()) {
          Vertex v = bfs.front();
          bfs.pop();
          cluster.push_back(v);
          for (Vertex w : g.neighbors(v))
            if (pending.count(w)) {
              pending.erase(w);
              bfs.push(w);
            }
        }
        std::sort(cluster.begin(), cluster.end());
        int id = static_cast<int>(parts.size());
        for (Vertex v : cluster) part_of[v] = id;
        parts.push_back(std::move(cluster));
        layer_of_part.push_back(layer);
        parent_part.push_back(-1);
      }
    }
  }

  // Union-find over parts for the parent-merging pass.
  std::vector<int> find_parent(parts.size());
  std::iota(find_parent.begin(), find_parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (find_parent[x] != x) x = find_parent[x] = find_parent[find_parent[x]];
    return x;
  };

  bool merged = true;
  while (merged) {
    merged = false;
    // Recompute parent candidates for each live part.
    std::map<int, std::set<int>> parents;
    for (const auto& [u, v] : g.edges()) {
      int pu = find(part_of[u]), pv = find(part_of[v]);
      if (pu == pv) continue;
      int lu = layer_of_part[pu], lv = layer_of_part[pv];
      if (lu == lv) {
        // Same layer across merged clusters: merge them.
        find_parent[pu] = pv;
        merged = true;
        break;
      }
      int child = lu > lv ? pu : pv;
      int parent = lu > lv ? pv : pu;
      parents[child].insert(parent);
    }
    if (merged) continue;
    for (auto& [child, cand] : parents) {
      if (cand.size() > 1) {
        auto it = cand.begin();
        int first = *it;
        ++it;
        for (; it != cand.end(); ++it) find_parent[find(*it)] = find(first);
        merged = true;
        break;
      }
    }
  }

  // Collapse merged parts.
  std::map<int, int> live_index;
  std::vector<std::vector<Vertex>> live_parts;
  std::vector<int> live_layer;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int root = find(static_cast<int>(i));
    auto [it, inserted] = live_index.try_emplace(root, static_cast<int>(live_parts.size()));
    if (inserted) {
      live_parts.emplace_back();
      live_layer.push_back(layer_of_part[root]);
    }
    int idx = it->second;
    live_layer[idx] = std::min(live_layer[idx], layer_of_part[i]);
    for (Vertex v : parts[i]) live_parts[idx].push_back(v);
  }
  for (auto& part : live_parts) std::sort(part.begin(), part.end());

  // Parent links: the unique adjacent part on a lower layer; roots without
  // one chain to the previous root so T stays a single tree.
  int live_count = static_cast<int>(live_parts.size());
  std::vector<int> part_index(n);
  for (int i = 0; i < live_count; ++i)
    for (Vertex v : live_parts[i]) part_index[v] = i;
  std::vector<std::optional<Vertex>> tree_parents(live_count);
  for (const auto& [u, v] : g.edges()) {
    int pu = part_index[u], pv = part_index[v];
    if (pu == pv) continue;
    int child = live_layer[pu] > live_layer[pv] ? pu : pv;
    int parent = live_layer[pu] > live_layer[pv] ? pv : pu;
    require(live_layer[pu] != live_layer[pv], ErrorCode::internal,
            "tree partition left a same-layer edge across parts");
    if (tree_parents[child].has_value())
      require(*tree_parents[child] == parent, ErrorCode::internal,
              "tree partition left multiple parents");
    tree_parents[child] = parent;
  }
  int previous_root = -1;
  int tree_root = -1;
  for (int i = 0; i < live_count; ++i) {
    if (tree_parents[i].has_value()) continue;
    if (previous_root < 0) {
      tree_root = i;
    } else {
      tree_parents[i] = previous_root;
    }
    previous_root = i;
  }

  TreeBlowupContainer container;
  container.tree = RootedTree::from_parents(tree_root, tree_parents);
  container.class_size = 0;
  for (const auto& part : live_parts)
    container.class_size = std::max(container.class_size, static_cast<int>(part.size()));
  container.slot_node.assign(n, 0);
  container.slot_index.assign(n, 0);
  for (int i = 0; i < live_count; ++i)
    for (std::size_t s = 0; s < live_parts[i].size(); ++s) {
      container.slot_node[live_parts[i][s]] = i;
      container.slot_index[live_parts[i][s]] = static_cast<int>(s);
    }
  container.tree_max_degree = container.tree.max_degree();

  // Verify the injective homomorphism edge by edge: endpoints share a tree
  // node or sit on adjacent tree nodes.
  for (const auto& [u, v] : g.edges()) {
    Vertex nu = container.slot_node[u], nv = container.slot_node[v];
    bool ok = nu == nv;
    if (!ok) {
      auto pu = container.tree.parent[nu];
      auto pv = container.tree.parent[nv];
      ok = (pu.has_value() && *pu == nv) || (pv.has_value() && *pv == nu);
    }
    require(ok, ErrorCode::internal, "container homomorphism check failed");
    require(nu != nv || container.slot_index[u] != container.slot_index[v],
            ErrorCode::internal, "container slot collision");
  }

  int w = std::max(1, tdecomp.width);
  long k_bound = 18L * w * d_max;
  long deg_bound = 18L * w * d_max * d_max;
  if (container.class_size > k_bound || container.tree_max_degree > deg_bound)
    fail(ErrorCode::container_bounds_exceeded,
         "container-bounds-exceeded: k = " + std::to_string(container.class_size) +
             " (bound " + std::to_string(k_bound) + "), tree degree = " +
             std::to_string(container.tree_max_degree) + " (bound " +
             std::to_string(deg_bound) + ")");
  return container;
}

}  // namespace ramsey
