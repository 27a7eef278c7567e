#include "ramsey/densifier.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

// Does the layer carry the full biclique between the two blocks' vertices?
bool biclique_present(const Graph& layer, const std::vector<Vertex>& block_a,
                      const std::vector<Vertex>& block_b) {
  for (Vertex u : block_a)
    for (Vertex v : block_b)
      if (!layer.has_edge(u, v)) return false;
  return true;
}

}  // namespace

DensifierCheck validate_densifier(const Densifier& candidate, const Graph& layer,
                                  const TwoColoring& colouring,
                                  const std::vector<Vertex>& s_set,
                                  const SearchLimits& limits) {
  DensifierCheck check;
  std::set<Vertex> s_lookup(s_set.begin(), s_set.end());
  std::set<Vertex> used;
  if (static_cast<int>(candidate.families.size()) != candidate.q)
    check.violations.push_back("family count != q");
  for (std::size_t k = 0; k < candidate.families.size(); ++k) {
    for (const auto& part : candidate.families[k]) {
      if (static_cast<int>(part.vertices.size()) != candidate.part_size)
        check.violations.push_back("part size != C' in family " + std::to_string(k));
      for (Vertex v : part.vertices) {
        if (!s_lookup.count(v))
          check.violations.push_back("part vertex outside S in family " + std::to_string(k));
        if (!used.insert(v).second)
          check.violations.push_back("parts overlap at vertex " + std::to_string(v));
      }
    }
  }
  // Family size floor: gamma * n / C' per family.
  double floor_size = candidate.gamma * static_cast<double>(layer.vertex_count()) /
                      static_cast<double>(candidate.part_size);
  for (std::size_t k = 0; k < candidate.families.size(); ++k)
    if (static_cast<double>(candidate.families[k].size()) + 1e-12 < floor_size)
      check.violations.push_back("family " + std::to_string(k) + " below size floor");

  // Cross-family biclique clause, checked only where the covering biclique
  // exists in the layer.
  for (std::size_t k = 0; k < candidate.families.size(); ++k) {
    for (std::size_t k2 = k + 1; k2 < candidate.families.size(); ++k2) {
      for (const auto& part_a : candidate.families[k]) {
        for (const auto& part_b : candidate.families[k2]) {
          if (part_a.block_index == part_b.block_index) continue;
          if (!biclique_present(layer, part_a.vertices, part_b.vertices)) continue;
          auto blue = find_monochromatic_biclique(colouring, part_a.vertices,
                                                  part_b.vertices, Colour::blue,
                                                  candidate.s, limits);
          if (blue.has_value())
            check.violations.push_back("blue biclique between families " +
                                       std::to_string(k) + " and " + std::to_string(k2));
        }
      }
    }
  }
  check.valid = check.violations.empty();
  return check;
}

namespace {

// Exhaustive tiny-scale search: assign candidate parts to q families so that
// every cross-family pair avoids a blue K_{s,s}.
struct TinySearch {
  const std::vector<DensifierPart>& parts;
  const std::vector<std::vector<char>>& compatible;  // parts x parts
  int q;
  int per_family;
  std::vector<int> family_of;  // -1 unassigned
  std::vector<int> family_fill;

  bool assign(std::size_t idx, int used_vertex_mask_unused) {
    (void)used_vertex_mask_unused;
    if (std::all_of(family_fill.begin(), family_fill.end(),
                    [&](int f) { return f >= per_family; }))
      return true;
    if (idx >= parts.size()) return false;
    // Option: skip this part.
    int remaining = static_cast<int>(parts.size() - idx);
    int deficit = 0;
    for (int f : family_fill) deficit += std::max(0, per_family - f);
    if (remaining < deficit) return false;
    for (int k = 0; k < q; ++k) {
      if (family_fill[k] >= per_family) continue;
      bool ok = true;
      for (std::size_t other = 0; other < idx && ok; ++other)
        if (family_of[other] >= 0 && family_of[other] != k)
          ok = compatible[idx][other];
      // Vertex-disjointness within a family is implied by global disjointness
      // of the candidate parts, enforced during candidate generation.
      if (!ok) continue;
      family_of[idx] = k;
      ++family_fill[k];
      if (assign(idx + 1, 0)) return true;
      --family_fill[k];
      family_of[idx] = -1;
    }
    return assign(idx + 1, 0);
  }
};

}  // namespace

std::optional<Densifier> detect_densifier(const LayerSet& layers, int layer_index,
                                          const TwoColoring& colouring,
                                          const std::vector<Vertex>& s_set, int c_prime,
                                          double gamma, int s, int q,
                                          const std::optional<Densifier>& candidate,
                                          const SearchLimits& limits) {
  const Graph& layer = layers.layers[layer_index];
  if (candidate.has_value()) {
    auto check = validate_densifier(*candidate, layer, colouring, s_set, limits);
    if (check.valid) return candidate;
    return std::nullopt;
  }

  // Direct search, tiny scale only: one candidate C'-subset per block (the
  // smallest vertices of block n S), families filled by backtracking.
  const auto& matching = layers.matchings[layer_index];
  std::vector<char> in_s(layer.vertex_count(), 0);
  for (Vertex v : s_set) in_s[v] = 1;
  std::vector<DensifierPart> parts;
  for (int b : matching) {
    DensifierPart part;
    part.block_index = b;
    for (Vertex v : layers.design->blocks[b])
      if (in_s[v] && static_cast<int>(part.vertices.size()) < c_prime)
        part.vertices.push_back(v);
    if (static_cast<int>(part.vertices.size()) == c_prime) parts.push_back(std::move(part));
  }
  double per_family_d = gamma * static_cast<double>(layer.vertex_count()) /
                        static_cast<double>(c_prime);
  int per_family = std::max(1, static_cast<int>(std::ceil(per_family_d - 1e-12)));
  if (q > 3 || per_family > 4)
    fail(ErrorCode::search_capped,
         "direct densifier search capped at q <= 3 and <= 4 parts per family; supply a "
         "candidate");
  if (static_cast<int>(parts.size()) > 24) parts.resize(24);

  std::vector<std::vector<char>> compatible(parts.size(),
                                            std::vector<char>(parts.size(), 1));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      bool ok = true;
      if (parts[i].block_index != parts[j].block_index &&
          biclique_present(layer, parts[i].vertices, parts[j].vertices)) {
        ok = !find_monochromatic_biclique(colouring, parts[i].vertices, parts[j].vertices,
                                          Colour::blue, s, limits)
                  .has_value();
      }
      compatible[i][j] = compatible[j][i] = ok;
    }

  TinySearch search{parts, compatible, q, per_family, std::vector<int>(parts.size(), -1),
                    std::vector<int>(q, 0)};
  if (!search.assign(0, 0)) return std::nullopt;
  Densifier found;
  found.part_size = c_prime;
  found.gamma = gamma;
  found.s = s;
  found.q = q;
  found.families.resize(q);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (search.family_of[i] >= 0) found.families[search.family_of[i]].push_back(parts[i]);
  auto check = validate_densifier(found, layer, colouring, s_set, limits);
  if (!check.valid) return std::nullopt;
  return found;
}

}  // namespace ramsey
