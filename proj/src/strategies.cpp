#include "ramsey/strategies.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "ramsey/error.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

ColouringStrategy parse_strategy(const std::string& name) {
  if (name == "all-red") return ColouringStrategy::all_red;
  if (name == "all-blue") return ColouringStrategy::all_blue;
  if (name == "uniform-random") return ColouringStrategy::uniform_random;
  if (name == "block-monochrome") return ColouringStrategy::block_monochrome;
  if (name == "layer-flip") return ColouringStrategy::layer_flip;
  if (name == "greedy-anti-tree") return ColouringStrategy::greedy_anti_tree;
  fail(ErrorCode::invalid_argument, "unknown colouring strategy '" + name + "'");
}

const char* strategy_name(ColouringStrategy s) {
  switch (s) {
    case ColouringStrategy::all_red: return "all-red";
    case ColouringStrategy::all_blue: return "all-blue";
    case ColouringStrategy::uniform_random: return "uniform-random";
    case ColouringStrategy::block_monochrome: return "block-monochrome";
    case ColouringStrategy::layer_flip: return "layer-flip";
    case ColouringStrategy::greedy_anti_tree: return "greedy-anti-tree";
  }
  return "?";
}

TwoColoring colour_host(const LayeredHost& host, ColouringStrategy strategy,
                        std::uint64_t seed, double bias) {
  auto gamma = share(host.gamma);
  const Graph& g = *gamma;
  std::vector<Colour> colours(g.edge_count(), Colour::red);
  SplitRng rng(seed);

  switch (strategy) {
    case ColouringStrategy::all_red:
      break;
    case ColouringStrategy::all_blue:
      std::fill(colours.begin(), colours.end(), Colour::blue);
      break;
    case ColouringStrategy::uniform_random: {
      SplitRng stream = rng.fork(SplitRng::kColouring);
      for (auto& c : colours)
        c = stream.next_bernoulli(bias) ? Colour::red : Colour::blue;
      break;
    }
    case ColouringStrategy::block_monochrome: {
      // Base edges take their block's coin; layer-only edges take fair coins.
      std::vector<Colour> block_colour(host.design.blocks.size(), Colour::red);
      for (int b : host.present_blocks) {
        SplitRng stream = rng.fork(SplitRng::kColouring, static_cast<std::uint64_t>(b));
        block_colour[b] = stream.next_bernoulli(0.5) ? Colour::red : Colour::blue;
      }
      // Vertex pair -> covering block (each pair lies in exactly one block).
      std::unordered_map<std::uint64_t, int> block_of_pair;
      for (int b : host.present_blocks) {
        const auto& block = host.design.blocks[b];
        for (std::size_t x = 0; x < block.size(); ++x)
          for (std::size_t y = x + 1; y < block.size(); ++y)
            block_of_pair[edge_key(block[x], block[y])] = b;
      }
      SplitRng residue = rng.fork(SplitRng::kColouring, 1u << 20);
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& prov = host.provenance[i];
        if (prov.in_base) {
          const auto& [u, v] = g.edges()[i];
          auto it = block_of_pair.find(edge_key(u, v));
          require(it != block_of_pair.end(), ErrorCode::internal,
                  "base edge without a covering block");
          colours[i] = block_colour[it->second];
        } else {
          colours[i] = residue.next_bernoulli(0.5) ? Colour::red : Colour::blue;
        }
      }
      break;
    }
    case ColouringStrategy::layer_flip:
      for (std::size_t i = 0; i < g.edge_count(); ++i)
        colours[i] = host.provenance[i].in_base ? Colour::red : Colour::blue;
      break;
    case ColouringStrategy::greedy_anti_tree: {
      std::vector<int> parent(g.vertex_count());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& [u, v] = g.edges()[i];
        int ru = find(u), rv = find(v);
        if (ru != rv) {
          colours[i] = Colour::blue;
          parent[ru] = rv;
        } else {
          colours[i] = Colour::red;
        }
      }
      break;
    }
  }
  return TwoColoring(gamma, std::move(colours));
}

}  // namespace ramsey
