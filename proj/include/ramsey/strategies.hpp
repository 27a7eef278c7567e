#pragma once

#include <string>

#include "ramsey/coloring.hpp"
#include "ramsey/host.hpp"

namespace ramsey {

enum class ColouringStrategy {
  all_red,
  all_blue,
  uniform_random,   // each edge red with probability `bias`
  block_monochrome, // each present block's clique one uniform colour
  layer_flip,       // base edges red, layer-only edges blue
  greedy_anti_tree, // blue kept acyclic: an edge is blue iff it joins two
                    // distinct blue components, so blue grows a spanning
                    // forest and every chord goes red
};

ColouringStrategy parse_strategy(const std::string& name);
const char* strategy_name(ColouringStrategy s);

TwoColoring colour_host(const LayeredHost& host, ColouringStrategy strategy,
                        std::uint64_t seed, double bias = 0.5);

}  // namespace ramsey
