#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "topoplan/presentation.hpp"
#include "topoplan/word.hpp"

namespace topo {

struct GraphEdge {
  int to = -1;
  double cost = 0;
  Word signature;
};

// Graph with word-valued edge signatures. neighbors() is consulted lazily;
// heuristic() must be admissible for the underlying edge costs (it is
// evaluated on the vertex alone, so it stays admissible in the augmented
// search).
struct SearchSpace {
  std::function<std::vector<GraphEdge>(int)> neighbors;
  std::function<double(int)> heuristic;
  int start = 0;
  int goal = 0;
};

struct PlanOptions {
  int k = 1;
  std::size_t max_expansions = 10'000'000;
  std::size_t max_word_length = 12;  // reduced-word cap for augmented states
};

struct PlannedPath {
  double cost = 0;
  Word word;  // reduced signature of the path
  std::vector<int> vertices;
};

struct PlanResult {
  std::vector<PlannedPath> classes;  // in order of increasing cost
  bool complete = true;              // k classes found within budget
};

// Shortest path per signature class: A* over (vertex, reduced word) states.
// Goal states are accepted in settled order, skipping any whose word is
// provably equivalent to an already accepted class.
PlanResult plan_k_classes(const SearchSpace& space, const Presentation& pres,
                          const PlanOptions& opt);

// Random shortcutting that preserves the signature class: a waypoint
// subrange is replaced by the straight move only when that move is
// collision-free and provably equivalent to the subpath it replaces.
// segment_sig returns the signature of the straight move between two
// waypoints, or nullopt if it collides. Assumes a metric where straight
// replacements never increase cost (Euclidean).
template <class P>
std::vector<P> shorten_path(
    std::vector<P> path,
    const std::function<std::optional<Word>(const P&, const P&)>& segment_sig,
    const Presentation& pres, unsigned seed, int rounds = 300) {
  std::mt19937 rng(seed);
  for (int r = 0; r < rounds && path.size() > 2; ++r) {
    std::uniform_int_distribution<std::size_t> pick(0, path.size() - 1);
    std::size_t i = pick(rng), j = pick(rng);
    if (i > j) std::swap(i, j);
    if (j - i < 2) continue;
    auto direct = segment_sig(path[i], path[j]);
    if (!direct) continue;
    Word along;
    bool ok = true;
    for (std::size_t k = i; k < j; ++k) {
      auto seg = segment_sig(path[k], path[k + 1]);
      if (!seg) {
        ok = false;
        break;
      }
      along = compose(along, *seg);
    }
    if (!ok) continue;
    if (equivalent(*direct, along, pres) != Equivalence::proven_equal) continue;
    path.erase(path.begin() + static_cast<std::ptrdiff_t>(i) + 1,
               path.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return path;
}

}  // namespace topo
