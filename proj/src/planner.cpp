#include "topoplan/planner.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace topo {

namespace {

struct Node {
  int vertex;
  Word word;  // Dehn-reduced accumulated signature
  double g;
  int parent;  // index into the node arena, -1 for the start
};

std::string state_key(int vertex, const Word& w) {
  return std::to_string(vertex) + "|" + w.str();
}

}  // namespace

PlanResult plan_k_classes(const SearchSpace& space, const Presentation& pres,
                          const PlanOptions& opt) {
  PlanResult result;

  std::vector<Node> arena;
  // (f, g, node index); g breaks f ties toward deeper states
  using QItem = std::tuple<double, double, int>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<>> open;
  std::unordered_map<std::string, double> best_g;
  std::unordered_set<std::string> closed;

  arena.push_back({space.start, Word{}, 0.0, -1});
  best_g[state_key(space.start, Word{})] = 0.0;
  open.push({space.heuristic(space.start), 0.0, 0});

  std::size_t expansions = 0;
  while (!open.empty() && static_cast<int>(result.classes.size()) < opt.k &&
         expansions < opt.max_expansions) {
    auto [f, g, ni] = open.top();
    open.pop();
    const Node node = arena[static_cast<std::size_t>(ni)];
    std::string key = state_key(node.vertex, node.word);
    if (closed.count(key)) continue;
    closed.insert(key);
    ++expansions;

    if (node.vertex == space.goal) {
      bool fresh = true;
      for (const auto& c : result.classes) {
        if (equivalent(c.word, node.word, pres) == Equivalence::proven_equal) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        PlannedPath p;
        p.cost = node.g;
        p.word = node.word;
        for (int cur = ni; cur != -1; cur = arena[static_cast<std::size_t>(cur)].parent) {
          p.vertices.push_back(arena[static_cast<std::size_t>(cur)].vertex);
        }
        std::reverse(p.vertices.begin(), p.vertices.end());
        result.classes.push_back(std::move(p));
      }
      if (static_cast<int>(result.classes.size()) >= opt.k) break;
      // fall through: other classes may route through the goal vertex
    }

    for (const auto& e : space.neighbors(node.vertex)) {
      Word w = dehn_reduce(compose(node.word, e.signature), pres);
      if (w.size() > opt.max_word_length) continue;
      double ng = node.g + e.cost;
      std::string nkey = state_key(e.to, w);
      auto it = best_g.find(nkey);
      if (it != best_g.end() && it->second <= ng) continue;
      best_g[nkey] = ng;
      arena.push_back({e.to, std::move(w), ng, ni});
      open.push({ng + space.heuristic(e.to), ng, static_cast<int>(arena.size()) - 1});
    }
  }

  result.complete = static_cast<int>(result.classes.size()) >= opt.k;
  return result;
}

}  // namespace topo
