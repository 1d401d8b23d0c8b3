#include "topoplan/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace topo {

std::vector<Word> symmetricize(const std::vector<Word>& relations) {
  std::set<Word> out;
  for (const auto& r : relations) {
    Word core = cyclic_reduce(r).core;
    if (core.empty()) continue;
    for (std::size_t k = 0; k < core.size(); ++k) {
      Word rot = core.rotated(k);
      out.insert(rot);
      out.insert(rot.inverse());
    }
  }
  return {out.begin(), out.end()};
}

Presentation::Presentation(std::set<std::string> alphabet, std::vector<Word> relations)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    for (const auto& l : r.letters()) {
      if (!alphabet_.count(l.gen)) {
        throw std::invalid_argument("relation letter '" + l.gen + "' not in alphabet");
      }
    }
  }
  symmetricized_ = symmetricize(relations_);
}

namespace {

// One Dehn step on a freely reduced word. Returns true if a replacement was
// made. Scan order: relations as sorted; within the word leftmost start,
// then longest match.
bool dehn_step(Word& w, const std::vector<Word>& rbar) {
  for (const auto& rho : rbar) {
    const auto& rl = rho.letters();
    const std::size_t n = rl.size();
    const std::size_t min_len = n / 2 + 1;  // strictly more than half
    if (w.size() < min_len) continue;

    std::size_t best_start = 0, best_len = 0, best_rpos = 0;
    for (std::size_t start = 0; start + min_len <= w.size() && best_len == 0; ++start) {
      // longest subword of rho starting at w[start]
      for (std::size_t len = std::min(n, w.size() - start); len >= min_len; --len) {
        for (std::size_t rpos = 0; rpos + len <= n; ++rpos) {
          bool match = true;
          for (std::size_t i = 0; i < len && match; ++i) {
            match = (w[start + i] == rl[rpos + i]);
          }
          if (match) {
            best_start = start;
            best_len = len;
            best_rpos = rpos;
            break;
          }
        }
        if (best_len) break;
      }
    }
    if (!best_len) continue;

    // rho = alpha beta gamma; replace beta by alpha^-1 gamma^-1.
    Word next;
    for (std::size_t i = 0; i < best_start; ++i) next.push(w[i]);
    for (std::size_t i = best_rpos; i-- > 0;) next.push(rl[i].inverse());
    for (std::size_t i = rl.size(); i-- > best_rpos + best_len;) next.push(rl[i].inverse());
    for (std::size_t i = best_start + best_len; i < w.size(); ++i) next.push(w[i]);
    w = std::move(next);
    return true;
  }
  return false;
}

}  // namespace

Word dehn_reduce(const Word& w, const Presentation& p) {
  Word cur = w;  // already freely reduced by the Word invariant
  while (dehn_step(cur, p.symmetricized())) {
  }
  return cur;
}

Word dehn_reduce_closed(const Word& w, const Presentation& p) {
  Word core = cyclic_reduce(w).core;
  bool progress = true;
  while (progress && !core.empty()) {
    progress = false;
    for (std::size_t k = 0; k < core.size() && !progress; ++k) {
      Word rot = core.rotated(k);
      if (dehn_step(rot, p.symmetricized())) {
        core = cyclic_reduce(rot).core;
        progress = true;
      }
    }
  }
  return core;
}

Equivalence equivalent(const Word& w1, const Word& w2, const Presentation& p) {
  Word diff = compose(w1, invert(w2));
  return dehn_reduce_closed(diff, p).empty() ? Equivalence::proven_equal
                                             : Equivalence::not_proven;
}

std::string canonical_key(const Word& w, const Presentation& p) {
  return dehn_reduce(w, p).str();
}

}  // namespace topo
