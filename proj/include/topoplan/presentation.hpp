#pragma once

#include <set>
#include <string>
#include <vector>

#include "topoplan/word.hpp"

namespace topo {

// Closure of a relation set under inversion and cyclic permutation, with
// every member cyclically reduced and duplicates removed. Output is sorted
// for deterministic downstream scanning.
std::vector<Word> symmetricize(const std::vector<Word>& relations);

// A finitely presented group <alphabet | relations>. The normal closure of
// the relations is never stored; it is represented operationally by
// dehn_reduce.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::set<std::string> alphabet, std::vector<Word> relations);

  const std::set<std::string>& alphabet() const { return alphabet_; }
  const std::vector<Word>& relations() const { return relations_; }
  const std::vector<Word>& symmetricized() const { return symmetricized_; }

  bool free() const { return symmetricized_.empty(); }

 private:
  std::set<std::string> alphabet_;
  std::vector<Word> relations_;
  std::vector<Word> symmetricized_;  // sorted, cyclically reduced
};

enum class Equivalence { proven_equal, not_proven };

// Dehn's metric algorithm on an open word: repeatedly replace a contiguous
// subword beta of w that also appears contiguously in some rho = alpha beta
// gamma of the symmetricized set, with |beta| > |rho|/2 strictly, by
// alpha^-1 gamma^-1. Relations are scanned in sorted order and within the
// word the leftmost, then longest, match is taken, so the result is
// deterministic. Subword matching is linear (no wrap): open paths are group
// elements, not conjugacy classes. Terminates because each step strictly
// shortens the word. An empty result proves membership in the normal
// closure; a nonempty result proves nothing.
Word dehn_reduce(const Word& w, const Presentation& p);

// Dehn reduction for closed words: alternates cyclic reduction with Dehn
// steps applied to every rotation of the current core.
Word dehn_reduce_closed(const Word& w, const Presentation& p);

// Sound one-sided test: proven_equal iff dehn_reduce_closed(w1 w2^-1) is
// empty. May answer not_proven for genuinely equal words (Dehn can be
// incomplete for the presentation).
Equivalence equivalent(const Word& w1, const Word& w2, const Presentation& p);

// Serialized free-reduced, Dehn-reduced form. Not cyclically reduced. Equal
// keys imply equivalent words; distinct keys prove nothing.
std::string canonical_key(const Word& w, const Presentation& p);

}  // namespace topo
