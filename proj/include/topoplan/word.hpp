#pragma once

#include <string>
#include <vector>

namespace topo {

// A signed generator symbol. Generator ids are plain strings with the
// lexicographic total order; all modules agree on this ordering so that
// serialized words are stable across runs.
struct Letter {
  std::string gen;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.sign == b.sign && a.gen == b.gen;
  }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.sign < b.sign;
  }
};

// A freely reduced word in a free group. The canonical-storage invariant is
// that no adjacent pair of letters is mutually inverse; every constructor and
// mutator maintains it.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word single(std::string gen, int sign = 1) {
    return Word({Letter{std::move(gen), sign}});
  }

  // Appends one letter, cancelling against the current tail if inverse.
  void push(const Letter& l);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;

  // Rotation by k: letters [k..) followed by [0..k). Only meaningful for
  // cyclically reduced words; the result is re-reduced regardless.
  Word rotated(std::size_t k) const;

  // Serialization: whitespace-separated tokens, "id" for +1, "id^-1" for -1.
  // The empty word serializes to "".
  std::string str() const;
  static Word parse(const std::string& text);

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {
    return a.letters_ < b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

// Free reduction of an arbitrary letter sequence.
Word free_reduce(const std::vector<Letter>& letters);

// Group operation: free_reduce(w1 . w2).
Word compose(const Word& w1, const Word& w2);

// Reverses order and flips every sign.
Word invert(const Word& w);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // w == conjugator . core . conjugator^-1
};

// Strips matching inverse letters from the two ends of a freely reduced word.
CyclicReduction cyclic_reduce(const Word& w);

}  // namespace topo
