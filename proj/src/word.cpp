#include "topoplan/word.hpp"

#include <sstream>
#include <stdexcept>

namespace topo {

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (auto& l : letters) push(l);
}

void Word::push(const Letter& l) {
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +/-1");
  if (!letters_.empty() && letters_.back() == l.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

Word Word::inverse() const {
  Word out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(it->inverse());  // already reduced, no cancellation possible
  }
  return out;
}

Word Word::rotated(std::size_t k) const {
  if (letters_.empty()) return {};
  k %= letters_.size();
  Word out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    out.push(letters_[(i + k) % letters_.size()]);
  }
  return out;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += letters_[i].gen;
    if (letters_[i].sign < 0) out += "^-1";
  }
  return out;
}

Word Word::parse(const std::string& text) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      sign = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    if (tok.empty()) throw std::invalid_argument("empty generator token");
    out.push(Letter{tok, sign});
  }
  return out;
}

Word free_reduce(const std::vector<Letter>& letters) {
  Word out;
  for (const auto& l : letters) out.push(l);
  return out;
}

Word compose(const Word& w1, const Word& w2) {
  Word out = w1;
  for (const auto& l : w2.letters()) out.push(l);
  return out;
}

Word invert(const Word& w) { return w.inverse(); }

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  std::vector<Letter> conj;
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    conj.push_back(ls[lo]);
    ++lo;
    --hi;
  }
  Word core;
  for (std::size_t i = lo; i < hi; ++i) core.push(ls[i]);
  return {core, Word(std::move(conj))};
}

}  // namespace topo
