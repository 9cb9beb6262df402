#include "qharmonic/word.hpp"

#include <stdexcept>

namespace qharmonic {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != 'x' && c != 'y') {
      throw std::invalid_argument("word letters must be 'x' or 'y'");
    }
  }
}

Word to_word(const Composition& s) {
  if (!s.all_positive()) {
    throw std::invalid_argument("to_word: entries must be >= 1");
  }
  std::string out;
  for (int e : s.entries()) {
    out.append(static_cast<size_t>(e) - 1, 'x');
    out.push_back('y');
  }
  return Word(std::move(out));
}

Composition to_composition(const Word& w) {
  if (w.empty()) return Composition();
  if (w.letters().back() != 'y') {
    throw std::invalid_argument("to_composition: word must end in y");
  }
  std::vector<int> entries;
  int run = 0;
  for (char c : w.letters()) {
    if (c == 'x') {
      ++run;
    } else {
      entries.push_back(run + 1);
      run = 0;
    }
  }
  return Composition(std::move(entries));
}

Word word_dual(const Word& w) {
  if (w.empty() || w.letters().back() != 'y') {
    throw std::invalid_argument("word_dual: word must be nonempty and end in y");
  }
  std::string flipped;
  flipped.reserve(w.letters().size());
  for (char c : w.letters()) flipped.push_back(c == 'x' ? 'y' : 'x');
  // The flip turned the final y into x; dropping it and appending y keeps
  // the word in the decodable family.
  flipped.pop_back();
  flipped.push_back('y');
  return Word(std::move(flipped));
}

}  // namespace qharmonic
