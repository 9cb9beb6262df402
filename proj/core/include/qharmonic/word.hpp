#pragma once

#include <string>

#include "qharmonic/composition.hpp"

namespace qharmonic {

/// Word over the alphabet {x, y}.  Nonempty words ending in y are in
/// bijection with nonempty positive compositions via
///   (s_1, ..., s_m)  <->  x^(s_1-1) y x^(s_2-1) y ... x^(s_m-1) y.
class Word {
 public:
  Word() = default;
  /// Validates that text uses only 'x' and 'y'.
  explicit Word(std::string letters);

  const std::string& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  std::string to_string() const { return letters_; }

 private:
  std::string letters_;
};

/// Encodes a positive composition as a word (empty composition -> empty
/// word).  Throws on entries < 1.
Word to_word(const Composition& s);

/// Decodes a word back to its composition.  Throws std::invalid_argument
/// if the word is nonempty but does not end in y.
Composition to_composition(const Word& w);

/// Dual word: swap x <-> y everywhere, drop the resulting trailing x,
/// append y.  Conjugate to the composition dual under the encoding.
/// Requires a nonempty word ending in y.
Word word_dual(const Word& w);

}  // namespace qharmonic
