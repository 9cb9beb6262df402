#include <stdexcept>

#include "doctest.h"
#include "qharmonic/composition.hpp"
#include "qharmonic/verify.hpp"
#include "qharmonic/word.hpp"

namespace {

using qharmonic::Composition;
using qharmonic::parse_composition;
using qharmonic::Word;

}  // namespace

TEST_CASE("compositions encode as x-run words ending in y") {
  CHECK(qharmonic::to_word(parse_composition("2,2")) == Word("xyxy"));
  CHECK(qharmonic::to_word(parse_composition("1,2,1")) == Word("yxyy"));
  for (int m = 1; m <= 5; ++m) {
    std::string expected(static_cast<size_t>(m - 1), 'x');
    expected += 'y';
    CHECK(qharmonic::to_word(Composition(std::vector<int>{m})) ==
          Word(expected));
  }
  CHECK(qharmonic::to_word(Composition()).empty());
}

TEST_CASE("word length equals composition weight") {
  for (const Composition& s : qharmonic::compositions_up_to_weight(8)) {
    CHECK(static_cast<int>(qharmonic::to_word(s).letters().size()) ==
          s.weight());
  }
}

TEST_CASE("decoding splits before each y") {
  CHECK(qharmonic::to_composition(Word("yxyy")) ==
        parse_composition("1,2,1"));
  CHECK(qharmonic::to_composition(Word("xyxy")) == parse_composition("2,2"));
  CHECK(qharmonic::to_composition(Word()).empty());
  CHECK_THROWS_AS(qharmonic::to_composition(Word("yx")),
                  std::invalid_argument);
}

TEST_CASE("words reject letters outside the alphabet") {
  CHECK_THROWS_AS(Word("xz"), std::invalid_argument);
}

TEST_CASE("encoding rejects zero entries") {
  CHECK_THROWS_AS(qharmonic::to_word(parse_composition("1,0,2")),
                  std::invalid_argument);
}

TEST_CASE("word dual swaps letters then repairs the tail") {
  CHECK(qharmonic::word_dual(Word("xyxy")) == Word("yxyy"));
  CHECK(qharmonic::word_dual(Word("y")) == Word("y"));
  CHECK_THROWS_AS(qharmonic::word_dual(Word()), std::invalid_argument);
  CHECK_THROWS_AS(qharmonic::word_dual(Word("yx")), std::invalid_argument);
}

TEST_CASE("word dual is a length-preserving involution") {
  for (const Composition& s : qharmonic::compositions_up_to_weight(10)) {
    const Word w = qharmonic::to_word(s);
    const Word d = qharmonic::word_dual(w);
    CHECK(d.letters().size() == w.letters().size());
    CHECK(qharmonic::word_dual(d) == w);
  }
}

TEST_CASE("both dual formulations agree on every composition") {
  for (const Composition& s : qharmonic::compositions_up_to_weight(10)) {
    CHECK(qharmonic::to_composition(
              qharmonic::word_dual(qharmonic::to_word(s))) ==
          qharmonic::dual(s));
  }
}
