#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace heckelab;

namespace {

GroupContext group(const std::string& type, BuildOptions options = {}) {
  return GroupContext::build(CoxeterMatrix::from_type(type), options);
}

}  // namespace

TEST_CASE("format and parse words") {
  CHECK(format_word(Word{}) == "e");
  CHECK(format_word(Word{1, 0, 2, 1}) == "2.1.3.2");
  CHECK(parse_word("2.1.3.2") == Word{1, 0, 2, 1});
  CHECK(parse_word("e").empty());
  CHECK_THROWS_AS(parse_word("2..1"), Error);
  CHECK_THROWS_AS(parse_word("0"), Error);
  CHECK_THROWS_AS(parse_word("a"), Error);
}

TEST_CASE("braid class of small words") {
  auto a2 = CoxeterMatrix::from_type("A:2");
  auto cls = braid_class(a2, Word{0, 1, 0});
  std::sort(cls.begin(), cls.end());
  CHECK(cls == std::vector<Word>{{0, 1, 0}, {1, 0, 1}});
  CHECK(braid_class(a2, Word{0, 1}).size() == 1);
  auto a3 = CoxeterMatrix::from_type("A:3");
  CHECK(braid_class(a3, Word{0, 2}).size() == 2);
}

TEST_CASE("tits normal form") {
  auto a2 = CoxeterMatrix::from_type("A:2");
  CHECK(tits_normal_form(a2, Word{1, 0, 1}) == Word{0, 1, 0});
  CHECK(tits_normal_form(a2, Word{0, 0}).empty());
  CHECK(tits_normal_form(a2, Word{0, 1, 0, 1}) == Word{1, 0});
  auto inf = CoxeterMatrix::from_type("I2:inf");
  CHECK(tits_normal_form(inf, Word{0, 1, 0, 1, 1, 0}) == Word{0, 1});
}

TEST_CASE("tits normal form agrees with the enumeration engines") {
  for (const char* t : {"A:3", "B:3", "H:3", "D:4"}) {
    CAPTURE(t);
    auto g = group(t);
    for (ElementId x : g.enumerate()) CHECK(tits_normal_form(g.matrix(), g.word(x)) == g.word(x));

    // random non-reduced words
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> gen(0, g.rank() - 1), len(0, 14);
    for (int i = 0; i < 150; ++i) {
      Word w(len(rng));
      for (auto& s : w) s = gen(rng);
      CHECK(tits_normal_form(g.matrix(), w) == g.word(g.evaluate(w)));
    }
  }
}

TEST_CASE("matsumoto: braid classes are exactly the reduced words") {
  for (const char* t : {"A:3", "B:3", "I2:5"}) {
    CAPTURE(t);
    auto g = group(t);
    for (ElementId x : g.enumerate()) {
      auto words = reduced_words(g, x);
      auto cls = braid_class(g.matrix(), g.word(x));
      std::sort(cls.begin(), cls.end());
      CHECK(words == cls);
      for (const auto& w : words) {
        CHECK(static_cast<int>(w.size()) == g.length(x));
        CHECK(g.evaluate(w) == x);
      }
      CHECK(words.front() == g.word(x));
    }
  }
}

TEST_CASE("reduced word counts") {
  auto a3 = group("A:3");
  // S4's longest element has 16 reduced words
  CHECK(reduced_words(a3, a3.longest_element()).size() == 16);
  auto b2 = group("B:2");
  CHECK(reduced_words(b2, b2.longest_element()).size() == 2);
}
