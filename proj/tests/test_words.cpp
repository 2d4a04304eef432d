#include <doctest.h>

#include "vkmap/words.hpp"

using namespace vkmap;

namespace {
const std::vector<char> kAB{'a', 'b'};
Word w(const std::string& text) { return parse_word(text, kAB); }
}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(w("abBa")) == w("aa"));
  CHECK(free_reduce(w("aA")) == Word{});
  CHECK(free_reduce(w("aba")) == w("aba"));

  SUBCASE("idempotent and length-nonincreasing") {
    for (const char* t : {"abBa", "aAbB", "abab", "AbaB", "aabBAA", "1"}) {
      Word x = w(t);
      Word once = free_reduce(x);
      CHECK(free_reduce(once) == once);
      CHECK(once.size() <= x.size());
      CHECK(is_freely_reduced(once));
    }
  }

  SUBCASE("w times its inverse reduces to the empty word") {
    for (const char* t : {"a", "ab", "abab", "aBab", "bbaA"}) {
      Word x = w(t);
      Word prod = x;
      Word inv = inverse(x);
      prod.insert(prod.end(), inv.begin(), inv.end());
      CHECK(free_reduce(prod).empty());
    }
  }
}

TEST_CASE("cyclic reduction and shifts") {
  CHECK(is_cyclically_reduced(w("abAB")));
  CHECK_FALSE(is_cyclically_reduced(w("abA")));
  CHECK(cyclic_shift(w("abAB"), 1) == w("bABa"));
  CHECK(cyclic_shift(w("abAB"), 4) == w("abAB"));
  CHECK(cyclic_shift(Word{}, 3) == Word{});
}

TEST_CASE("junction reduction check") {
  CHECK(concatenation_freely_reduced(w("ab"), w("ab")));
  CHECK_FALSE(concatenation_freely_reduced(w("ab"), w("Ba")));
  CHECK(concatenation_freely_reduced(Word{}, w("a")));
}

TEST_CASE("parse and format round-trip") {
  for (const char* t : {"abAB", "a", "1", "BAba"}) {
    CHECK(format_word(w(t), kAB) == t);
  }
  CHECK_THROWS_WITH_AS(parse_word("abc", kAB), doctest::Contains("UnknownGenerator"), Error);

  // Generators need not be consecutive letters.
  std::vector<char> xz{'x', 'z'};
  Word word = parse_word("xZx", xz);
  CHECK(format_word(word, xz) == "xZx");
}
