#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

#include "ichom/freegroup.hpp"

using namespace ichom::freegroup;

namespace {

// Textbook stack reduction on the literal syntax.
std::string stack_reduce(const std::string& s) {
  std::string out;
  for (char c : s) {
    const char inv = std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(c))
                                                                 : static_cast<char>(std::tolower(c));
    if (!out.empty() && out.back() == inv) out.pop_back();
    else out.push_back(c);
  }
  return out;
}

std::string random_literal(std::mt19937_64& rng, int max_len) {
  static const char alphabet[] = "abAB";
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 3);
  std::string s;
  for (int i = len(rng); i > 0; --i) s.push_back(alphabet[letter(rng)]);
  return s;
}

std::string as_literal(const Word& w) { return w.empty() ? "" : w.to_string(); }

// All reduced words of length <= n over a, b.
std::vector<Word> all_words(int n) {
  std::vector<Word> out{Word()};
  std::vector<Word> frontier{Word()};
  for (int l = 1; l <= n; ++l) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (const char* g : {"a", "b", "A", "B"}) {
        Word v = w * Word::parse(g);
        if (v.length() == static_cast<std::size_t>(l)) next.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("literal syntax") {
  CHECK(Word::parse("abAB").length() == 4);
  CHECK(Word::parse("").empty());
  CHECK(Word::parse("1").empty());
  CHECK(Word::parse("aA").empty());
  CHECK(Word::parse("abAB").to_string() == "abAB");
  CHECK(Word().to_string() == "1");
  CHECK_THROWS_AS(Word::parse("ab#"), std::invalid_argument);
  CHECK(Word::parse("c").max_generator() == 3);
}

TEST_CASE("reduce matches a stack reducer on random words") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const std::string s = random_literal(rng, 24);
    const Word w = Word::parse(s);
    CHECK(as_literal(w) == stack_reduce(s));
    CHECK(reduce(w.letters()) == w);
    CHECK(w.length() <= s.size());
  }
}

TEST_CASE("group operations") {
  const Word a = Word::parse("a"), b = Word::parse("b");
  CHECK(commutator(a, b) == Word::parse("abAB"));
  CHECK(commutator_power(a, b, 2) == Word::parse("abABabAB"));
  CHECK_THROWS_AS(commutator_power(a, b, -1), std::invalid_argument);
  CHECK(commutator_power(a, b, 0).empty());
  CHECK(Word::parse("ab").inverse() == Word::parse("BA"));
  CHECK(Word::parse("ab").power(3) == Word::parse("ababab"));
  CHECK(Word::parse("ab").power(-2) == Word::parse("BABA"));
  CHECK(commutator(a, a).empty());
}

TEST_CASE("abelianization is a homomorphism") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const Word u = Word::parse(random_literal(rng, 12)), v = Word::parse(random_literal(rng, 12));
    const auto au = abelianize(u), av = abelianize(v), auv = abelianize(u * v);
    for (std::size_t k = 0; k < 2; ++k) CHECK(auv.exponent_sums[k] == au.exponent_sums[k] + av.exponent_sums[k]);
  }
  CHECK(abelianize(Word::parse("aab")).to_string() == "(2,1)");
  CHECK(abelianize(commutator_power(Word::parse("a"), Word::parse("b"), 6)).is_zero());
}

TEST_CASE("cyclic reduction") {
  const auto r = cyclically_reduce(Word::parse("abaBA"));
  CHECK(r.core == Word::parse("a"));
  CHECK(r.conjugator == Word::parse("ab"));
  CHECK(r.conjugator * r.core * r.conjugator.inverse() == Word::parse("abaBA"));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    const Word w = Word::parse(random_literal(rng, 14));
    const auto c = cyclically_reduce(w);
    CHECK(c.conjugator * c.core * c.conjugator.inverse() == w);
    if (c.core.length() > 1) CHECK_FALSE(c.core.letters().front() == c.core.letters().back().inverse());
  }
}

TEST_CASE("single commutator search against bounded enumeration") {
  // A cyclically reduced commutator of length 2L reads A B C A^-1 B^-1 C^-1
  // after rotation, so [x, y] with |x|, |y| <= L covers every rotation class.
  const auto words = all_words(3);
  std::set<std::vector<std::pair<int, int>>> rotations_hit;
  auto key = [](const Word& w) {
    std::vector<std::pair<int, int>> k;
    for (const auto& l : w.letters()) k.push_back({l.generator, l.sign});
    return k;
  };
  for (const auto& x : words)
    for (const auto& y : words) rotations_hit.insert(key(commutator(x, y)));
  for (const auto& w : all_words(6)) {
    const auto core = cyclically_reduce(w).core;
    if (core.length() != w.length()) continue;  // cyclically reduced words only
    bool expect = false;
    for (std::size_t r = 0; r < std::max<std::size_t>(w.length(), 1) && !expect; ++r) {
      const Word rot = reduce(w.rotated(r));
      expect = rotations_hit.count(key(rot)) > 0;
    }
    const auto d = is_single_commutator(w);
    CHECK_MESSAGE(d.is_commutator == expect, w.to_string());
    if (d.is_commutator) {
      REQUIRE(d.witness);
      CHECK(d.witness->conjugator * commutator(d.witness->x, d.witness->y) * d.witness->conjugator.inverse() == w);
      CHECK(abelianize(w).is_zero());
    }
  }
}

TEST_CASE("commutator examples") {
  const Word a = Word::parse("a"), b = Word::parse("b");
  CHECK(is_single_commutator(Word::parse("abAB")).is_commutator);
  CHECK(is_single_commutator(Word()).is_commutator);
  CHECK_FALSE(is_single_commutator(commutator_power(a, b, 2)).is_commutator);
  CHECK_FALSE(is_single_commutator(Word::parse("ab")).is_commutator);
  CHECK(is_single_commutator(commutator(Word::parse("ab"), Word::parse("aab"))).is_commutator);
  // conjugates of commutators
  CHECK(is_single_commutator(Word::parse("b") * Word::parse("abAB") * Word::parse("B")).is_commutator);
  const auto rep = is_single_commutator(commutator_power(a, b, 2));
  CHECK_FALSE(rep.witness.has_value());
}
