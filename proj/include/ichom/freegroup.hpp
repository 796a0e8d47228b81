#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ichom::freegroup {

struct Letter {
  int generator;  // 1-based
  int sign;       // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word. Literal syntax: lowercase letters are generators
// (a = 1, b = 2, ...), uppercase letters their inverses; "" or "1" is the
// identity.
class Word {
 public:
  Word() = default;
  static Word parse(std::string_view literal);
  static Word generator(int index, int sign = 1);

  const std::vector<Letter>& letters() const& { return letters_; }

  std::vector<Letter> letters() && { return std::move(letters_); }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max_generator() const;

  Word inverse() const;
  Word power(long long exponent) const;
  // Cyclic rotation of the letter list (no reduction).
  std::vector<Letter> rotated(std::size_t offset) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

  std::string to_string() const;

 private:
  friend Word reduce(std::span<const Letter> letters);
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> letters);

// Reduced form of (x y x^-1 y^-1)^n.
Word commutator(const Word& x, const Word& y);
Word commutator_power(const Word& x, const Word& y, long long n);

struct AbelianImage {
  std::vector<long long> exponent_sums;  // index 0 is generator 1

  bool is_zero() const;
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
  std::string to_string() const;  // "(e1,e2,...)"
};

AbelianImage abelianize(const Word& w, int generator_count = 2);

// Shortest conjugate; the cyclically reduced core of w.
struct CyclicReduction {
  Word conjugator;  // w = conjugator * core * conjugator^-1
  Word core;
};
CyclicReduction cyclically_reduce(const Word& w);

struct CommutatorWitness {
  // Some cyclic rotation of the core of w reads literally as
  // A B C A^-1 B^-1 C^-1, which equals [A B, C A^-1].
  Word a, b, c;
  std::size_t rotation = 0;
  // w = g [x, y] g^-1
  Word conjugator, x, y;
};

struct CommutatorDecision {
  bool is_commutator = false;
  std::optional<CommutatorWitness> witness;
};

// Exhaustive search over rotations and cut points of the cyclic core for the
// form A B C A^-1 B^-1 C^-1 (pieces may be empty).
CommutatorDecision is_single_commutator(const Word& w);

}  // namespace ichom::freegroup
