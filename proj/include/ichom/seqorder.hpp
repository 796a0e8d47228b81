#pragma once

// Finite sequences of positive integers, the order on them, and the embedding
// of the bounded sequences into [0,1] by the weights 1/(2^n n!).

#include <string>
#include <string_view>
#include <variant>
#include <utility>
#include <vector>

#include "ichom/rational.hpp"

namespace ichom::seqorder {

inline constexpr int kDefaultEnumerationCap = 8;

// Nonempty sequence of positive integers.
class Seq {
 public:
  explicit Seq(std::vector<int> entries);

  static Seq ones(int count);  // count copies of <1>
  // Comma-separated positive integers, e.g. "1,2,3".
  static Seq parse(std::string_view literal);

  int length() const { return static_cast<int>(entries_.size()); }
  // 1-based access, matching s(i).
  int at(int index) const { return entries_.at(static_cast<std::size_t>(index - 1)); }
  const std::vector<int>& entries() const& { return entries_; }
  std::vector<int> entries() && { return std::move(entries_); }

  // s(i) <= i for every i.
  bool is_bounded() const;

  Seq operator+(const Seq& suffix) const;
  Seq appended(int entry) const;
  Seq prefix(int length) const;

  std::string to_string() const;
  friend bool operator==(const Seq&, const Seq&) = default;

 private:
  std::vector<int> entries_;
};

enum class Order { Less, Equal, Greater };

Order compare(const Seq& s, const Seq& t);
inline bool precedes(const Seq& s, const Seq& t) { return compare(s, t) == Order::Less; }

// 1 / (2^n n!), n >= 1.
Rational lambda(int n);

// sum of lambda(l(t)) over all bounded t preceding s; s must be bounded.
Rational tau(const Seq& s);

struct TauBracket {
  Rational lo;
  Rational hi;
};

// lo is the sum of lambda(l(t)) over predecessors t of length <= depth, hi adds
// the tail bound 2^-depth. The predecessors of each length are counted
// position by position from the definition of the order; the recurrence used
// by tau() is not involved.
TauBracket tau_oracle(const Seq& s, int depth);

// Number of t in B_n with t preceding s.
Integer count_predecessors(const Seq& s, int n);

// B_n in increasing order; n! entries.
std::vector<Seq> enumerate_B(int n, int max_n = kDefaultEnumerationCap);

struct IntervalHit {
  Seq seq;
  Rational offset;  // x - tau(seq), in [0, lambda(l(seq)))
};

struct GapHit {
  int depth;
  // distance from x to the nearest endpoint of an interval of generation <= depth
  Rational bound;
};

using LocateResult = std::variant<IntervalHit, GapHit>;

// Finds s with l(s) <= depth and tau(s) <= x < tau(s + <1>). Ties go to the
// interval that starts at x.
LocateResult locate(const Rational& x, int depth);

// Distance from x to the union of the closed intervals
// [tau(s), tau(s + <1>)] with l(s) <= depth.
Rational distance_to_intervals(const Rational& x, int depth);

struct DensityRow {
  Rational grid_point;
  Rational distance;
};

// distance_to_intervals at j/grid for j = 0..grid.
std::vector<DensityRow> density_profile(int depth, int grid);
// Maximum of density_profile.
Rational density_report(int depth, int grid);

}  // namespace ichom::seqorder
