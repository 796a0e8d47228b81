#include <doctest.h>

#include <algorithm>

#include "ichom/seqorder.hpp"

using namespace ichom;
using namespace ichom::seqorder;

namespace {

// The order read straight from its two defining cases.
bool oracle_le(const std::vector<int>& s, const std::vector<int>& t) {
  const std::size_t common = std::min(s.size(), t.size());
  for (std::size_t j = 0; j < common; ++j) {
    if (s[j] != t[j]) return s[j] < t[j];
  }
  return s.size() <= t.size();
}

bool oracle_lt(const std::vector<int>& s, const std::vector<int>& t) { return s != t && oracle_le(s, t); }

// All of B_n by nested counting, independent of enumerate_B.
std::vector<std::vector<int>> brute_B(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= i; ++v) {
      cur.push_back(v);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

Rational brute_lambda(int n) {
  Integer d = 1;
  for (int i = 1; i <= n; ++i) d *= 2 * i;
  return Rational(Integer(1), d);
}

// Truncated series for tau: predecessors of length <= depth, found by
// scanning every element of B_1..B_depth.
Rational brute_tau_lo(const std::vector<int>& s, int depth) {
  Rational sum = 0;
  for (int n = 1; n <= depth; ++n) {
    for (const auto& t : brute_B(n)) {
      if (oracle_lt(t, s)) sum += brute_lambda(n);
    }
  }
  return sum;
}

}  // namespace

TEST_CASE("sequence literals") {
  CHECK(Seq::parse("1,2,3").entries() == std::vector<int>{1, 2, 3});
  CHECK(Seq::parse("1").to_string() == "1");
  CHECK_THROWS_AS(Seq::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Seq::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Seq::parse("1,0"), std::invalid_argument);
  CHECK_THROWS_AS(Seq::parse("1,-2"), std::invalid_argument);
  CHECK_THROWS_AS(Seq::parse("a"), std::invalid_argument);
  CHECK(Seq::parse("1,2").is_bounded());
  CHECK_FALSE(Seq::parse("2").is_bounded());
  CHECK_FALSE(Seq::parse("1,3").is_bounded());
}

TEST_CASE("order agrees with the definition on B_1..B_5") {
  std::vector<std::vector<int>> all;
  for (int n = 1; n <= 5; ++n) {
    auto b = brute_B(n);
    all.insert(all.end(), b.begin(), b.end());
  }
  for (const auto& s : all) {
    for (const auto& t : all) {
      const Order o = compare(Seq(s), Seq(t));
      CHECK((o == Order::Less) == oracle_lt(s, t));
      CHECK((o == Order::Equal) == (s == t));
    }
  }
}

TEST_CASE("enumerate_B matches brute force") {
  for (int n = 1; n <= 7; ++n) {
    auto b = enumerate_B(n);
    auto expect = brute_B(n);
    std::sort(expect.begin(), expect.end(), oracle_lt);
    REQUIRE(b.size() == expect.size());
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i].entries() == expect[i]);
  }
  CHECK(enumerate_B(2)[0].to_string() == "1,1");
  CHECK(enumerate_B(2)[1].to_string() == "1,2");
  CHECK(enumerate_B(4).size() == 24);
  CHECK(enumerate_B(8).size() == 40320);
  CHECK_THROWS_AS(enumerate_B(9), std::invalid_argument);
  CHECK(enumerate_B(9, 9).size() == 362880);
  CHECK_THROWS_AS(enumerate_B(0), std::invalid_argument);
}

TEST_CASE("tau examples") {
  CHECK(tau(Seq::parse("1")) == Rational(0));
  CHECK(tau(Seq::parse("1,1")) == Rational(1, 2));
  CHECK(tau(Seq::parse("1,2,3")) == Rational(23, 24));
  CHECK(lambda(1) == Rational(1, 2));
  CHECK(lambda(3) == Rational(1, 48));
  CHECK_THROWS_AS(tau(Seq::parse("2")), std::invalid_argument);
}

TEST_CASE("tau against the enumerated series") {
  // depth 7: the tail beyond it is at most 2^-7
  const int depth = 7;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : brute_B(n)) {
      const Rational lo = brute_tau_lo(s, depth);
      const Rational t = tau(Seq(s));
      CHECK(lo <= t);
      CHECK(t <= lo + pow2(-depth));
      const auto br = tau_oracle(Seq(s), depth);
      CHECK(br.lo == lo);
      CHECK(br.hi == lo + pow2(-depth));
    }
  }
}

TEST_CASE("tau_oracle examples and errors") {
  const auto a = tau_oracle(Seq::parse("1"), 5);
  CHECK(a.lo == Rational(0));
  CHECK(a.hi == Rational(1, 32));
  const auto b = tau_oracle(Seq::parse("1,1"), 6);
  CHECK(b.lo <= Rational(1, 2));
  CHECK(Rational(1, 2) <= b.hi);
  CHECK(b.hi - b.lo == Rational(1, 64));
  const auto c = tau_oracle(Seq::parse("1,1"), 20);
  CHECK(c.lo <= Rational(1, 2));
  CHECK(Rational(1, 2) <= c.hi);
  for (const auto& s : enumerate_B(3)) {
    const auto br = tau_oracle(s, 10);
    CHECK(br.hi - br.lo == pow2(-10));
    CHECK(br.lo <= tau(s));
    CHECK(tau(s) <= br.hi);
  }
  CHECK_THROWS_AS(tau_oracle(Seq::parse("1,1,1"), 2), std::invalid_argument);
  CHECK_THROWS_AS(tau_oracle(Seq::parse("1,3"), 5), std::invalid_argument);
}

TEST_CASE("count_predecessors against brute force") {
  for (int len = 1; len <= 4; ++len) {
    for (const auto& s : brute_B(len)) {
      for (int n = 1; n <= 6; ++n) {
        long long expect = 0;
        for (const auto& t : brute_B(n)) expect += oracle_lt(t, s);
        CHECK(count_predecessors(Seq(s), n) == Integer(static_cast<long>(expect)));
      }
    }
  }
}

TEST_CASE("tau stays in [0,1] and is strictly increasing") {
  std::vector<Seq> all;
  for (int n = 1; n <= 6; ++n) {
    auto b = enumerate_B(n);
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end(), precedes);
  Rational prev = -1;
  for (const auto& s : all) {
    const Rational t = tau(s);
    CHECK(t > prev);
    CHECK(t >= Rational(0));
    CHECK(t + lambda(s.length()) <= Rational(1));
    prev = t;
  }
}

TEST_CASE("locate") {
  const auto a = locate(Rational(1, 4), 3);
  REQUIRE(std::holds_alternative<IntervalHit>(a));
  CHECK(std::get<IntervalHit>(a).seq == Seq::ones(1));
  CHECK(std::get<IntervalHit>(a).offset == Rational(1, 4));
  const auto b = locate(0, 1);
  REQUIRE(std::holds_alternative<IntervalHit>(b));
  CHECK(std::get<IntervalHit>(b).offset == Rational(0));
  for (int d = 1; d <= 8; ++d) {
    const auto g = locate(1, d);
    REQUIRE(std::holds_alternative<GapHit>(g));
    CHECK(std::get<GapHit>(g).bound == lambda(d));
  }
  // ties go to the interval that starts at x
  const auto c = locate(Rational(1, 2), 4);
  REQUIRE(std::holds_alternative<IntervalHit>(c));
  CHECK(std::get<IntervalHit>(c).seq.to_string() == "1,1");
  CHECK_THROWS_AS(locate(Rational(-1, 2), 3), std::invalid_argument);
  CHECK_THROWS_AS(locate(Rational(3, 2), 3), std::invalid_argument);
}

TEST_CASE("locate agrees with scanning the intervals") {
  const int depth = 5;
  std::vector<Seq> all;
  for (int n = 1; n <= depth; ++n) {
    auto b = enumerate_B(n);
    all.insert(all.end(), b.begin(), b.end());
  }
  for (int j = 0; j <= 300; ++j) {
    const Rational x(j, 300);
    const Seq* hit = nullptr;
    Rational nearest = 2;
    for (const auto& s : all) {
      const Rational a = tau(s), b = a + lambda(s.length());
      if (a <= x && x < b && (!hit || hit->length() < s.length())) hit = &s;
      nearest = min(nearest, x < a ? a - x : (x > b ? x - b : Rational(0)));
    }
    const auto r = locate(x, depth);
    if (hit) {
      REQUIRE(std::holds_alternative<IntervalHit>(r));
      CHECK(std::get<IntervalHit>(r).offset == x - tau(std::get<IntervalHit>(r).seq));
      CHECK(x < tau(std::get<IntervalHit>(r).seq) + lambda(std::get<IntervalHit>(r).seq.length()));
    } else {
      REQUIRE(std::holds_alternative<GapHit>(r));
      CHECK(std::get<GapHit>(r).bound == nearest);
    }
    CHECK(distance_to_intervals(x, depth) == nearest);
  }
}

TEST_CASE("density report") {
  CHECK(density_report(1, 10) == Rational(1, 2));
  Rational prev = 2;
  for (int d = 1; d <= 8; ++d) {
    const Rational g = density_report(d, 1000);
    CHECK(g <= prev);
    prev = g;
  }
  // recorded at first build: the farthest grid point is x = 1
  CHECK(density_report(8, 1000) == Rational(1, 10321920));
  CHECK(density_report(8, 1000) <= Rational(1, 50));
  const auto rows = density_profile(2, 4);
  REQUIRE(rows.size() == 5);
  CHECK(rows[2].grid_point == Rational(1, 2));
  CHECK(rows[2].distance == Rational(0));
}
