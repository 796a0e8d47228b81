#include "ichom/seqorder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ichom::seqorder {

Seq::Seq(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("sequence must be nonempty");
  for (int e : entries_) {
    if (e < 1) throw std::invalid_argument("sequence entries must be positive");
  }
}

Seq Seq::ones(int count) {
  if (count < 1) throw std::invalid_argument("sequence must be nonempty");
  return Seq(std::vector<int>(static_cast<std::size_t>(count), 1));
}

Seq Seq::parse(std::string_view literal) {
  std::vector<int> entries;
  std::size_t pos = 0;
  while (pos <= literal.size()) {
    auto comma = literal.find(',', pos);
    auto token = literal.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty() || token.size() > 9 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("malformed sequence literal '" + std::string(literal) + "'");
    }
    entries.push_back(std::stoi(std::string(token)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Seq(std::move(entries));
}

bool Seq::is_bounded() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > static_cast<int>(i + 1)) return false;
  }
  return true;
}

Seq Seq::operator+(const Seq& suffix) const {
  std::vector<int> joined = entries_;
  joined.insert(joined.end(), suffix.entries_.begin(), suffix.entries_.end());
  return Seq(std::move(joined));
}

Seq Seq::appended(int entry) const {
  std::vector<int> joined = entries_;
  joined.push_back(entry);
  return Seq(std::move(joined));
}

Seq Seq::prefix(int length) const {
  if (length < 1 || length > this->length()) throw std::out_of_range("prefix length out of range");
  return Seq(std::vector<int>(entries_.begin(), entries_.begin() + length));
}

std::string Seq::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  return os.str();
}

Order compare(const Seq& s, const Seq& t) {
  const int common = std::min(s.length(), t.length());
  for (int j = 1; j <= common; ++j) {
    if (s.at(j) != t.at(j)) return s.at(j) < t.at(j) ? Order::Less : Order::Greater;
  }
  // One is a prefix of the other; the shorter one comes first.
  if (s.length() == t.length()) return Order::Equal;
  return s.length() < t.length() ? Order::Less : Order::Greater;
}

Rational lambda(int n) {
  if (n < 1) throw std::invalid_argument("lambda is defined for n >= 1");
  return Rational(Integer(1), factorial(n)) * pow2(-n);
}

namespace {

void require_bounded(const Seq& s) {
  if (!s.is_bounded()) throw std::invalid_argument("sequence " + s.to_string() + " is not in B");
}

}  // namespace

Rational tau(const Seq& s) {
  require_bounded(s);
  Rational value = 0;  // tau(<1>)
  for (int n = 1; n < s.length(); ++n) {
    // value = tau(prefix of length n); step to the prefix of length n+1
    const int m = s.at(n + 1);
    value += lambda(n);
    if (m > 1) value += Rational(2 * (m - 1)) * lambda(n + 1);
  }
  return value;
}

Integer count_predecessors(const Seq& s, int n) {
  if (n < 1) throw std::invalid_argument("length must be positive");
  Integer count = 0;
  const int common = std::min(n, s.length());
  // t agrees with s before position j and t(j) < s(j); positions j+1..n free.
  Integer free_tail = factorial(n);
  for (int j = 1; j <= common; ++j) {
    free_tail /= j;  // n! / j!
    const int below = std::min(s.at(j) - 1, j);
    if (below > 0) count += Integer(below) * free_tail;
  }
  if (n < s.length()) count += 1;  // the proper prefix of length n
  return count;
}

TauBracket tau_oracle(const Seq& s, int depth) {
  require_bounded(s);
  if (depth < s.length()) {
    throw std::invalid_argument("oracle depth must be at least the sequence length");
  }
  Rational lo = 0;
  for (int n = 1; n <= depth; ++n) lo += Rational(count_predecessors(s, n)) * lambda(n);
  return {lo, lo + pow2(-depth)};
}

std::vector<Seq> enumerate_B(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("enumeration length must be positive");
  if (n > max_n) {
    throw std::invalid_argument("enumeration length " + std::to_string(n) + " exceeds the cap " +
                                std::to_string(max_n));
  }
  std::vector<Seq> out;
  out.reserve(static_cast<std::size_t>(to_int64(factorial(n))));
  std::vector<int> digits(static_cast<std::size_t>(n), 1);
  // Odometer in lexicographic order, position i ranges over 1..i+1.
  while (true) {
    out.emplace_back(digits);
    int i = n - 1;
    while (i >= 0 && digits[static_cast<std::size_t>(i)] == i + 1) {
      digits[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++digits[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

// Walks down the tree of bounded sequences. The subtree below s (s and all of
// its extensions) occupies [tau(s), tau(s) + 2 lambda(l(s))]: first the
// interval of s itself, then the subtrees of s + <1>, ..., s + <l(s)+1>,
// each of width 2 lambda(l(s)+1).
struct Descent {
  std::vector<int> entries{1};
  Rational start = 0;
  bool rightmost = true;  // entries == <1, 2, ..., n>
};

LocateResult descend(const Rational& x, int depth) {
  Descent d;
  while (true) {
    const int n = static_cast<int>(d.entries.size());
    const Rational len = lambda(n);
    if (x < d.start + len) return IntervalHit{Seq(d.entries), x - d.start};
    if (n >= depth) {
      Rational bound = x - (d.start + len);
      if (!d.rightmost) bound = min(bound, d.start + len + len - x);
      return GapHit{depth, bound};
    }
    const Rational width = Rational(2) * lambda(n + 1);
    const Rational offset = x - d.start - len;
    long long m = to_int64((offset / width).floor()) + 1;
    if (m > n + 1) m = n + 1;  // only at x = 1
    d.start += len + Rational(m - 1) * width;
    d.rightmost = d.rightmost && m == n + 1;
    d.entries.push_back(static_cast<int>(m));
  }
}

}  // namespace

LocateResult locate(const Rational& x, int depth) {
  if (x < Rational(0) || x > Rational(1)) throw std::invalid_argument("locate: x outside [0,1]");
  if (depth < 1) throw std::invalid_argument("locate: depth must be positive");
  return descend(x, depth);
}

Rational distance_to_intervals(const Rational& x, int depth) {
  auto hit = locate(x, depth);
  if (std::holds_alternative<IntervalHit>(hit)) return Rational(0);
  return std::get<GapHit>(hit).bound;
}

std::vector<DensityRow> density_profile(int depth, int grid) {
  if (grid < 2) throw std::invalid_argument("density grid needs at least 2 cells");
  std::vector<DensityRow> rows;
  rows.reserve(static_cast<std::size_t>(grid) + 1);
  for (int j = 0; j <= grid; ++j) {
    Rational x(j, grid);
    rows.push_back({x, distance_to_intervals(x, depth)});
  }
  return rows;
}

Rational density_report(int depth, int grid) {
  Rational worst = 0;
  for (const auto& row : density_profile(depth, grid)) worst = max(worst, row.distance);
  return worst;
}

}  // namespace ichom::seqorder
