#include "ichom/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ichom::freegroup {

Word reduce(std::span<const Letter> letters) {
  Word w;
  for (const Letter& l : letters) {
    if (l.generator < 1 || (l.sign != 1 && l.sign != -1)) {
      throw std::invalid_argument("invalid letter");
    }
    if (!w.letters_.empty() && w.letters_.back() == l.inverse()) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::parse(std::string_view literal) {
  std::vector<Letter> letters;
  if (literal == "1") return Word();
  for (char ch : literal) {
    if (ch >= 'a' && ch <= 'z') {
      letters.push_back({ch - 'a' + 1, 1});
    } else if (ch >= 'A' && ch <= 'Z') {
      letters.push_back({ch - 'A' + 1, -1});
    } else if (ch != ' ') {
      throw std::invalid_argument(std::string("invalid word letter '") + ch + "'");
    }
  }
  return reduce(letters);
}

Word Word::generator(int index, int sign) {
  Letter l{index, sign};
  return reduce(std::span<const Letter>(&l, 1));
}

int Word::max_generator() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.generator);
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word Word::power(long long exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  Word out;
  for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out = out * base;
  return out;
}

std::vector<Letter> Word::rotated(std::size_t offset) const {
  std::vector<Letter> out(letters_);
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<long>(offset % out.size()), out.end());
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> joined(a.letters_);
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return reduce(joined);
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (l.generator > 26) {
      out += "[" + std::to_string(l.sign * l.generator) + "]";
    } else {
      char base = l.sign > 0 ? 'a' : 'A';
      out += static_cast<char>(base + l.generator - 1);
    }
  }
  return out;
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

Word commutator_power(const Word& x, const Word& y, long long n) {
  if (n < 0) throw std::invalid_argument("commutator power must be non-negative");
  return commutator(x, y).power(n);
}

bool AbelianImage::is_zero() const {
  return std::all_of(exponent_sums.begin(), exponent_sums.end(), [](long long e) { return e == 0; });
}

std::string AbelianImage::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < exponent_sums.size(); ++i) {
    if (i) os << ',';
    os << exponent_sums[i];
  }
  os << ')';
  return os.str();
}

AbelianImage abelianize(const Word& w, int generator_count) {
  generator_count = std::max(generator_count, w.max_generator());
  AbelianImage img{std::vector<long long>(static_cast<std::size_t>(generator_count), 0)};
  for (const auto& l : w.letters()) img.exponent_sums[static_cast<std::size_t>(l.generator - 1)] += l.sign;
  return img;
}

CyclicReduction cyclically_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t i = 0;
  std::size_t j = l.size();
  while (j - i >= 2 && l[i] == l[j - 1].inverse()) {
    ++i;
    --j;
  }
  CyclicReduction r;
  r.conjugator = reduce(std::span<const Letter>(l.data(), i));
  r.core = reduce(std::span<const Letter>(l.data() + i, j - i));
  return r;
}

namespace {

Word slice(const std::vector<Letter>& l, std::size_t from, std::size_t count) {
  return reduce(std::span<const Letter>(l.data() + from, count));
}

// Checks whether l reads literally as A B C A^-1 B^-1 C^-1 with |A|=p, |B|=q.
bool matches_wicks_form(const std::vector<Letter>& l, std::size_t p, std::size_t q) {
  const std::size_t half = l.size() / 2;
  const std::size_t r = half - p - q;
  // A^-1 occupies [half, half+p): A^-1[i] = A[p-1-i]^-1
  for (std::size_t i = 0; i < p; ++i) {
    if (!(l[half + i] == l[p - 1 - i].inverse())) return false;
  }
  for (std::size_t i = 0; i < q; ++i) {
    if (!(l[half + p + i] == l[p + q - 1 - i].inverse())) return false;
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (!(l[half + p + q + i] == l[p + q + r - 1 - i].inverse())) return false;
  }
  return true;
}

}  // namespace

CommutatorDecision is_single_commutator(const Word& w) {
  CommutatorDecision out;
  if (!abelianize(w).is_zero()) return out;
  if (w.empty()) {
    out.is_commutator = true;
    out.witness = CommutatorWitness{};
    return out;
  }
  const CyclicReduction cr = cyclically_reduce(w);
  const std::size_t n = cr.core.length();
  if (n % 2 != 0) return out;
  const std::size_t half = n / 2;
  for (std::size_t rot = 0; rot < n; ++rot) {
    const std::vector<Letter> l = cr.core.rotated(rot);
    for (std::size_t p = 0; p <= half; ++p) {
      for (std::size_t q = 0; p + q <= half; ++q) {
        if (!matches_wicks_form(l, p, q)) continue;
        CommutatorWitness wit;
        wit.a = slice(l, 0, p);
        wit.b = slice(l, p, q);
        wit.c = slice(l, p + q, half - p - q);
        wit.rotation = rot;
        wit.x = wit.a * wit.b;
        wit.y = wit.c * wit.a.inverse();
        // core = P * rotated * P^-1 with P the first rot letters of core
        wit.conjugator = cr.conjugator * slice(cr.core.letters(), 0, rot);
        out.is_commutator = true;
        out.witness = std::move(wit);
        return out;
      }
    }
  }
  return out;
}

}  // namespace ichom::freegroup
