#include "ichom/earring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "ichom/seqorder.hpp"

namespace ichom::earring {

using seqorder::lambda;

EarringPoint EarringPoint::on_circle(long long circle, const Rational& turn) {
  if (circle < 1) throw std::invalid_argument("circle index must be positive");
  EarringPoint p;
  Rational u = turn.frac();
  if (u.is_zero()) return p;
  p.circle_ = circle;
  p.turn_ = u;
  return p;
}

std::pair<double, double> EarringPoint::euclidean() const {
  if (is_origin()) return {0.0, 0.0};
  const double n = static_cast<double>(circle_);
  const double a = 2.0 * std::numbers::pi * turn_.to_double();
  return {(1.0 - std::cos(a)) / n, std::sin(a) / n};
}

std::string EarringPoint::to_string() const {
  if (is_origin()) return "origin";
  return "L" + std::to_string(circle_) + "(" + turn_.to_string() + ")";
}

namespace {

// arc length / pi of a turn difference on circle n
Rational arc(long long n, const Rational& delta) {
  Rational d = delta.abs().frac();
  return Rational(2, n) * min(d, Rational(1) - d);
}

}  // namespace

PiMultiple norm(const EarringPoint& p) {
  if (p.is_origin()) return {0};
  return {arc(p.circle(), p.turn())};
}

PiMultiple distance_coefficient(const EarringPoint& x, const EarringPoint& y) {
  if (!x.is_origin() && !y.is_origin() && x.circle() == y.circle()) {
    return {arc(x.circle(), x.turn() - y.turn())};
  }
  return {norm(x).coefficient + norm(y).coefficient};
}

CertifiedReal distance(const EarringPoint& x, const EarringPoint& y, const PiEnclosure& pi) {
  return distance_coefficient(x, y).enclose(pi);
}

double chord_distance(const EarringPoint& x, const EarringPoint& y) {
  auto [x1, y1] = x.euclidean();
  auto [x2, y2] = y.euclidean();
  return std::hypot(x1 - x2, y1 - y2);
}

EarringPoint phi(long long n, const Rational& t) {
  if (n < 1) throw std::invalid_argument("phi: circle index must be positive");
  if (t < Rational(0) || t > Rational(1)) throw std::invalid_argument("phi: t outside [0,1]");
  return EarringPoint::on_circle(n, t);
}

long long choose_n(int k, const PiEnclosure& pi) {
  if (k < 1) throw std::invalid_argument("choose_n: k must be positive");
  Rational bound = Rational(8) * pi.hi * pow2(k) * Rational(factorial(k));
  return to_int64(bound.ceil());
}

EarringPoint Segment::at(const Rational& t) const {
  if (is_rest()) return EarringPoint::origin();
  Rational h = t - start;
  return EarringPoint::on_circle(circle, start_turn + Rational(orientation) * turn_speed * h);
}

PiecewisePath::PiecewisePath(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw std::invalid_argument("path needs at least one segment");
  Rational cursor = 0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    Segment& s = segments_[i];
    if (s.start != cursor) throw std::invalid_argument("path segments do not tile the domain");
    if (s.duration <= Rational(0)) throw std::invalid_argument("path segment with non-positive duration");
    if (s.circle < 0) throw std::invalid_argument("negative circle index");
    if (s.orientation != 1 && s.orientation != -1) throw std::invalid_argument("orientation must be +-1");
    if (s.turn_speed < Rational(0)) throw std::invalid_argument("turn speed must be non-negative");
    if (s.is_rest()) {
      s.orientation = 1;
      s.start_turn = 0;
      s.turn_speed = 0;
    } else {
      s.start_turn = s.start_turn.frac();
    }
    if (i > 0 && !(segments_[i - 1].end_point() == s.start_point())) {
      throw std::invalid_argument("path is discontinuous at t = " + s.start.to_string());
    }
    cursor = s.end();
  }
  total_ = cursor;
}

PiecewisePath PiecewisePath::rest(const Rational& duration) {
  return PiecewisePath({Segment{0, duration, 0, 1, 0, 0}});
}

PiecewisePath PiecewisePath::loop(long long n) {
  if (n < 1) throw std::invalid_argument("loop: circle index must be positive");
  return PiecewisePath({Segment{0, 1, n, 1, 0, 1}});
}

EarringPoint PiecewisePath::evaluate(const Rational& t) const {
  if (t < Rational(0) || t > total_) throw std::invalid_argument("path evaluated outside its domain");
  auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                             [](const Rational& v, const Segment& s) { return v < s.start; });
  return std::prev(it)->at(t);
}

PiecewisePath concat(const PiecewisePath& p, const PiecewisePath& q) {
  if (!(p.end_point() == q.start_point())) {
    throw std::invalid_argument("concat: end point " + p.end_point().to_string() + " does not match start point " +
                                q.start_point().to_string());
  }
  std::vector<Segment> segs = p.segments();
  for (Segment s : q.segments()) {
    s.start += p.total_length();
    segs.push_back(std::move(s));
  }
  return PiecewisePath(std::move(segs));
}

PiecewisePath reverse(const PiecewisePath& p) {
  std::vector<Segment> segs;
  segs.reserve(p.segments().size());
  for (auto it = p.segments().rbegin(); it != p.segments().rend(); ++it) {
    Segment s = *it;
    s.start = p.total_length() - it->end();
    if (!s.is_rest()) {
      s.start_turn = (it->start_turn + Rational(it->orientation) * it->turns()).frac();
      s.orientation = -it->orientation;
    }
    segs.push_back(std::move(s));
  }
  return PiecewisePath(std::move(segs));
}

PiMultiple max_speed_coefficient(const PiecewisePath& p) {
  Rational best = 0;
  for (const auto& s : p.segments()) {
    if (!s.is_rest()) best = max(best, Rational(2, s.circle) * s.turn_speed);
  }
  return {best};
}

CertifiedReal max_speed(const PiecewisePath& p, const PiEnclosure& pi) {
  return max_speed_coefficient(p).enclose(pi);
}

PiecewisePath commutator_loop(int k, const PiEnclosure& pi) {
  const long long n = choose_n(k, pi);
  const Rational q = lambda(k) / Rational(4);
  const Rational speed = q.reciprocal();
  return PiecewisePath({Segment{0, q, n, 1, 0, speed}, Segment{q, q, n + 1, 1, 0, speed},
                        Segment{q * Rational(2), q, n, -1, 0, speed},
                        Segment{q * Rational(3), q, n + 1, -1, 0, speed}});
}

EarringPoint commutator_point(int k, const Rational& offset, const PiEnclosure& pi) {
  const Rational len = lambda(k);
  if (offset < Rational(0) || offset > len) throw std::invalid_argument("commutator_point: offset outside domain");
  const Rational q = len / Rational(4);
  const long long idx = to_int64((offset / q).floor());
  if (idx >= 4) return EarringPoint::origin();
  const Rational frac = (offset - Rational(idx) * q) / q;
  const long long n = choose_n(k, pi) + (idx % 2);
  return EarringPoint::on_circle(n, idx < 2 ? frac : Rational(1) - frac);
}

Rational sigma_domain(int n) {
  if (n < 1) throw std::invalid_argument("sigma: n must be positive");
  return n == 1 ? Rational(1) : Rational(2) * lambda(n);
}

SigmaValue sigma(int n, const Rational& t, int depth, const PiEnclosure& pi) {
  const Rational dom = sigma_domain(n);
  if (t < Rational(0) || t > dom) throw std::invalid_argument("sigma: t outside [0, " + dom.to_string() + "]");
  const Rational x = n == 1 ? t : t + seqorder::tau(seqorder::Seq::ones(n));
  // every interval ends strictly before 1, so x = 1 lies in none of them
  if (x == Rational(1)) return {EarringPoint::origin(), 0};
  auto hit = seqorder::locate(x, depth);
  if (auto* in = std::get_if<seqorder::IntervalHit>(&hit)) {
    return {commutator_point(in->seq.length(), in->offset, pi), 0};
  }
  return {EarringPoint::origin(), std::get<seqorder::GapHit>(hit).bound};
}

SigmaValue evaluate_concatenation(std::span<const MapPiece> pieces, const Rational& t) {
  if (pieces.empty()) throw std::invalid_argument("empty concatenation");
  Rational offset = t;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (offset <= pieces[i].length) return pieces[i].eval(offset);
    offset -= pieces[i].length;
  }
  if (offset > pieces.back().length) throw std::invalid_argument("concatenation evaluated outside its domain");
  return pieces.back().eval(offset);
}

RecursionReport verify_recursion(int n, int sample_count, int depth, int max_n, const PiEnclosure& pi) {
  if (n < 2 || n > max_n) {
    throw std::invalid_argument("verify_recursion: n must lie in [2, " + std::to_string(max_n) + "]");
  }
  if (sample_count < 2) throw std::invalid_argument("verify_recursion: need at least 2 samples");
  std::vector<MapPiece> rhs;
  rhs.push_back({lambda(n - 1), [&](const Rational& s) { return SigmaValue{commutator_point(n - 1, s, pi), 0}; }});
  for (int j = 0; j < n; ++j) {
    rhs.push_back({sigma_domain(n), [&](const Rational& s) { return sigma(n, s, depth, pi); }});
  }
  RecursionReport rep;
  rep.n = n;
  rep.depth = depth;
  rep.samples = sample_count;
  rep.pass = true;
  const Rational dom = sigma_domain(n - 1);
  for (int i = 0; i < sample_count; ++i) {
    const Rational t = dom * Rational(i, sample_count - 1);
    const SigmaValue left = sigma(n - 1, t, depth, pi);
    const SigmaValue right = evaluate_concatenation(rhs, t);
    const PiMultiple d = distance_coefficient(left.point, right.point);
    if (left.error_bound.is_zero() && right.error_bound.is_zero()) {
      ++rep.resolved;
      rep.max_discrepancy = max(rep.max_discrepancy, d.coefficient);
      if (!d.coefficient.is_zero()) rep.pass = false;
    } else {
      const Rational allowed = left.error_bound + right.error_bound;
      const Rational used = d.enclose(pi).hi;
      rep.max_slack_used = max(rep.max_slack_used, used - allowed);
      if (used > allowed) rep.pass = false;
    }
  }
  return rep;
}

namespace {

struct TruncationBuilder {
  int cutoff;
  const PiEnclosure& pi;
  std::vector<Segment> segments;
  Rational cursor = 0;

  void rest_until(const Rational& t) {
    if (t > cursor) segments.push_back(Segment{cursor, t - cursor, 0, 1, 0, 0});
    cursor = t;
  }

  void visit(int length, const Rational& start) {
    rest_until(start);
    const PiecewisePath c = commutator_loop(length, pi);
    for (Segment s : c.segments()) {
      s.start += start;
      segments.push_back(std::move(s));
    }
    cursor = start + lambda(length);
    if (length >= cutoff) return;
    const Rational base = cursor;  // visits below move the cursor
    const Rational width = Rational(2) * lambda(length + 1);
    for (int m = 1; m <= length + 1; ++m) visit(length + 1, base + Rational(m - 1) * width);
  }
};

}  // namespace

PiecewisePath sigma1_truncation(int cutoff, const PiEnclosure& pi) {
  if (cutoff < 1) throw std::invalid_argument("sigma1_truncation: cutoff must be positive");
  if (cutoff > seqorder::kDefaultEnumerationCap) {
    throw std::invalid_argument("sigma1_truncation: cutoff exceeds the enumeration cap");
  }
  TruncationBuilder b{cutoff, pi, {}, 0};
  b.visit(1, 0);
  b.rest_until(1);
  return PiecewisePath(std::move(b.segments));
}

freegroup::Word project_word(const PiecewisePath& loop, int k, const PiEnclosure& pi) {
  if (!loop.start_point().is_origin() || !loop.end_point().is_origin()) {
    throw std::invalid_argument("project_word: path is not a loop at the origin");
  }
  const long long n = choose_n(k, pi);
  std::vector<freegroup::Letter> letters;
  for (const auto& s : loop.segments()) {
    if (s.circle != n && s.circle != n + 1) continue;
    const Rational turns = s.turns();
    if (!turns.is_integer() || !s.start_turn.is_zero()) {
      throw std::invalid_argument("project_word: segment on L" + std::to_string(s.circle) +
                                  " does not consist of whole turns");
    }
    const freegroup::Letter l{s.circle == n ? 1 : 2, s.orientation};
    for (long long i = 0; i < to_int64(turns.numerator()); ++i) letters.push_back(l);
  }
  return freegroup::reduce(letters);
}

std::vector<SigmaSample> sample_sigma(int n, int samples, int depth, const PiEnclosure& pi) {
  if (samples < 1) throw std::invalid_argument("sample count must be positive");
  const Rational dom = sigma_domain(n);
  std::vector<SigmaSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const Rational t = samples == 1 ? Rational(0) : dom * Rational(i, samples - 1);
    out.push_back({t, sigma(n, t, depth, pi)});
  }
  return out;
}

void write_sigma_csv(std::ostream& os, std::span<const SigmaSample> samples) {
  os << "t,circle,turn,error_bound\n";
  for (const auto& s : samples) {
    os << s.time << ',' << s.value.point.circle() << ',' << s.value.point.turn() << ',' << s.value.error_bound
       << '\n';
  }
}

void write_sigma_svg(std::ostream& os, std::span<const SigmaSample> samples) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.1 -1.1 2.2 2.2\" width=\"600\" height=\"600\">\n";
  for (int n = 1; n <= 12; ++n) {
    const double r = 1.0 / n;
    os << "  <circle cx=\"" << r << "\" cy=\"0\" r=\"" << r
       << "\" fill=\"none\" stroke=\"#ccc\" stroke-width=\"0.004\"/>\n";
  }
  os << "  <polyline fill=\"none\" stroke=\"#b22\" stroke-width=\"0.006\" points=\"";
  for (const auto& s : samples) {
    auto [x, y] = s.value.point.euclidean();
    os << x << ',' << -y << ' ';
  }
  os << "\"/>\n</svg>\n";
}

}  // namespace ichom::earring
