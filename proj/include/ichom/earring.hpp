#pragma once

// The Hawaiian Earring with its length metric, the standard loops around each
// circle, the commutator loops c_k and the divisible family sigma_n.
//
// Points are (circle n, turn u) meaning phi_n(u); distances are exact rational
// multiples of pi and are compared through a certified enclosure of pi.

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ichom/certified.hpp"
#include "ichom/freegroup.hpp"
#include "ichom/rational.hpp"

namespace ichom::earring {

class EarringPoint {
 public:
  static EarringPoint origin() { return EarringPoint(); }
  // turn is taken modulo 1; turn 0 is the origin.
  static EarringPoint on_circle(long long circle, const Rational& turn);

  bool is_origin() const { return circle_ == 0; }
  long long circle() const { return circle_; }  // 0 for the origin
  const Rational& turn() const { return turn_; }

  // Plane coordinates of phi_n(turn); floating point, for plots only.
  std::pair<double, double> euclidean() const;

  std::string to_string() const;
  friend bool operator==(const EarringPoint&, const EarringPoint&) = default;

 private:
  EarringPoint() = default;
  long long circle_ = 0;
  Rational turn_ = 0;
};

// Length-metric distance from p to the origin, as a multiple of pi.
PiMultiple norm(const EarringPoint& p);
// Length-metric distance as a multiple of pi.
PiMultiple distance_coefficient(const EarringPoint& x, const EarringPoint& y);
CertifiedReal distance(const EarringPoint& x, const EarringPoint& y,
                       const PiEnclosure& pi = PiEnclosure::standard());
// Euclidean distance of the plane embedding; floating point, plots only.
double chord_distance(const EarringPoint& x, const EarringPoint& y);

// phi_n(t) for t in [0,1].
EarringPoint phi(long long n, const Rational& t);

// Least n with 8 pi 2^k k! <= n, using the upper end of the enclosure.
long long choose_n(int k, const PiEnclosure& pi = PiEnclosure::standard());

// Constant-speed arc on one circle (circle >= 1) or a rest at the origin
// (circle == 0). The turn at time start + h is
// start_turn + orientation * turn_speed * h (mod 1).
struct Segment {
  Rational start;
  Rational duration;
  long long circle = 0;
  int orientation = 1;
  Rational start_turn = 0;
  Rational turn_speed = 0;

  bool is_rest() const { return circle == 0; }
  Rational end() const { return start + duration; }
  EarringPoint at(const Rational& t) const;
  EarringPoint start_point() const { return at(start); }
  EarringPoint end_point() const { return at(end()); }
  Rational turns() const { return turn_speed * duration; }
};

class PiecewisePath {
 public:
  // Segments must tile [0, total] in order and be continuous at junctions.
  explicit PiecewisePath(std::vector<Segment> segments);

  static PiecewisePath rest(const Rational& duration);
  // phi_n on [0,1].
  static PiecewisePath loop(long long n);

  const Rational& total_length() const { return total_; }
  const std::vector<Segment>& segments() const& { return segments_; }
  std::vector<Segment> segments() && { return std::move(segments_); }

  EarringPoint evaluate(const Rational& t) const;
  EarringPoint start_point() const { return segments_.front().start_point(); }
  EarringPoint end_point() const { return segments_.back().end_point(); }

  friend bool operator==(const PiecewisePath&, const PiecewisePath&) = default;

 private:
  std::vector<Segment> segments_;
  Rational total_;
};

PiecewisePath concat(const PiecewisePath& p, const PiecewisePath& q);
PiecewisePath reverse(const PiecewisePath& p);

// max over segments of (2 pi / circle) * turn_speed.
CertifiedReal max_speed(const PiecewisePath& p, const PiEnclosure& pi = PiEnclosure::standard());
PiMultiple max_speed_coefficient(const PiecewisePath& p);

// c_k on [0, lambda(k)]: phi_{n_k}, phi_{n_k+1}, then both reversed, each on a
// quarter of the domain.
PiecewisePath commutator_loop(int k, const PiEnclosure& pi = PiEnclosure::standard());
// c_k evaluated directly, offset in [0, lambda(k)].
EarringPoint commutator_point(int k, const Rational& offset,
                              const PiEnclosure& pi = PiEnclosure::standard());

struct SigmaValue {
  EarringPoint point;
  // Certified bound on the distance (in the same units as time) between point
  // and the true value; 0 when the time resolved to an interval.
  Rational error_bound;
};

// Domain of sigma_n: [0, 1] for n = 1 and [0, 2 lambda(n)] for n > 1.
Rational sigma_domain(int n);
SigmaValue sigma(int n, const Rational& t, int depth, const PiEnclosure& pi = PiEnclosure::standard());

// A map on [0, length] given by an evaluator; concatenations of these follow
// the rule (f.g)(t) = f(t) for t <= a, g(t - a) otherwise.
struct MapPiece {
  Rational length;
  std::function<SigmaValue(const Rational&)> eval;
};
SigmaValue evaluate_concatenation(std::span<const MapPiece> pieces, const Rational& t);

struct RecursionReport {
  int n = 0;
  int depth = 0;
  int samples = 0;
  int resolved = 0;             // samples where both sides resolved exactly
  Rational max_discrepancy = 0;  // pi-coefficient over resolved samples
  Rational max_slack_used = 0;   // over unresolved samples: distance.hi - bounds
  bool pass = false;
};

// Compares sigma_{n-1} with c_{n-1} . sigma_n . ... . sigma_n (n copies) at
// sample_count equispaced times of [0, 2 lambda(n-1)].
RecursionReport verify_recursion(int n, int sample_count, int depth, int max_n = 4,
                                 const PiEnclosure& pi = PiEnclosure::standard());

// The path that equals sigma_1 on every interval of generation <= cutoff and
// rests at the origin elsewhere.
PiecewisePath sigma1_truncation(int cutoff, const PiEnclosure& pi = PiEnclosure::standard());

// Image in <a, b> of a loop under the retraction onto L_{n_k} u L_{n_k + 1}:
// full turns of L_{n_k} read as a^{+-1}, of L_{n_k+1} as b^{+-1}.
freegroup::Word project_word(const PiecewisePath& loop, int k,
                             const PiEnclosure& pi = PiEnclosure::standard());

struct SigmaSample {
  Rational time;
  SigmaValue value;
};
// samples >= 1 equispaced times over the domain, endpoints included.
std::vector<SigmaSample> sample_sigma(int n, int samples, int depth,
                                      const PiEnclosure& pi = PiEnclosure::standard());
void write_sigma_csv(std::ostream& os, std::span<const SigmaSample> samples);
void write_sigma_svg(std::ostream& os, std::span<const SigmaSample> samples);

}  // namespace ichom::earring
