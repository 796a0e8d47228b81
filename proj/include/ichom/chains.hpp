#pragma once

// Integer chains of affine simplices with rational vertices. A simplex is its
// ordered vertex tuple; repeated vertices are allowed and never normalized
// away, so identities hold at the level of ordered singular chains.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ichom/rational.hpp"

namespace ichom::chains {

using Point = std::vector<Rational>;
using Simplex = std::vector<Point>;

class Chain {
 public:
  // dimension -1 is the zero chain below degree 0 (boundary of a 0-chain).
  explicit Chain(int dimension = 0) : dim_(dimension) {}
  static Chain of(Simplex s, long long coefficient = 1);

  int dimension() const { return dim_; }
  // Ambient dimension of the vertices, -1 while empty.
  int ambient() const;
  const std::map<Simplex, long long>& terms() const& { return terms_; }
  // by value on rvalues, so range-for over a temporary chain is safe
  std::map<Simplex, long long> terms() && { return std::move(terms_); }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  long long coefficient_sum() const;

  void add(const Simplex& s, long long coefficient);

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(long long k, const Chain& c);
  Chain operator-() const { return -1 * *this; }
  // Equal as formal sums; the declared dimension of a zero chain is ignored.
  friend bool operator==(const Chain& a, const Chain& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  int dim_;
  std::map<Simplex, long long> terms_;
};

Simplex face(const Simplex& s, std::size_t j);
Point barycenter(const Simplex& s);
Rational squared_distance(const Point& p, const Point& q);
// Squared diameter of the vertex set (= of the convex hull).
Rational diameter_squared(const Simplex& s);
Rational diameter_squared(const Chain& c);  // of the union of all images
Rational max_simplex_diameter_squared(const Chain& c);
std::vector<Point> vertex_set(const Chain& c);

Chain boundary(const Chain& c);
// apex * [w0..wk] = [apex, w0, .., wk]
Chain cone(const Point& apex, const Chain& c);

// Barycentric subdivision: sd[w] = [w], sd(s) = b_s * sd(boundary s).
Chain subdivide(const Chain& c, int m = 1);
// One-step homotopy T with bT + Tb = id - sd: T[w] = [w,w],
// T(s) = b_s * (s - T(boundary s)).
Chain subdivision_step_homotopy(const Chain& c);
// D_m = -(T + T sd + ... + T sd^{m-1}); b D_m + D_m b = sd^m - id.
Chain subdiv_homotopy(const Chain& c, int m);

// t prepended as coordinate 0.
Chain include_at(const Chain& c, const Rational& t);
// Staircase prism on [0,1] x X: bK + Kb = j - i for i, j the inclusions at
// t = 0 and t = 1.
Chain prism(const Chain& c);

// x -> matrix * x + offset
struct AffineMap {
  std::vector<std::vector<Rational>> matrix;  // rows = target dimension
  Point offset;

  static AffineMap identity(int dimension);
  std::size_t source_dimension() const;
  std::size_t target_dimension() const { return matrix.size(); }
  Point operator()(const Point& x) const;
};

Chain push_forward(const AffineMap& f, const Chain& c);
// Applies f to vertices; equals the push-forward when f is affine and in
// general commutes with faces, hence with the boundary.
Chain push_forward_vertices(const std::function<Point(const Point&)>& f, const Chain& c);

// [x, .., x] with k+1 entries.
Simplex constant_simplex(const Point& x, int k);

// phi(t, x) with phi(0, .) = x0 and phi(1, .) = id.
class Contraction {
 public:
  Contraction(Point basepoint, Rational gamma, std::function<Point(const Rational&, const Point&)> map);
  // phi(t, x) = x0 + t (x - x0)
  static Contraction straight_line(Point basepoint, Rational gamma);

  const Point& basepoint() const { return x0_; }
  const Rational& gamma() const { return gamma_; }
  Point operator()(const Rational& t, const Point& x) const { return map_(t, x); }

  // Checks phi(1,.) = id, phi(0,.) = x0 and
  // d(phi(t,s), phi(t',s')) <= gamma diam(S) |t-t'| + gamma d(s,s')
  // exactly for all s, s' in sample and t, t' in the time grid.
  bool satisfies_estimate(const std::vector<Point>& sample, int time_steps = 4) const;

 private:
  Point x0_;
  Rational gamma_;
  std::function<Point(const Rational&, const Point&)> map_;
};

// sqrt(a) <= sqrt(b) + sqrt(c) for non-negative rationals, exactly.
bool sqrt_sum_le(const Rational& a, const Rational& b, const Rational& c);

struct ConeFill {
  Chain filling;
  Rational input_diameter_squared;
  Rational output_diameter_squared;
  bool diameter_bound_holds = false;  // out^2 <= 4 gamma^2 in^2
};

// phi(K c) plus the constant (k+1)-simplex correction for odd k. Requires
// bc = 0, and sum of coefficients 0 when k is even.
ConeFill cone_fill(const Chain& c, const Contraction& phi);

// Sub/superlevel sets of rational-computable distance-like functions.
struct Region {
  enum class Kind { Everything, Nothing, CoordinateAtMost, CoordinateAtLeast, Ball, OutsideOpenBall };
  Kind kind = Kind::Everything;
  int coordinate = 0;
  Point center;
  Rational threshold = 0;

  static Region everything() { return {}; }
  static Region nothing() { return {Kind::Nothing, 0, {}, 0}; }
  static Region coordinate_at_most(int i, Rational a) { return {Kind::CoordinateAtMost, i, {}, std::move(a)}; }
  static Region coordinate_at_least(int i, Rational a) { return {Kind::CoordinateAtLeast, i, {}, std::move(a)}; }
  static Region ball(Point c, Rational r) { return {Kind::Ball, 0, std::move(c), std::move(r)}; }
  static Region outside_open_ball(Point c, Rational r) {
    return {Kind::OutsideOpenBall, 0, std::move(c), std::move(r)};
  }

  bool contains(const Point& p) const;
  // Whether the convex hull of s meets the region (exact).
  bool meets(const Simplex& s) const;
};

// Exact squared distance from p to the convex hull of s.
Rational hull_distance_squared(const Point& p, const Simplex& s);

struct Part {
  Chain part;
  int m = 0;
  Chain subdivided;  // sd^m c
};

// Least m with every simplex of sd^m c of diameter < epsilon, and the
// simplices of sd^m c meeting U.
Part part_near(const Chain& c, const Region& U, const Rational& epsilon, int max_m = 40);

}  // namespace ichom::chains
