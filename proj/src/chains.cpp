#include "ichom/chains.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ichom::chains {

Chain Chain::of(Simplex s, long long coefficient) {
  if (s.empty()) throw std::invalid_argument("simplex needs at least one vertex");
  Chain c(static_cast<int>(s.size()) - 1);
  c.add(s, coefficient);
  return c;
}

int Chain::ambient() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.front().size());
}

long long Chain::coefficient_sum() const {
  long long sum = 0;
  for (const auto& [s, n] : terms_) sum += n;
  return sum;
}

void Chain::add(const Simplex& s, long long coefficient) {
  if (static_cast<int>(s.size()) != dim_ + 1) {
    throw std::invalid_argument("simplex with " + std::to_string(s.size()) + " vertices added to a " +
                                std::to_string(dim_) + "-chain");
  }
  if (coefficient == 0) return;
  const int amb = ambient();
  for (const Point& p : s) {
    if (amb >= 0 ? static_cast<int>(p.size()) != amb : p.size() != s.front().size()) {
      throw std::invalid_argument("vertices of mixed ambient dimension");
    }
  }
  auto [it, inserted] = terms_.try_emplace(s, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void require_same_dimension(const Chain& a, const Chain& b) {
  if (a.dimension() != b.dimension() && !a.empty() && !b.empty()) {
    throw std::invalid_argument("adding chains of different dimensions");
  }
}

}  // namespace

Chain& Chain::operator+=(const Chain& o) {
  require_same_dimension(*this, o);
  if (empty()) dim_ = o.dim_;
  for (const auto& [s, n] : o.terms_) add(s, n);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  require_same_dimension(*this, o);
  if (empty()) dim_ = o.dim_;
  for (const auto& [s, n] : o.terms_) add(s, -n);
  return *this;
}

Chain operator*(long long k, const Chain& c) {
  Chain out(c.dimension());
  for (const auto& [s, n] : c.terms()) out.add(s, k * n);
  return out;
}

std::string Chain::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, n] : terms_) {
    if (!first) os << (n < 0 ? " - " : " + ");
    else if (n < 0) os << '-';
    first = false;
    const long long a = n < 0 ? -n : n;
    if (a != 1) os << a;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) os << ',';
      os << '(';
      for (std::size_t j = 0; j < s[i].size(); ++j) os << (j ? "," : "") << s[i][j];
      os << ')';
    }
    os << ']';
  }
  return os.str();
}

Simplex face(const Simplex& s, std::size_t j) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != j) f.push_back(s[i]);
  }
  return f;
}

Point barycenter(const Simplex& s) {
  Point b(s.front().size(), Rational(0));
  for (const Point& p : s) {
    for (std::size_t j = 0; j < b.size(); ++j) b[j] += p[j];
  }
  const Rational k(static_cast<long long>(s.size()));
  for (auto& x : b) x /= k;
  return b;
}

Rational squared_distance(const Point& p, const Point& q) {
  if (p.size() != q.size()) throw std::invalid_argument("points of different dimension");
  Rational d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational e = p[i] - q[i];
    d += e * e;
  }
  return d;
}

Rational diameter_squared(const Simplex& s) {
  Rational d = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) d = max(d, squared_distance(s[i], s[j]));
  }
  return d;
}

std::vector<Point> vertex_set(const Chain& c) {
  std::set<Point> pts;
  for (const auto& [s, n] : c.terms()) pts.insert(s.begin(), s.end());
  return {pts.begin(), pts.end()};
}

Rational diameter_squared(const Chain& c) {
  const auto pts = vertex_set(c);
  return diameter_squared(Simplex(pts.begin(), pts.end()));
}

Rational max_simplex_diameter_squared(const Chain& c) {
  Rational d = 0;
  for (const auto& [s, n] : c.terms()) d = max(d, diameter_squared(s));
  return d;
}

Chain boundary(const Chain& c) {
  Chain out(c.dimension() - 1);
  if (c.dimension() <= 0) return out;
  for (const auto& [s, n] : c.terms()) {
    for (std::size_t j = 0; j < s.size(); ++j) out.add(face(s, j), j % 2 == 0 ? n : -n);
  }
  return out;
}

Chain cone(const Point& apex, const Chain& c) {
  Chain out(c.dimension() + 1);
  for (const auto& [s, n] : c.terms()) {
    Simplex t;
    t.reserve(s.size() + 1);
    t.push_back(apex);
    t.insert(t.end(), s.begin(), s.end());
    out.add(t, n);
  }
  return out;
}

namespace {

Chain subdivide_simplex(const Simplex& s) {
  if (s.size() == 1) return Chain::of(s);
  return cone(barycenter(s), subdivide(boundary(Chain::of(s)), 1));
}

Chain step_homotopy_simplex(const Simplex& s) {
  if (s.size() == 1) return Chain::of({s[0], s[0]});
  const Chain sc = Chain::of(s);
  return cone(barycenter(s), sc - subdivision_step_homotopy(boundary(sc)));
}

}  // namespace

Chain subdivide(const Chain& c, int m) {
  if (m < 0) throw std::invalid_argument("subdivision count must be non-negative");
  Chain cur = c;
  for (int i = 0; i < m; ++i) {
    Chain next(cur.dimension());
    for (const auto& [s, n] : cur.terms()) next += n * subdivide_simplex(s);
    cur = std::move(next);
  }
  return cur;
}

Chain subdivision_step_homotopy(const Chain& c) {
  Chain out(c.dimension() + 1);
  for (const auto& [s, n] : c.terms()) out += n * step_homotopy_simplex(s);
  return out;
}

Chain subdiv_homotopy(const Chain& c, int m) {
  if (m < 0) throw std::invalid_argument("subdivision count must be non-negative");
  Chain out(c.dimension() + 1);
  Chain cur = c;
  for (int i = 0; i < m; ++i) {
    out -= subdivision_step_homotopy(cur);
    if (i + 1 < m) cur = subdivide(cur, 1);
  }
  return out;
}

namespace {

Point lift(const Rational& t, const Point& x) {
  Point p;
  p.reserve(x.size() + 1);
  p.push_back(t);
  p.insert(p.end(), x.begin(), x.end());
  return p;
}

}  // namespace

Chain include_at(const Chain& c, const Rational& t) {
  Chain out(c.dimension());
  for (const auto& [s, n] : c.terms()) {
    Simplex l;
    for (const Point& p : s) l.push_back(lift(t, p));
    out.add(l, n);
  }
  return out;
}

Chain prism(const Chain& c) {
  Chain out(c.dimension() + 1);
  for (const auto& [s, n] : c.terms()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex p;
      for (std::size_t j = 0; j <= i; ++j) p.push_back(lift(0, s[j]));
      for (std::size_t j = i; j < s.size(); ++j) p.push_back(lift(1, s[j]));
      out.add(p, i % 2 == 0 ? n : -n);
    }
  }
  return out;
}

AffineMap AffineMap::identity(int dimension) {
  AffineMap f;
  f.matrix.assign(static_cast<std::size_t>(dimension), std::vector<Rational>(static_cast<std::size_t>(dimension)));
  for (int i = 0; i < dimension; ++i) f.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  f.offset.assign(static_cast<std::size_t>(dimension), Rational(0));
  return f;
}

std::size_t AffineMap::source_dimension() const { return matrix.empty() ? 0 : matrix.front().size(); }

Point AffineMap::operator()(const Point& x) const {
  if (x.size() != source_dimension() || offset.size() != matrix.size()) {
    throw std::invalid_argument("affine map applied to a point of the wrong dimension");
  }
  Point y = offset;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += matrix[i][j] * x[j];
  }
  return y;
}

Chain push_forward_vertices(const std::function<Point(const Point&)>& f, const Chain& c) {
  Chain out(c.dimension());
  for (const auto& [s, n] : c.terms()) {
    Simplex img;
    img.reserve(s.size());
    for (const Point& p : s) img.push_back(f(p));
    out.add(img, n);
  }
  return out;
}

Chain push_forward(const AffineMap& f, const Chain& c) {
  return push_forward_vertices([&](const Point& p) { return f(p); }, c);
}

Simplex constant_simplex(const Point& x, int k) {
  if (k < 0) throw std::invalid_argument("negative simplex dimension");
  return Simplex(static_cast<std::size_t>(k + 1), x);
}

Contraction::Contraction(Point basepoint, Rational gamma, std::function<Point(const Rational&, const Point&)> map)
    : x0_(std::move(basepoint)), gamma_(std::move(gamma)), map_(std::move(map)) {
  if (gamma_ <= Rational(0)) throw std::invalid_argument("contraction constant must be positive");
}

Contraction Contraction::straight_line(Point basepoint, Rational gamma) {
  Point x0 = basepoint;
  return Contraction(std::move(basepoint), std::move(gamma), [x0](const Rational& t, const Point& x) {
    if (x.size() != x0.size()) throw std::invalid_argument("contraction applied to a point of the wrong dimension");
    Point y(x0);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += t * (x[i] - x0[i]);
    return y;
  });
}

bool sqrt_sum_le(const Rational& a, const Rational& b, const Rational& c) {
  Rational r = a - b - c;
  if (r <= Rational(0)) return true;
  return r * r <= Rational(4) * b * c;
}

bool Contraction::satisfies_estimate(const std::vector<Point>& sample, int time_steps) const {
  if (time_steps < 1) throw std::invalid_argument("time grid needs at least one step");
  const Rational diam2 = diameter_squared(Simplex(sample.begin(), sample.end()));
  const Rational g2 = gamma_ * gamma_;
  std::vector<Rational> times;
  for (int i = 0; i <= time_steps; ++i) times.emplace_back(i, time_steps);
  std::vector<std::vector<Point>> image(sample.size());
  for (std::size_t a = 0; a < sample.size(); ++a) {
    for (const auto& t : times) image[a].push_back((*this)(t, sample[a]));
    if (!(image[a].front() == x0_) || !(image[a].back() == sample[a])) return false;
  }
  for (std::size_t a = 0; a < sample.size(); ++a) {
    for (std::size_t b = 0; b < sample.size(); ++b) {
      const Rational c = g2 * squared_distance(sample[a], sample[b]);
      for (std::size_t i = 0; i < times.size(); ++i) {
        for (std::size_t j = 0; j < times.size(); ++j) {
          const Rational dt = times[i] - times[j];
          if (!sqrt_sum_le(squared_distance(image[a][i], image[b][j]), g2 * diam2 * dt * dt, c)) return false;
        }
      }
    }
  }
  return true;
}

ConeFill cone_fill(const Chain& c, const Contraction& phi) {
  const int k = c.dimension();
  ConeFill out{Chain(k + 1), 0, 0, true};
  if (c.empty()) return out;
  if (!boundary(c).empty()) throw std::invalid_argument("cone_fill: input is not a cycle");
  const long long sum = c.coefficient_sum();
  if (k % 2 == 0 && sum != 0) {
    throw std::invalid_argument("cone_fill: a " + std::to_string(k) + "-cycle with coefficient sum " +
                                std::to_string(sum) + " has no filling of this form");
  }
  out.filling = push_forward_vertices(
      [&](const Point& p) { return phi(p.front(), Point(p.begin() + 1, p.end())); }, prism(c));
  if (k % 2 == 1) out.filling.add(constant_simplex(phi.basepoint(), k + 1), sum);
  out.input_diameter_squared = diameter_squared(c);
  out.output_diameter_squared = diameter_squared(out.filling);
  out.diameter_bound_holds =
      out.output_diameter_squared <= Rational(4) * phi.gamma() * phi.gamma() * out.input_diameter_squared;
  return out;
}

namespace {

// Solves G a = r over the rationals; nullopt when G is singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> g, std::vector<Rational> r) {
  const std::size_t n = r.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && g[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(g[piv], g[col]);
    std::swap(r[piv], r[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || g[row][col].is_zero()) continue;
      const Rational f = g[row][col] / g[col][col];
      for (std::size_t j = col; j < n; ++j) g[row][j] -= f * g[col][j];
      r[row] -= f * r[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) r[i] /= g[i][i];
  return r;
}

Rational dot(const Point& a, const Point& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point minus(const Point& a, const Point& b) {
  Point d(a);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
  return d;
}

}  // namespace

Rational hull_distance_squared(const Point& p, const Simplex& s) {
  std::set<Point> uniq(s.begin(), s.end());
  const std::vector<Point> v(uniq.begin(), uniq.end());
  std::optional<Rational> best;
  const std::size_t count = v.size();
  // The nearest point lies in the relative interior of some face, where it is
  // the orthogonal projection onto that face's affine span.
  for (unsigned long mask = 1; mask < (1ul << count); ++mask) {
    std::vector<Point> f;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask & (1ul << i)) f.push_back(v[i]);
    }
    std::vector<Point> dirs;
    for (std::size_t i = 1; i < f.size(); ++i) dirs.push_back(minus(f[i], f[0]));
    const Point rel = minus(p, f[0]);
    std::vector<std::vector<Rational>> g(dirs.size(), std::vector<Rational>(dirs.size()));
    std::vector<Rational> rhs(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      rhs[i] = dot(rel, dirs[i]);
      for (std::size_t j = 0; j < dirs.size(); ++j) g[i][j] = dot(dirs[i], dirs[j]);
    }
    auto a = solve(g, rhs);
    if (!a) continue;
    Rational total = 0;
    bool inside = true;
    for (const auto& ai : *a) {
      if (ai < Rational(0)) inside = false;
      total += ai;
    }
    if (!inside || total > Rational(1)) continue;
    Point q = f[0];
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) q[j] += (*a)[i] * dirs[i][j];
    }
    const Rational d = squared_distance(p, q);
    if (!best || d < *best) best = d;
  }
  return *best;
}

bool Region::contains(const Point& p) const {
  switch (kind) {
    case Kind::Everything: return true;
    case Kind::Nothing: return false;
    case Kind::CoordinateAtMost: return p.at(static_cast<std::size_t>(coordinate)) <= threshold;
    case Kind::CoordinateAtLeast: return p.at(static_cast<std::size_t>(coordinate)) >= threshold;
    case Kind::Ball: return squared_distance(p, center) <= threshold * threshold;
    case Kind::OutsideOpenBall: return squared_distance(p, center) >= threshold * threshold;
  }
  return false;
}

bool Region::meets(const Simplex& s) const {
  switch (kind) {
    case Kind::Everything: return true;
    case Kind::Nothing: return false;
    case Kind::CoordinateAtMost:
    case Kind::CoordinateAtLeast:
    case Kind::OutsideOpenBall:
      // linear and convex functions attain their extremes at vertices
      return std::any_of(s.begin(), s.end(), [&](const Point& p) { return contains(p); });
    case Kind::Ball: return hull_distance_squared(center, s) <= threshold * threshold;
  }
  return false;
}

Part part_near(const Chain& c, const Region& U, const Rational& epsilon, int max_m) {
  if (epsilon <= Rational(0)) throw std::invalid_argument("part_near: epsilon must be positive");
  Part out{Chain(c.dimension()), 0, c};
  const Rational eps2 = epsilon * epsilon;
  while (!out.subdivided.empty() && max_simplex_diameter_squared(out.subdivided) >= eps2) {
    if (out.m >= max_m) throw std::runtime_error("part_near: subdivision limit reached");
    out.subdivided = subdivide(out.subdivided, 1);
    ++out.m;
  }
  for (const auto& [s, n] : out.subdivided.terms()) {
    if (U.meets(s)) out.part.add(s, n);
  }
  return out;
}

}  // namespace ichom::chains
