#include "ichom/currents.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ichom::currents {

void Current0::add(const GraphPoint& p, long long weight) {
  if (weight == 0) return;
  auto [it, inserted] = points_.try_emplace(p, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second == 0) points_.erase(it);
  }
}

long long Current0::total_weight() const {
  long long s = 0;
  for (const auto& [p, w] : points_) s += w;
  return s;
}

long long Current0::mass() const {
  long long s = 0;
  for (const auto& [p, w] : points_) s += w < 0 ? -w : w;
  return s;
}

Current0& Current0::operator+=(const Current0& o) {
  for (const auto& [p, w] : o.points_) add(p, w);
  return *this;
}

Current0& Current0::operator-=(const Current0& o) {
  for (const auto& [p, w] : o.points_) add(p, -w);
  return *this;
}

std::string Current0::to_string() const {
  if (points_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, w] : points_) {
    if (!first) os << ' ';
    first = false;
    os << (w > 0 ? "+" : "") << w << '[' << p.to_string() << ']';
  }
  return os.str();
}

namespace {

using Steps = std::vector<Piece>;

long long value_on(const Steps& v, std::size_t& cursor, const Rational& lo, const Rational& hi) {
  while (cursor < v.size() && v[cursor].to <= lo) ++cursor;
  if (cursor < v.size() && v[cursor].from <= lo && hi <= v[cursor].to) return v[cursor].weight;
  return 0;
}

template <class F>
Steps combine(const Steps& a, const Steps& b, F f) {
  std::vector<Rational> cuts;
  for (const auto* v : {&a, &b}) {
    for (const auto& p : *v) {
      cuts.push_back(p.from);
      cuts.push_back(p.to);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Steps out;
  std::size_t ia = 0, ib = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const long long w = f(value_on(a, ia, cuts[i], cuts[i + 1]), value_on(b, ib, cuts[i], cuts[i + 1]));
    if (w == 0) continue;
    if (!out.empty() && out.back().to == cuts[i] && out.back().weight == w) {
      out.back().to = cuts[i + 1];
    } else {
      out.push_back({cuts[i], cuts[i + 1], w});
    }
  }
  return out;
}

template <class F>
void combine_into(std::map<int, Steps>& dst, const std::map<int, Steps>& src, F f) {
  for (const auto& [e, steps] : src) {
    Steps merged = combine(dst.count(e) ? dst.at(e) : Steps{}, steps, f);
    if (merged.empty()) {
      dst.erase(e);
    } else {
      dst[e] = std::move(merged);
    }
  }
}

}  // namespace

void Current1::add(int edge, const Rational& from, const Rational& to, long long weight) {
  if (edge < 0) throw std::invalid_argument("negative edge index");
  for (const auto* x : {&from, &to}) {
    if (*x < Rational(0) || *x > Rational(1)) throw std::invalid_argument("arc endpoint outside [0,1]");
  }
  if (weight == 0 || from == to) return;
  Piece p = from < to ? Piece{from, to, weight} : Piece{to, from, -weight};
  std::map<int, Steps> single{{edge, {p}}};
  combine_into(edges_, single, [](long long x, long long y) { return x + y; });
}

long long Current1::weight_at(int edge, const Rational& s) const {
  auto it = edges_.find(edge);
  if (it == edges_.end()) return 0;
  for (const auto& p : it->second) {
    if (p.from < s && s < p.to) return p.weight;
  }
  return 0;
}

std::vector<Rational> Current1::breakpoints(int edge) const {
  std::vector<Rational> out;
  auto it = edges_.find(edge);
  if (it == edges_.end()) return out;
  for (const auto& p : it->second) {
    if (out.empty() || out.back() != p.from) out.push_back(p.from);
    out.push_back(p.to);
  }
  return out;
}

ArcSet Current1::support() const {
  ArcSet a;
  for (const auto& [e, steps] : edges_) {
    for (const auto& p : steps) a.add(e, p.from, p.to);
  }
  return a;
}

Current1& Current1::operator+=(const Current1& o) {
  combine_into(edges_, o.edges_, [](long long x, long long y) { return x + y; });
  return *this;
}

Current1& Current1::operator-=(const Current1& o) {
  combine_into(edges_, o.edges_, [](long long x, long long y) { return x - y; });
  return *this;
}

Current1 operator*(long long k, const Current1& c) {
  Current1 out;
  if (k == 0) return out;
  out.edges_ = c.edges_;
  for (auto& [e, steps] : out.edges_) {
    for (auto& p : steps) p.weight *= k;
  }
  return out;
}

std::string Current1::to_string() const {
  if (edges_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, steps] : edges_) {
    for (const auto& p : steps) {
      if (!first) os << ' ';
      first = false;
      os << (p.weight > 0 ? "+" : "") << p.weight << "[e" << e << ':' << p.from << "->" << p.to << ']';
    }
  }
  return os.str();
}

Current0 boundary1(const MetricGraph& g, const Current1& T) {
  Current0 out;
  for (const auto& [e, steps] : T.edges()) {
    for (const auto& p : steps) {
      out.add(GraphPoint::on_edge(g, e, p.to), p.weight);
      out.add(GraphPoint::on_edge(g, e, p.from), -p.weight);
    }
  }
  return out;
}

Rational mass_coefficient(const MetricGraph& g, const Current1& T) {
  Rational m = 0;
  for (const auto& [e, steps] : T.edges()) {
    for (const auto& p : steps) m += Rational(p.weight < 0 ? -p.weight : p.weight) * (p.to - p.from) * g.edge(e).length;
  }
  return m;
}

CertifiedReal mass(const MetricGraph& g, const Current1& T, const PiEnclosure& pi) {
  return g.to_real(mass_coefficient(g, T), pi);
}

Current1 restrict(const Current1& T, const ArcSet& A) {
  std::map<int, Steps> indicator;
  for (const auto& [e, ivs] : A.arcs()) {
    for (const auto& iv : ivs) {
      if (iv.from < iv.to) indicator[e].push_back({iv.from, iv.to, 1});
    }
  }
  Current1 out;
  for (const auto& [e, steps] : T.edges()) {
    auto it = indicator.find(e);
    if (it == indicator.end()) continue;
    for (const auto& p : combine(steps, it->second, [](long long x, long long y) { return x * y; })) {
      out.add(e, p.from, p.to, p.weight);
    }
  }
  return out;
}

Current0 restrict(const MetricGraph& g, const Current0& T, const ArcSet& A) {
  Current0 out;
  for (const auto& [p, w] : T.points()) {
    if (A.contains(g, p)) out.add(p, w);
  }
  return out;
}

GraphMap::GraphMap(const MetricGraph& source, const MetricGraph& target, std::vector<GraphPoint> vertex_images,
                   std::vector<std::vector<MapPiece>> edge_pieces)
    : src_(&source), dst_(&target), vertex_images_(std::move(vertex_images)), edge_pieces_(std::move(edge_pieces)) {
  if (static_cast<int>(vertex_images_.size()) != source.vertex_count()) {
    throw std::invalid_argument("graph map needs one image per vertex");
  }
  if (static_cast<int>(edge_pieces_.size()) != source.edge_count()) {
    throw std::invalid_argument("graph map needs pieces for every edge");
  }
  for (const auto& p : vertex_images_) {
    if (p.is_vertex() ? p.vertex_index() >= target.vertex_count() : p.edge() >= target.edge_count()) {
      throw std::invalid_argument("vertex image outside the target graph");
    }
  }
  for (int e = 0; e < source.edge_count(); ++e) {
    const auto& pieces = edge_pieces_[static_cast<std::size_t>(e)];
    if (pieces.empty()) throw std::invalid_argument("edge " + std::to_string(e) + " has no map pieces");
    Rational cursor = 0;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      const MapPiece& mp = pieces[k];
      if (mp.from != cursor || !(mp.from < mp.to)) {
        throw std::invalid_argument("map pieces of edge " + std::to_string(e) + " do not tile [0,1]");
      }
      if (const auto* a = std::get_if<AffinePiece>(&mp.kind)) {
        if (a->target_edge < 0 || a->target_edge >= target.edge_count()) {
          throw std::invalid_argument("affine piece onto a missing edge");
        }
        for (const auto* x : {&a->target_from, &a->target_to}) {
          if (*x < Rational(0) || *x > Rational(1)) throw std::invalid_argument("affine piece leaves its target edge");
        }
        if (a->target_from == a->target_to) {
          throw std::invalid_argument("degenerate affine piece; use a constant piece");
        }
      }
      if (k > 0 && !(piece_value(e, pieces[k - 1], mp.from) == piece_value(e, mp, mp.from))) {
        throw std::invalid_argument("graph map is discontinuous on edge " + std::to_string(e));
      }
      cursor = mp.to;
    }
    if (cursor != Rational(1)) throw std::invalid_argument("map pieces of edge " + std::to_string(e) + " stop early");
    const auto& ed = source.edge(e);
    if (!(piece_value(e, pieces.front(), 0) == vertex_images_[static_cast<std::size_t>(ed.tail)]) ||
        !(piece_value(e, pieces.back(), 1) == vertex_images_[static_cast<std::size_t>(ed.head)])) {
      throw std::invalid_argument("edge " + std::to_string(e) + " image does not match its vertex images");
    }
  }
}

GraphMap GraphMap::identity(const MetricGraph& g) {
  std::vector<GraphPoint> vimg;
  for (int v = 0; v < g.vertex_count(); ++v) vimg.push_back(GraphPoint::vertex(v));
  std::vector<std::vector<MapPiece>> pieces;
  for (int e = 0; e < g.edge_count(); ++e) pieces.push_back({MapPiece{0, 1, AffinePiece{e, 0, 1}}});
  return GraphMap(g, g, std::move(vimg), std::move(pieces));
}

GraphPoint GraphMap::piece_value(int, const MapPiece& piece, const Rational& s) const {
  if (const auto* c = std::get_if<ConstantPiece>(&piece.kind)) return c->value;
  const auto& a = std::get<AffinePiece>(piece.kind);
  const Rational t = a.target_from + (s - piece.from) / (piece.to - piece.from) * (a.target_to - a.target_from);
  return GraphPoint::on_edge(*dst_, a.target_edge, t);
}

GraphPoint GraphMap::operator()(const GraphPoint& p) const {
  if (p.is_vertex()) return vertex_images_.at(static_cast<std::size_t>(p.vertex_index()));
  for (const auto& mp : edge_pieces_.at(static_cast<std::size_t>(p.edge()))) {
    if (mp.from <= p.parameter() && p.parameter() <= mp.to) return piece_value(p.edge(), mp, p.parameter());
  }
  throw std::logic_error("graph map pieces do not cover the edge");
}

Current1 GraphMap::push_forward(const Current1& T) const {
  Current1 out;
  for (const auto& [e, steps] : T.edges()) {
    for (const auto& mp : edge_pieces_.at(static_cast<std::size_t>(e))) {
      const auto* a = std::get_if<AffinePiece>(&mp.kind);
      if (!a) continue;  // collapsed: degenerate image
      for (const auto& p : steps) {
        const Rational lo = max(p.from, mp.from);
        const Rational hi = min(p.to, mp.to);
        if (!(lo < hi)) continue;
        auto img = [&](const Rational& s) {
          return a->target_from + (s - mp.from) / (mp.to - mp.from) * (a->target_to - a->target_from);
        };
        out.add(a->target_edge, img(lo), img(hi), p.weight);
      }
    }
  }
  return out;
}

Current0 GraphMap::push_forward(const Current0& T) const {
  Current0 out;
  for (const auto& [p, w] : T.points()) out.add((*this)(p), w);
  return out;
}

MetricGraph circle_model(long long n) {
  if (n < 1) throw std::invalid_argument("circle index must be positive");
  return MetricGraph(1, {graph::Edge{0, 0, Rational(2, n), n}}, graph::LengthUnit::Pi, 0);
}

GraphMap earring_retraction(const MetricGraph& earring, const MetricGraph& circle, long long n) {
  std::vector<std::vector<MapPiece>> pieces;
  for (const auto& e : earring.edges()) {
    if (e.circle == n) {
      pieces.push_back({MapPiece{0, 1, AffinePiece{0, 0, 1}}});
    } else {
      pieces.push_back({MapPiece{0, 1, ConstantPiece{GraphPoint::vertex(0)}}});
    }
  }
  return GraphMap(earring, circle, {GraphPoint::vertex(0)}, std::move(pieces));
}

GraphMap earring_inclusion(const MetricGraph& circle, const MetricGraph& earring, long long n) {
  auto e = earring.edge_for_circle(n);
  if (!e) throw std::invalid_argument("earring model has no circle L" + std::to_string(n));
  return GraphMap(circle, earring, {GraphPoint::vertex(earring.basepoint())}, {{MapPiece{0, 1, AffinePiece{*e, 0, 1}}}});
}

bool is_generic_radius(const DistanceFunction& d, const Current1& T, const Rational& r) {
  const auto crit = d.critical_values();
  if (std::binary_search(crit.begin(), crit.end(), r)) return false;
  for (const auto& [e, steps] : T.edges()) {
    for (const auto& s : T.breakpoints(e)) {
      if (d.at(e, s) == r) return false;
    }
  }
  return true;
}

Current0 slice(const Current1& T, const DistanceFunction& d, const Rational& r) {
  if (!is_generic_radius(d, T, r)) {
    throw std::domain_error("slice radius " + r.to_string() + " is not generic");
  }
  const MetricGraph& g = d.graph();
  const ArcSet below = d.sublevel(r);
  Current0 out;
  for (const auto& [e, steps] : T.edges()) {
    auto it = below.arcs().find(e);
    if (it == below.arcs().end()) continue;
    for (const auto& iv : it->second) {
      // leaving {d <= r} at the right end, entering at the left end
      if (iv.to < Rational(1)) out.add(GraphPoint::on_edge(g, e, iv.to), T.weight_at(e, iv.to));
      if (iv.from > Rational(0)) out.add(GraphPoint::on_edge(g, e, iv.from), -T.weight_at(e, iv.from));
    }
  }
  return out;
}

Current0 slice_by_definition(const MetricGraph& g, const Current1& T, const DistanceFunction& d, const Rational& r) {
  const ArcSet below = d.sublevel(r);
  return boundary1(g, restrict(T, below)) - restrict(g, boundary1(g, T), below);
}

void GraphChain0::add(const GraphPoint& p, long long n) {
  if (n == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, n);
  if (!inserted) {
    it->second += n;
    if (it->second == 0) terms_.erase(it);
  }
}

void GraphChain1::add(const GraphSimplex& s, long long n) {
  if (s.edge < 0) throw std::invalid_argument("negative edge index");
  for (const auto* x : {&s.from, &s.to}) {
    if (*x < Rational(0) || *x > Rational(1)) throw std::invalid_argument("simplex leaves its edge");
  }
  if (n == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, n);
  if (!inserted) {
    it->second += n;
    if (it->second == 0) terms_.erase(it);
  }
}

void GraphChain1::add_path(const std::vector<graph::EdgeSegment>& path, long long n) {
  for (const auto& seg : path) {
    if (seg.from != seg.to) add({seg.edge, seg.from, seg.to}, n);
  }
}

GraphChain1& GraphChain1::operator+=(const GraphChain1& o) {
  for (const auto& [s, n] : o.terms_) add(s, n);
  return *this;
}

GraphChain0 boundary(const MetricGraph& g, const GraphChain1& c) {
  GraphChain0 out;
  for (const auto& [s, n] : c.terms()) {
    out.add(GraphPoint::on_edge(g, s.edge, s.to), n);
    out.add(GraphPoint::on_edge(g, s.edge, s.from), -n);
  }
  return out;
}

GraphChain1 subdivide(const GraphChain1& c, int m) {
  if (m < 0) throw std::invalid_argument("subdivision count must be non-negative");
  GraphChain1 cur = c;
  for (int i = 0; i < m; ++i) {
    GraphChain1 next;
    for (const auto& [s, n] : cur.terms()) {
      const Rational mid = (s.from + s.to) / Rational(2);
      next.add({s.edge, mid, s.to}, n);
      next.add({s.edge, mid, s.from}, -n);
    }
    cur = std::move(next);
  }
  return cur;
}

Current1 chain_to_current(const GraphChain1& c) {
  Current1 out;
  for (const auto& [s, n] : c.terms()) out.add(s.edge, s.from, s.to, n);
  return out;
}

Current0 chain_to_current(const GraphChain0& c) {
  Current0 out;
  for (const auto& [p, n] : c.terms()) out.add(p, n);
  return out;
}

GraphChain0 current_to_chain0(const Current0& T) {
  GraphChain0 c;
  for (const auto& [p, w] : T.points()) c.add(p, w);
  return c;
}

long long WindingVector::max_abs() const {
  long long m = 0;
  for (const auto& [n, w] : entries) m = std::max(m, w < 0 ? -w : w);
  return m;
}

bool WindingVector::divisible_by_all(const std::set<long long>& divisors) const {
  for (long long k : divisors) {
    if (k < 1) throw std::invalid_argument("divisors must be positive");
    for (const auto& [n, w] : entries) {
      if (w % k != 0) return false;
    }
  }
  return true;
}

WindingVector winding_vector(const MetricGraph& g, const Current1& T) {
  if (!boundary1(g, T).empty()) throw std::invalid_argument("winding_vector: current has nonzero boundary");
  WindingVector out;
  for (const auto& [e, steps] : T.edges()) {
    const auto& ed = g.edge(e);
    if (ed.circle < 1 || ed.tail != ed.head) throw std::invalid_argument("winding_vector: edge is not an earring circle");
    if (steps.size() != 1 || steps[0].from != Rational(0) || steps[0].to != Rational(1)) {
      throw std::invalid_argument("winding_vector: nonconstant multiplicity on L" + std::to_string(ed.circle));
    }
    out.entries[ed.circle] = steps[0].weight;
  }
  return out;
}

}  // namespace ichom::currents
