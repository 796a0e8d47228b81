#include "ichom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ichom::graph {

GraphPoint GraphPoint::vertex(int v) {
  if (v < 0) throw std::invalid_argument("negative vertex index");
  GraphPoint p;
  p.vertex_ = v;
  return p;
}

GraphPoint GraphPoint::on_edge(const MetricGraph& g, int edge, const Rational& s) {
  if (edge < 0 || edge >= g.edge_count()) throw std::invalid_argument("edge index out of range");
  if (s < Rational(0) || s > Rational(1)) throw std::invalid_argument("edge parameter outside [0,1]");
  if (s.is_zero()) return vertex(g.edge(edge).tail);
  if (s == Rational(1)) return vertex(g.edge(edge).head);
  GraphPoint p;
  p.edge_ = edge;
  p.s_ = s;
  return p;
}

std::string GraphPoint::to_string() const {
  if (is_vertex()) return "v" + std::to_string(vertex_);
  return "e" + std::to_string(edge_) + "@" + s_.to_string();
}

std::strong_ordering operator<=>(const GraphPoint& a, const GraphPoint& b) {
  if (auto c = a.vertex_ <=> b.vertex_; c != 0) return c;
  if (auto c = a.edge_ <=> b.edge_; c != 0) return c;
  return a.s_ <=> b.s_;
}

MetricGraph::MetricGraph(int vertex_count, std::vector<Edge> edges, LengthUnit unit, int basepoint)
    : vertex_count_(vertex_count), edges_(std::move(edges)), unit_(unit), basepoint_(basepoint) {
  if (vertex_count_ < 1) throw std::invalid_argument("graph needs a vertex");
  if (basepoint_ < 0 || basepoint_ >= vertex_count_) throw std::invalid_argument("basepoint out of range");
  std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 || e.head >= vertex_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.length <= Rational(0)) throw std::invalid_argument("edge lengths must be positive");
    parent[static_cast<std::size_t>(find(e.tail))] = find(e.head);
  }
  for (int v = 0; v < vertex_count_; ++v) {
    if (find(v) != find(0)) throw std::invalid_argument("graph is not connected");
  }
}

MetricGraph MetricGraph::earring(int circles) {
  if (circles < 1) throw std::invalid_argument("earring model needs at least one circle");
  std::vector<Edge> edges;
  for (int n = 1; n <= circles; ++n) edges.push_back(Edge{0, 0, Rational(2, n), n});
  return MetricGraph(1, std::move(edges), LengthUnit::Pi, 0);
}

MetricGraph MetricGraph::circle(const Rational& length, int pieces, LengthUnit unit) {
  if (pieces < 1) throw std::invalid_argument("circle needs at least one edge");
  std::vector<Edge> edges;
  for (int i = 0; i < pieces; ++i) edges.push_back(Edge{i, (i + 1) % pieces, length / Rational(pieces), 0});
  return MetricGraph(pieces, std::move(edges), unit, 0);
}

std::optional<int> MetricGraph::edge_for_circle(long long n) const {
  for (int e = 0; e < edge_count(); ++e) {
    if (edges_[static_cast<std::size_t>(e)].circle == n) return e;
  }
  return std::nullopt;
}

CertifiedReal MetricGraph::to_real(const Rational& len, const PiEnclosure& pi) const {
  if (unit_ == LengthUnit::Plain) return CertifiedReal::exact(len);
  return PiMultiple{len}.enclose(pi);
}

std::optional<Rational> MetricGraph::girth() const {
  std::optional<Rational> best;
  auto offer = [&](const Rational& x) {
    if (!best || x < *best) best = x;
  };
  for (std::size_t skip = 0; skip < edges_.size(); ++skip) {
    const Edge& e = edges_[skip];
    if (e.tail == e.head) {
      offer(e.length);
      continue;
    }
    // shortest tail-head path avoiding this edge
    std::vector<std::optional<Rational>> d(static_cast<std::size_t>(vertex_count_));
    std::vector<bool> done(static_cast<std::size_t>(vertex_count_), false);
    d[static_cast<std::size_t>(e.tail)] = Rational(0);
    while (true) {
      int u = -1;
      for (int v = 0; v < vertex_count_; ++v) {
        auto vi = static_cast<std::size_t>(v);
        if (!done[vi] && d[vi] && (u < 0 || *d[vi] < *d[static_cast<std::size_t>(u)])) u = v;
      }
      if (u < 0) break;
      done[static_cast<std::size_t>(u)] = true;
      for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (k == skip) continue;
        const Edge& f = edges_[k];
        int w = f.tail == u ? f.head : (f.head == u ? f.tail : -1);
        if (w < 0) continue;
        Rational cand = *d[static_cast<std::size_t>(u)] + f.length;
        auto& dw = d[static_cast<std::size_t>(w)];
        if (!dw || cand < *dw) dw = cand;
      }
    }
    if (const auto& dh = d[static_cast<std::size_t>(e.head)]) offer(*dh + e.length);
  }
  return best;
}

namespace {

void merge_into(std::vector<Interval>& v) {
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
    return a.from < b.from || (a.from == b.from && a.to < b.to);
  });
  std::vector<Interval> out;
  for (const auto& iv : v) {
    if (!out.empty() && iv.from <= out.back().to) {
      out.back().to = max(out.back().to, iv.to);
    } else {
      out.push_back(iv);
    }
  }
  v = std::move(out);
}

}  // namespace

ArcSet ArcSet::whole(const MetricGraph& g) {
  ArcSet a;
  for (int e = 0; e < g.edge_count(); ++e) a.add(e, 0, 1);
  return a;
}

ArcSet ArcSet::edge_set(int edge) {
  ArcSet a;
  a.add(edge, 0, 1);
  return a;
}

void ArcSet::add(int edge, Rational from, Rational to) {
  if (to < from) std::swap(from, to);
  if (from < Rational(0) || to > Rational(1)) throw std::invalid_argument("arc outside the edge");
  auto& v = arcs_[edge];
  v.push_back({std::move(from), std::move(to)});
  merge_into(v);
}

bool ArcSet::contains(const MetricGraph& g, const GraphPoint& p) const {
  auto in = [&](int e, const Rational& s) {
    auto it = arcs_.find(e);
    if (it == arcs_.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(),
                       [&](const Interval& iv) { return iv.from <= s && s <= iv.to; });
  };
  if (!p.is_vertex()) return in(p.edge(), p.parameter());
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).tail == p.vertex_index() && in(e, 0)) return true;
    if (g.edge(e).head == p.vertex_index() && in(e, 1)) return true;
  }
  return false;
}

ArcSet ArcSet::complement(const MetricGraph& g) const {
  ArcSet out;
  for (int e = 0; e < g.edge_count(); ++e) {
    Rational cursor = 0;
    auto it = arcs_.find(e);
    if (it != arcs_.end()) {
      for (const auto& iv : it->second) {
        if (iv.from > cursor) out.add(e, cursor, iv.from);
        cursor = max(cursor, iv.to);
      }
    }
    if (cursor < Rational(1)) out.add(e, cursor, 1);
  }
  return out;
}

DistanceFunction::DistanceFunction(const MetricGraph& g, GraphPoint center) : g_(&g), center_(std::move(center)) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::optional<Rational>> d(n);
  pred_.assign(n, Pred{});
  if (center_.is_vertex()) {
    if (center_.vertex_index() >= g.vertex_count()) throw std::invalid_argument("center vertex out of range");
    d[static_cast<std::size_t>(center_.vertex_index())] = Rational(0);
  } else {
    const Edge& e = g.edge(center_.edge());
    const Rational& sc = center_.parameter();
    d[static_cast<std::size_t>(e.tail)] = sc * e.length;
    pred_[static_cast<std::size_t>(e.tail)] = Pred{center_.edge(), sc, 0, -1};
    Rational via_head = (Rational(1) - sc) * e.length;
    auto& dh = d[static_cast<std::size_t>(e.head)];
    if (!dh || via_head < *dh) {
      dh = via_head;
      pred_[static_cast<std::size_t>(e.head)] = Pred{center_.edge(), sc, 1, -1};
    }
  }
  std::vector<bool> done(n, false);
  while (true) {
    int u = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (!done[v] && d[v] && (u < 0 || *d[v] < *d[static_cast<std::size_t>(u)])) u = static_cast<int>(v);
    }
    if (u < 0) break;
    done[static_cast<std::size_t>(u)] = true;
    for (int k = 0; k < g.edge_count(); ++k) {
      const Edge& f = g.edge(k);
      for (int side = 0; side < 2; ++side) {
        const int from = side == 0 ? f.tail : f.head;
        const int to = side == 0 ? f.head : f.tail;
        if (from != u) continue;
        Rational cand = *d[static_cast<std::size_t>(u)] + f.length;
        auto& dt = d[static_cast<std::size_t>(to)];
        if (!dt || cand < *dt) {
          dt = cand;
          pred_[static_cast<std::size_t>(to)] = Pred{k, side == 0 ? Rational(0) : Rational(1),
                                                      side == 0 ? Rational(1) : Rational(0), u};
        }
      }
    }
  }
  dist_.reserve(n);
  for (auto& x : d) dist_.push_back(*x);
}

Rational DistanceFunction::at(int edge, const Rational& s) const {
  const Edge& e = g_->edge(edge);
  Rational best = min(dist_[static_cast<std::size_t>(e.tail)] + s * e.length,
                      dist_[static_cast<std::size_t>(e.head)] + (Rational(1) - s) * e.length);
  if (!center_.is_vertex() && center_.edge() == edge) best = min(best, (s - center_.parameter()).abs() * e.length);
  return best;
}

Rational DistanceFunction::operator()(const GraphPoint& p) const {
  if (p.is_vertex()) return dist_.at(static_cast<std::size_t>(p.vertex_index()));
  return at(p.edge(), p.parameter());
}

std::vector<Rational> DistanceFunction::breakpoints(int edge) const {
  const Edge& e = g_->edge(edge);
  const Rational& du = dist_[static_cast<std::size_t>(e.tail)];
  const Rational& dv = dist_[static_cast<std::size_t>(e.head)];
  const Rational& L = e.length;
  std::vector<Rational> out;
  auto offer = [&](const Rational& s) {
    if (s > Rational(0) && s < Rational(1)) out.push_back(s);
  };
  offer((dv - du + L) / (Rational(2) * L));
  if (!center_.is_vertex() && center_.edge() == edge) {
    const Rational& sc = center_.parameter();
    offer(sc);
    offer((sc * L - du) / (Rational(2) * L));
    offer((dv + L + sc * L) / (Rational(2) * L));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational DistanceFunction::max_on(int edge, const Rational& from, const Rational& to) const {
  Rational best = max(at(edge, from), at(edge, to));
  for (const auto& s : breakpoints(edge)) {
    if (from < s && s < to) best = max(best, at(edge, s));
  }
  return best;
}

Rational DistanceFunction::min_on(int edge, const Rational& from, const Rational& to) const {
  Rational best = min(at(edge, from), at(edge, to));
  for (const auto& s : breakpoints(edge)) {
    if (from < s && s < to) best = min(best, at(edge, s));
  }
  return best;
}

namespace {

ArcSet level_arcs(const MetricGraph& g, const GraphPoint& center, const std::vector<Rational>& dist,
                  const Rational& r, bool strict) {
  auto ok = [&](const Rational& base) { return strict ? base < r : base <= r; };
  ArcSet out;
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    const Rational& du = dist[static_cast<std::size_t>(e.tail)];
    const Rational& dv = dist[static_cast<std::size_t>(e.head)];
    if (ok(du)) out.add(k, 0, min(Rational(1), (r - du) / e.length));
    if (ok(dv)) out.add(k, max(Rational(0), Rational(1) - (r - dv) / e.length), 1);
    if (!center.is_vertex() && center.edge() == k && ok(0)) {
      const Rational w = r / e.length;
      out.add(k, max(Rational(0), center.parameter() - w), min(Rational(1), center.parameter() + w));
    }
  }
  return out;
}

}  // namespace

ArcSet DistanceFunction::sublevel(const Rational& r) const { return level_arcs(*g_, center_, dist_, r, false); }

ArcSet DistanceFunction::strict_sublevel_closure(const Rational& r) const {
  return level_arcs(*g_, center_, dist_, r, true);
}

std::vector<Rational> DistanceFunction::critical_values() const {
  std::vector<Rational> out{0};
  out.insert(out.end(), dist_.begin(), dist_.end());
  for (int k = 0; k < g_->edge_count(); ++k) {
    for (const auto& s : breakpoints(k)) out.push_back(at(k, s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EdgeSegment> DistanceFunction::path_to_vertex(int v) const {
  std::vector<EdgeSegment> rev;
  int cur = v;
  while (cur >= 0) {
    const Pred& p = pred_[static_cast<std::size_t>(cur)];
    if (p.edge < 0) break;  // the center vertex itself
    rev.push_back({p.edge, p.from, p.to});
    cur = p.previous;
  }
  return {rev.rbegin(), rev.rend()};
}

std::vector<EdgeSegment> DistanceFunction::geodesic_to(const GraphPoint& p) const {
  if (p.is_vertex()) return path_to_vertex(p.vertex_index());
  const int k = p.edge();
  const Edge& e = g_->edge(k);
  const Rational& s = p.parameter();
  const Rational via_tail = dist_[static_cast<std::size_t>(e.tail)] + s * e.length;
  const Rational via_head = dist_[static_cast<std::size_t>(e.head)] + (Rational(1) - s) * e.length;
  if (!center_.is_vertex() && center_.edge() == k) {
    const Rational direct = (s - center_.parameter()).abs() * e.length;
    if (direct <= via_tail && direct <= via_head) return {{k, center_.parameter(), s}};
  }
  std::vector<EdgeSegment> path = path_to_vertex(via_tail <= via_head ? e.tail : e.head);
  path.push_back({k, via_tail <= via_head ? Rational(0) : Rational(1), s});
  return path;
}

bool DistanceFunction::ball_is_tree(const Rational& R) const {
  // vertex ids, plus one virtual vertex for an interior center
  const int n = g_->vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto covered = [&](const Rational& dx, const Rational& dy, const Rational& len) {
    return dx <= R && dy <= R && (R - dx) + (R - dy) >= len;
  };
  auto join = [&](int x, int y) {
    int a = find(x), b = find(y);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  };
  for (int k = 0; k < g_->edge_count(); ++k) {
    const Edge& e = g_->edge(k);
    const Rational& du = dist_[static_cast<std::size_t>(e.tail)];
    const Rational& dv = dist_[static_cast<std::size_t>(e.head)];
    if (!center_.is_vertex() && center_.edge() == k) {
      const Rational& sc = center_.parameter();
      if (covered(du, 0, sc * e.length) && !join(e.tail, n)) return false;
      if (covered(0, dv, (Rational(1) - sc) * e.length) && !join(n, e.head)) return false;
    } else if (covered(du, dv, e.length) && !join(e.tail, e.head)) {
      return false;
    }
  }
  return true;
}

}  // namespace ichom::graph
