#include "ichom/reconstruction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ichom::reconstruction {

using graph::ArcSet;
using graph::DistanceFunction;

Rational nested_radius_bound(const Rational& R, const Rational& gamma) {
  auto F = [&](const Rational& t) { return Rational(2) * gamma * t; };
  return Rational(2) * (R + F(Rational(2) * R + Rational(2) * F(Rational(2) * R)));
}

namespace {

std::vector<GraphPoint> cover_centers(const MetricGraph& g, const Current1& T, const Rational& R) {
  std::vector<GraphPoint> centers;
  std::set<GraphPoint> seen;
  const ArcSet spt = T.support();
  for (const auto& [e, ivs] : spt.arcs()) {
    const Rational L = g.edge(e).length;
    for (const auto& iv : ivs) {
      const Rational span = iv.to - iv.from;
      // consecutive centers at most R apart along the arc
      long long J = std::max<long long>(1, to_int64((span * L / R).ceil()));
      for (long long j = 0; j <= J; ++j) {
        GraphPoint p = GraphPoint::on_edge(g, e, iv.from + span * Rational(j, J));
        if (seen.insert(p).second) centers.push_back(p);
      }
    }
  }
  return centers;
}

using Uncovered = std::map<int, std::vector<graph::Interval>>;

// V minus the open ball {d < R}. The open ball meets an edge in the closure
// intervals of {d < R} minus the end parameters where d = R; an included end
// can only be 0 or 1, so every remainder stays closed.
Uncovered remove_open_ball(const Uncovered& V, const DistanceFunction& d, const Rational& R) {
  const ArcSet near = d.strict_sublevel_closure(R);
  Uncovered out;
  for (const auto& [e, ivs] : V) {
    auto it = near.arcs().find(e);
    if (it == near.arcs().end()) {
      out[e] = ivs;
      continue;
    }
    std::vector<graph::Interval> cur = ivs;
    for (const auto& o : it->second) {
      const bool from_in = d.at(e, o.from) < R;
      const bool to_in = d.at(e, o.to) < R;
      std::vector<graph::Interval> next;
      for (const auto& iv : cur) {
        if (iv.to < o.from || o.to < iv.from) {
          next.push_back(iv);
          continue;
        }
        if (iv.from <= o.from && !from_in) next.push_back({iv.from, o.from});
        if (o.to <= iv.to && !to_in) next.push_back({o.to, iv.to});
      }
      cur = std::move(next);
    }
    if (!cur.empty()) out[e] = std::move(cur);
  }
  return out;
}

// For each i, the support of T minus the open balls j < i.
std::vector<Uncovered> uncovered_sets(const Current1& T, const std::vector<DistanceFunction>& d,
                                      const Rational& R) {
  std::vector<Uncovered> out;
  out.reserve(d.size());
  Uncovered V = T.support().arcs();
  for (const auto& dj : d) {
    out.push_back(V);
    V = remove_open_ball(V, dj, R);
  }
  return out;
}

// sup of d over spt(T) intersected with V; -1 when empty.
Rational uncovered_need(const Current1& T, const Uncovered& V, const DistanceFunction& d) {
  Rational need = -1;
  const ArcSet spt = T.support();
  for (const auto& [e, ivs] : spt.arcs()) {
    auto it = V.find(e);
    if (it == V.end()) continue;
    for (const auto& a : ivs) {
      for (const auto& b : it->second) {
        const Rational lo = max(a.from, b.from);
        const Rational hi = min(a.to, b.to);
        if (lo <= hi) need = max(need, d.max_on(e, lo, hi));
      }
    }
  }
  return need;
}

// Midpoint of (lo, hi) first, then dyadic refinements, until both currents
// see a generic radius.
Rational generic_radius(const DistanceFunction& d, const Current1& a, const Current1& b, const Rational& lo,
                        const Rational& hi) {
  const Rational width = hi - lo;
  for (int level = 1; level < 40; ++level) {
    const long long den = 1LL << level;
    for (long long k = 1; k < den; k += 2) {
      const Rational r = lo + width * Rational(k, den);
      if (currents::is_generic_radius(d, a, r) && currents::is_generic_radius(d, b, r)) return r;
    }
  }
  throw std::runtime_error("no generic slicing radius found");
}

Rational reach_of(const MetricGraph& g, const DistanceFunction& d, const Current1& piece, const Current0& bdry) {
  Rational reach = 0;
  for (const auto& [e, steps] : piece.edges()) {
    for (const auto& p : steps) reach = max(reach, d.max_on(e, p.from, p.to));
  }
  for (const auto& [p, w] : bdry.points()) reach = max(reach, d(p));
  (void)g;
  return reach;
}

std::optional<Result> attempt(const MetricGraph& g, const Current1& T, const Rational& R) {
  Result out;
  out.radius = R;
  const auto centers = cover_centers(g, T, R);
  std::vector<DistanceFunction> d;
  d.reserve(centers.size());
  for (const auto& c : centers) {
    d.emplace_back(g, c);
    if (!d.back().ball_is_tree(R)) return std::nullopt;
  }
  const std::vector<Uncovered> uncovered = uncovered_sets(T, d, R);
  Current1 cur = T;
  for (std::size_t i = centers.size(); i-- > 0;) {
    if (cur.empty()) break;
    Step st;
    st.center = centers[i];
    st.ball_radius = R;
    st.need = uncovered_need(cur, uncovered[i], d[i]);
    if (st.need >= R) return std::nullopt;
    st.r_bar = (max(st.need, Rational(0)) + R) / Rational(2);
    st.alpha = (R - st.r_bar) / Rational(4);
    st.r = generic_radius(d[i], cur, T, st.r_bar + st.alpha, st.r_bar + Rational(3) * st.alpha);
    st.slice = currents::slice(cur, d[i], st.r);
    st.piece = currents::restrict(cur, d[i].sublevel(st.r));
    const Current0 bdry = currents::boundary1(g, st.piece);
    for (const auto& [p, w] : bdry.points()) st.chain.add_path(d[i].geodesic_to(p), w);
    st.filling_zero = (st.piece - currents::chain_to_current(st.chain)).empty();
    if (!st.filling_zero) return std::nullopt;
    st.reach = reach_of(g, d[i], st.piece, bdry);
    st.diameter_bound = Rational(2) * st.reach;
    cur -= st.piece;
    out.chain += st.chain;
    if (!st.piece.empty()) out.steps.push_back(std::move(st));
  }
  out.remainder_zero = cur.empty();
  if (!out.remainder_zero) return std::nullopt;
  return out;
}

}  // namespace

Result current_to_chain(const MetricGraph& g, const Current1& T, const Params& params) {
  if (params.epsilon <= Rational(0)) throw std::invalid_argument("current_to_chain: epsilon must be positive");
  if (params.gamma <= Rational(0)) throw std::invalid_argument("current_to_chain: gamma must be positive");
  std::optional<Rational> r_x;
  if (auto girth = g.girth()) r_x = *girth / Rational(4);
  // nested_radius_bound is linear in R
  Rational R = params.epsilon / nested_radius_bound(1, params.gamma);
  if (r_x) R = min(R, *r_x);
  R /= Rational(2);
  for (int restart = 0; restart <= params.max_restarts; ++restart) {
    if (auto res = attempt(g, T, R)) {
      res->epsilon = params.epsilon;
      res->gamma = params.gamma;
      res->r_x = r_x;
      res->restarts = restart;
      return *res;
    }
    R /= Rational(2);
  }
  throw std::runtime_error("current_to_chain: cover still fails after " + std::to_string(params.max_restarts) +
                           " subdivisions");
}

namespace {

Current0 chain0_current(const MetricGraph& g, const GraphChain1& c) {
  return currents::chain_to_current(currents::boundary(g, c));
}

// Simplices of a chain grouped by edge and sorted by their lower parameter,
// so the ones meeting a sublevel set are found without a full scan.
class TermIndex {
 public:
  TermIndex(const MetricGraph& g, const GraphChain1& c) {
    for (const auto& [s, n] : c.terms()) {
      auto& e = edges_[s.edge];
      const Rational lo = min(s.from, s.to), hi = max(s.from, s.to);
      e.span = max(e.span, hi - lo);
      e.terms.push_back({lo, s, n});
      longest_ = max(longest_, (hi - lo) * g.edge(s.edge).length);
    }
    for (auto& [e, list] : edges_) {
      std::sort(list.terms.begin(), list.terms.end(),
                [](const Term& x, const Term& y) { return x.lo < y.lo; });
    }
  }

  const Rational& longest() const { return longest_; }

  // Terms whose parameter interval meets one of the arcs.
  GraphChain1 meeting(const graph::ArcSet& arcs) const {
    GraphChain1 out;
    std::set<GraphSimplex> seen;
    for (const auto& [e, intervals] : arcs.arcs()) {
      const auto it = edges_.find(e);
      if (it == edges_.end()) continue;
      const auto& list = it->second;
      for (const auto& iv : intervals) {
        auto first = std::lower_bound(list.terms.begin(), list.terms.end(), iv.from - list.span,
                                      [](const Term& t, const Rational& x) { return t.lo < x; });
        for (; first != list.terms.end() && first->lo <= iv.to; ++first) {
          const Rational hi = max(first->s.from, first->s.to);
          if (hi >= iv.from && seen.insert(first->s).second) out.add(first->s, first->n);
        }
      }
    }
    return out;
  }

 private:
  struct Term {
    Rational lo;
    GraphSimplex s;
    long long n;
  };
  struct EdgeTerms {
    std::vector<Term> terms;
    Rational span = 0;
  };
  std::map<int, EdgeTerms> edges_;
  Rational longest_ = 0;
};

// Checks d([c']|(X-U)) = [bc'] - <[c], d, r+> with c' the part of sd^m(c)
// meeting U = {d <= r} whose segments are shorter than alpha/2.
bool slice_to_boundary_holds(const MetricGraph& g, const TermIndex& c, const DistanceFunction& d,
                             const Rational& r, const Rational& alpha) {
  const Rational eps = alpha / Rational(2);
  // sd halves every segment, so m follows from the longest one; simplices of
  // sd^m(c) lie inside their parent, so parents missing U can be dropped first.
  Rational longest = c.longest();
  const graph::ArcSet U = d.sublevel(r);
  const GraphChain1 near = c.meeting(U);
  int m = 0;
  while (longest >= eps) {
    longest /= Rational(2);
    ++m;
  }
  // sd^m(near) restricted to simplices meeting U; a piece missing U has no
  // descendant meeting U, so those branches are pruned.
  auto meets = [&](int e, const Rational& a, const Rational& b) {
    const auto it = U.arcs().find(e);
    if (it == U.arcs().end()) return false;
    const Rational lo = min(a, b), hi = max(a, b);
    return std::any_of(it->second.begin(), it->second.end(),
                       [&](const graph::Interval& iv) { return iv.from <= hi && lo <= iv.to; });
  };
  GraphChain1 part;
  auto descend = [&](auto&& self, const GraphSimplex& s, long long n, int level) -> void {
    if (!meets(s.edge, s.from, s.to)) return;
    if (level == m) {
      part.add(s, n);
      return;
    }
    const Rational mid = (s.from + s.to) / Rational(2);
    self(self, GraphSimplex{s.edge, mid, s.to}, n, level + 1);
    self(self, GraphSimplex{s.edge, mid, s.from}, -n, level + 1);
  };
  for (const auto& [s, n] : near.terms()) descend(descend, s, n, 0);
  const ArcSet outside = U.complement(g);
  const Current0 lhs = currents::boundary1(g, currents::restrict(currents::chain_to_current(part), outside));
  // slices are linear and vanish on simplices missing U, so the near part suffices
  const Current0 rhs = chain0_current(g, part) - currents::slice(currents::chain_to_current(near), d, r);
  return lhs == rhs;
}

}  // namespace

Check check_certificate(const MetricGraph& g, const Current1& T, const Result& res) {
  Check out;
  auto record = [&](std::string id, bool pass, std::string detail = {}) {
    if (!pass) out.pass = false;
    out.items.push_back({std::move(id), pass, std::move(detail)});
  };
  record("chain_represents_current", currents::chain_to_current(res.chain) == T);
  record("boundary_matches", chain0_current(g, res.chain) == currents::boundary1(g, T));
  record("radius_recipe", nested_radius_bound(res.radius, res.gamma) < res.epsilon,
         "2(R + F(2R + 2F(2R))) = " + nested_radius_bound(res.radius, res.gamma).to_string());
  if (res.r_x) record("radius_below_contractibility", res.radius < *res.r_x);
  record("remainder_zero", res.remainder_zero);
  Current1 sum;
  const TermIndex index(g, res.chain);
  const bool cycle = currents::boundary1(g, T).empty();
  for (std::size_t k = 0; k < res.steps.size(); ++k) {
    const Step& st = res.steps[k];
    const std::string tag = "step" + std::to_string(k) + ".";
    const DistanceFunction d(g, st.center);
    sum += st.piece;
    record(tag + "ball_tree", d.ball_is_tree(st.ball_radius));
    record(tag + "radii_order", st.need < st.r_bar && st.r_bar < st.ball_radius && st.alpha > Rational(0) &&
                                    st.alpha * Rational(4) == st.ball_radius - st.r_bar);
    record(tag + "radius_window", st.r_bar + st.alpha < st.r && st.r < st.r_bar + Rational(3) * st.alpha,
           "r = " + st.r.to_string());
    record(tag + "piece_in_ball", currents::restrict(st.piece, d.sublevel(st.r)) == st.piece);
    record(tag + "filling_zero", st.filling_zero && currents::chain_to_current(st.chain) == st.piece);
    record(tag + "chain_boundary", chain0_current(g, st.chain) == currents::boundary1(g, st.piece));
    const Rational reach = reach_of(g, d, st.piece, currents::boundary1(g, st.piece));
    record(tag + "diameter", reach == st.reach && Rational(2) * reach == st.diameter_bound &&
                                 st.diameter_bound < res.epsilon,
           "diameter bound " + st.diameter_bound.to_string());
    if (cycle) record(tag + "slice_to_boundary", slice_to_boundary_holds(g, index, d, st.r, st.alpha));
  }
  record("pieces_sum_to_current", sum == T);
  return out;
}

}  // namespace ichom::reconstruction
