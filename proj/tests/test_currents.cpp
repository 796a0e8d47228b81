#include <doctest.h>

#include <algorithm>

#include "ichom/currents.hpp"
#include "ichom/generators.hpp"

using namespace ichom;
using namespace ichom::currents;

namespace {

// <T, d, r+> straight from d(T|{d<=r}) - (dT)|{d<=r}, with restriction done
// by sampling the weight at midpoints of a common partition.
Current0 slice_oracle(const MetricGraph& g, const Current1& T, const DistanceFunction& d, const Rational& r) {
  Current1 inside;
  for (const auto& [e, pieces] : T.edges()) {
    std::vector<Rational> cuts = T.breakpoints(e);
    for (const auto& b : d.breakpoints(e)) cuts.push_back(b);
    cuts.push_back(0);
    cuts.push_back(1);
    // between these cuts d is affine, so each level crossing is a solved equation
    std::sort(cuts.begin(), cuts.end());
    const std::vector<Rational> base = cuts;
    for (std::size_t i = 0; i + 1 < base.size(); ++i) {
      const Rational da = d.at(e, base[i]), db = d.at(e, base[i + 1]);
      if (da != db && min(da, db) < r && r < max(da, db))
        cuts.push_back(base[i] + (r - da) / (db - da) * (base[i + 1] - base[i]));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
      const long long w = T.weight_at(e, mid);
      if (w != 0 && d.at(e, mid) <= r) inside.add(e, cuts[i], cuts[i + 1], w);
    }
  }
  Current0 dT_in;
  for (const auto& [p, w] : boundary1(g, T).points()) {
    if (d(p) <= r) dT_in.add(p, w);
  }
  return boundary1(g, inside) - dT_in;
}

}  // namespace

TEST_CASE("current arithmetic and boundary") {
  const MetricGraph g = MetricGraph::circle(Rational(3), 3);
  Current1 T;
  T.add(0, Rational(1, 4), Rational(3, 4), 2);
  CHECK(T.weight_at(0, Rational(1, 2)) == 2);
  CHECK(T.weight_at(0, Rational(1, 8)) == 0);
  Current1 R;
  R.add(0, Rational(3, 4), Rational(1, 4), 2);
  CHECK((T + R).empty());
  CHECK(R == -1 * T);
  const Current0 b = boundary1(g, T);
  CHECK(b.total_weight() == 0);
  CHECK(b.mass() == 4);
  CHECK(mass_coefficient(g, T) == Rational(1));
  // a full cycle has no boundary
  Current1 C;
  for (int e = 0; e < 3; ++e) C.add_edge(e, 1);
  CHECK(boundary1(g, C).empty());
  CHECK(mass_coefficient(g, C) == Rational(3));
  const auto bp = T.breakpoints(0);
  CHECK(bp == std::vector<Rational>{Rational(1, 4), Rational(3, 4)});
}

TEST_CASE("mass on the earring is a certified multiple of pi") {
  const MetricGraph g = MetricGraph::earring(3);
  Current1 T;
  T.add_edge(*g.edge_for_circle(1), 1);
  T.add_edge(*g.edge_for_circle(2), 2);
  CHECK(mass_coefficient(g, T) == Rational(4));
  const CertifiedReal m = mass(g, T);
  // 4 pi = 12.566370614...
  CHECK(m.contains(Rational(6283185307, 500000000)));
  CHECK(m.width() <= Rational(1, 10000000));
}

TEST_CASE("restriction") {
  const MetricGraph g = MetricGraph::circle(Rational(2), 2);
  Current1 T;
  T.add_edge(0, 1);
  T.add_edge(1, 1);
  ArcSet A;
  A.add(0, Rational(1, 2), 1);
  const Current1 TA = restrict(T, A);
  CHECK(TA.weight_at(0, Rational(3, 4)) == 1);
  CHECK(TA.weight_at(0, Rational(1, 4)) == 0);
  CHECK(TA.weight_at(1, Rational(1, 2)) == 0);
  CHECK(restrict(T, ArcSet::whole(g)) == T);
}

TEST_CASE("slice agrees with its definition") {
  gen::Rng rng(31);
  const MetricGraph earring = MetricGraph::earring(3);
  const MetricGraph circle = MetricGraph::circle(Rational(2), 3);
  int trials = 0;
  for (const MetricGraph* g : {&earring, &circle}) {
    for (int i = 0; i < 20; ++i) {
      const Current1 T = gen::current(rng, *g, 4);
      const int e = static_cast<int>(gen::integer(rng, 0, g->edge_count() - 1));
      const DistanceFunction d(*g, GraphPoint::on_edge(*g, e, gen::rational(rng, 0, 1, 7)));
      const Rational r = gen::rational(rng, Rational(1, 13), 2, 97);
      if (!is_generic_radius(d, T, r)) {
        CHECK_THROWS_AS(slice(T, d, r), std::domain_error);
        continue;
      }
      const Current0 s = slice(T, d, r);
      CHECK(s == slice_by_definition(*g, T, d, r));
      CHECK(s == slice_oracle(*g, T, d, r));
      ++trials;
    }
  }
  CHECK(trials >= 20);
}

TEST_CASE("slice of a circle at a generic radius") {
  const MetricGraph g = MetricGraph::circle(Rational(4), 1);
  Current1 T;
  T.add_edge(0, 1);
  const DistanceFunction d(g, GraphPoint::vertex(0));
  const Current0 s = slice(T, d, 1);
  // {d <= 1} is an arc around the vertex: the slice is +[head side] - [tail side]
  CHECK(s.total_weight() == 0);
  CHECK(s.mass() == 2);
  CHECK(s.points().count(GraphPoint::on_edge(g, 0, Rational(1, 4))) == 1);
  CHECK(s.points().at(GraphPoint::on_edge(g, 0, Rational(1, 4))) == 1);
  CHECK(s.points().at(GraphPoint::on_edge(g, 0, Rational(3, 4))) == -1);
  CHECK_FALSE(is_generic_radius(d, T, 2));
  CHECK_THROWS_AS(slice(T, d, 2), std::domain_error);
}

TEST_CASE("earring retraction and inclusion") {
  const MetricGraph g = MetricGraph::earring(4);
  for (long long n = 1; n <= 4; ++n) {
    const MetricGraph L = circle_model(n);
    const GraphMap p = earring_retraction(g, L, n);
    const GraphMap i = earring_inclusion(L, g, n);
    Current1 loop;
    loop.add_edge(0, 3);
    CHECK(p.push_forward(i.push_forward(loop)) == loop);
    Current1 other;
    for (long long m = 1; m <= 4; ++m) {
      if (m != n) other.add_edge(*g.edge_for_circle(m), 1);
    }
    CHECK(p.push_forward(other).empty());
    CHECK(p(GraphPoint::on_edge(g, *g.edge_for_circle(n), Rational(1, 3))) == GraphPoint::on_edge(L, 0, Rational(1, 3)));
  }
  gen::Rng rng(32);
  for (int k = 0; k < 20; ++k) {
    const Current1 T = gen::current(rng, g, 4);
    for (long long n = 1; n <= 4; ++n) {
      const MetricGraph L = circle_model(n);
      const GraphMap p = earring_retraction(g, L, n);
      CHECK(boundary1(L, p.push_forward(T)) == p.push_forward(boundary1(g, T)));
    }
  }
}

TEST_CASE("graph map validation") {
  const MetricGraph g = MetricGraph::circle(Rational(2), 1);
  const std::vector<GraphPoint> verts{GraphPoint::vertex(0)};
  // gap in the tiling
  CHECK_THROWS_AS(GraphMap(g, g, verts, {{MapPiece{0, Rational(1, 2), ConstantPiece{GraphPoint::vertex(0)}}}}),
                  std::invalid_argument);
  // endpoint disagrees with the vertex image
  CHECK_THROWS_AS(GraphMap(g, g, verts, {{MapPiece{0, 1, AffinePiece{0, Rational(1, 4), Rational(3, 4)}}}}),
                  std::invalid_argument);
  // discontinuity between pieces
  CHECK_THROWS_AS(GraphMap(g, g, verts,
                           {{MapPiece{0, Rational(1, 2), AffinePiece{0, 0, Rational(1, 2)}},
                             MapPiece{Rational(1, 2), 1, AffinePiece{0, Rational(3, 5), 1}}}}),
                  std::invalid_argument);
  const GraphMap id = GraphMap::identity(g);
  Current1 T;
  T.add(0, Rational(1, 3), Rational(2, 3), 5);
  CHECK(id.push_forward(T) == T);
  // the doubling map wraps the circle twice
  const GraphMap dbl(g, g, verts,
                     {{MapPiece{0, Rational(1, 2), AffinePiece{0, 0, 1}}, MapPiece{Rational(1, 2), 1, AffinePiece{0, 0, 1}}}});
  Current1 full;
  full.add_edge(0, 1);
  CHECK(dbl.push_forward(full) == 2 * full);
}

TEST_CASE("chains to currents") {
  const MetricGraph g = MetricGraph::circle(Rational(3), 3);
  gen::Rng rng(33);
  for (int i = 0; i < 50; ++i) {
    const GraphChain1 c = gen::pl_chain(rng, g, 4);
    CHECK(chain_to_current(boundary(g, c)) == boundary1(g, chain_to_current(c)));
    for (int m = 1; m <= 3; ++m) {
      CHECK(chain_to_current(subdivide(c, m)) == chain_to_current(c));
      CHECK(boundary(g, subdivide(c, m)) == boundary(g, c));
    }
  }
  GraphChain1 s;
  s.add({0, 0, 1}, 1);
  GraphChain1 expect;
  expect.add({0, Rational(1, 2), 1}, 1);
  expect.add({0, Rational(1, 2), 0}, -1);
  CHECK(subdivide(s) == expect);
  GraphChain1 flat;
  flat.add({1, Rational(1, 3), Rational(1, 3)}, 4);
  CHECK(chain_to_current(flat).empty());
  Current0 z;
  z.add(GraphPoint::vertex(1), 3);
  CHECK(chain_to_current(current_to_chain0(z)) == z);
}

TEST_CASE("winding vectors") {
  const MetricGraph g = MetricGraph::earring(4);
  Current1 T;
  T.add_edge(*g.edge_for_circle(1), 2);
  T.add_edge(*g.edge_for_circle(3), -6);
  const WindingVector w = winding_vector(g, T);
  CHECK(w.entries == std::map<long long, long long>{{1, 2}, {3, -6}});
  CHECK(w.max_abs() == 6);
  CHECK(w.divisible_by_all({1, 2}));
  CHECK_FALSE(w.divisible_by_all({3}));
  CHECK(winding_vector(g, Current1()).is_zero());
  Current1 open;
  open.add(*g.edge_for_circle(2), 0, Rational(1, 2), 1);
  CHECK_THROWS_AS(winding_vector(g, open), std::invalid_argument);
  gen::Rng rng(34);
  for (int i = 0; i < 20; ++i) {
    const Current1 C = gen::cycle(rng, g, 3);
    CHECK(boundary1(g, C).empty());
    const WindingVector v = winding_vector(g, C);
    for (const auto& [n, k] : v.entries) CHECK(C.weight_at(*g.edge_for_circle(n), Rational(1, 2)) == k);
  }
}
