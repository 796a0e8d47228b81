#pragma once

// Integral 0- and 1-currents on metric graphs. A 1-current is an integer
// step function of the edge parameter on each edge, positive weight meaning
// the direction tail -> head; a 0-current is a finite sum of point masses.

#include <map>
#include <set>
#include <string>
#include <variant>
#include <utility>
#include <vector>

#include "ichom/certified.hpp"
#include "ichom/graph.hpp"
#include "ichom/rational.hpp"

namespace ichom::currents {

using graph::ArcSet;
using graph::DistanceFunction;
using graph::GraphPoint;
using graph::MetricGraph;

class Current0 {
 public:
  void add(const GraphPoint& p, long long weight);
  const std::map<GraphPoint, long long>& points() const& { return points_; }
  std::map<GraphPoint, long long> points() && { return std::move(points_); }
  bool empty() const { return points_.empty(); }
  long long total_weight() const;
  long long mass() const;

  Current0& operator+=(const Current0& o);
  Current0& operator-=(const Current0& o);
  friend Current0 operator+(Current0 a, const Current0& b) { return a += b; }
  friend Current0 operator-(Current0 a, const Current0& b) { return a -= b; }
  friend bool operator==(const Current0&, const Current0&) = default;

  std::string to_string() const;

 private:
  std::map<GraphPoint, long long> points_;
};

struct Piece {
  Rational from;  // from < to
  Rational to;
  long long weight;
  friend bool operator==(const Piece&, const Piece&) = default;
};

class Current1 {
 public:
  // Adds weight * [from -> to] on an edge; from > to reverses orientation.
  void add(int edge, const Rational& from, const Rational& to, long long weight);
  // Whole edge, tail to head.
  void add_edge(int edge, long long weight) { add(edge, 0, 1, weight); }

  const std::map<int, std::vector<Piece>>& edges() const& { return edges_; }

  std::map<int, std::vector<Piece>> edges() && { return std::move(edges_); }
  bool empty() const { return edges_.empty(); }
  long long weight_at(int edge, const Rational& s) const;  // s not a breakpoint
  // Parameters where the multiplicity changes, per edge, including support ends.
  std::vector<Rational> breakpoints(int edge) const;
  ArcSet support() const;  // closure of the support

  Current1& operator+=(const Current1& o);
  Current1& operator-=(const Current1& o);
  friend Current1 operator+(Current1 a, const Current1& b) { return a += b; }
  friend Current1 operator-(Current1 a, const Current1& b) { return a -= b; }
  friend Current1 operator*(long long k, const Current1& c);
  friend bool operator==(const Current1&, const Current1&) = default;

  std::string to_string() const;

 private:
  std::map<int, std::vector<Piece>> edges_;
};

Current0 boundary1(const MetricGraph& g, const Current1& T);

// Coefficient of the graph length unit.
Rational mass_coefficient(const MetricGraph& g, const Current1& T);
CertifiedReal mass(const MetricGraph& g, const Current1& T, const PiEnclosure& pi = PiEnclosure::standard());

Current1 restrict(const Current1& T, const ArcSet& A);
Current0 restrict(const MetricGraph& g, const Current0& T, const ArcSet& A);

// Piecewise-affine map of graphs. Each source edge [0,1] is cut into pieces
// that are either constant or affine onto a parameter range of a target edge.
struct ConstantPiece {
  GraphPoint value;
};
struct AffinePiece {
  int target_edge;
  Rational target_from;  // image of the piece start
  Rational target_to;    // image of the piece end; differs from target_from
};
struct MapPiece {
  Rational from;
  Rational to;
  std::variant<ConstantPiece, AffinePiece> kind;
};

class GraphMap {
 public:
  // Throws on pieces that do not tile [0,1], discontinuities, or vertex
  // images that disagree with the edge ends.
  GraphMap(const MetricGraph& source, const MetricGraph& target, std::vector<GraphPoint> vertex_images,
           std::vector<std::vector<MapPiece>> edge_pieces);

  static GraphMap identity(const MetricGraph& g);

  const MetricGraph& source() const { return *src_; }
  const MetricGraph& target() const { return *dst_; }
  GraphPoint operator()(const GraphPoint& p) const;

  Current1 push_forward(const Current1& T) const;
  Current0 push_forward(const Current0& T) const;

 private:
  GraphPoint piece_value(int edge, const MapPiece& piece, const Rational& s) const;

  const MetricGraph* src_;
  const MetricGraph* dst_;
  std::vector<GraphPoint> vertex_images_;
  std::vector<std::vector<MapPiece>> edge_pieces_;
};

// The circle graph L_n alone: one vertex, one loop of length 2/n pi.
MetricGraph circle_model(long long n);
// p_n : earring -> L_n, collapsing every other circle to the basepoint.
GraphMap earring_retraction(const MetricGraph& earring, const MetricGraph& circle, long long n);
// i_n : L_n -> earring.
GraphMap earring_inclusion(const MetricGraph& circle, const MetricGraph& earring, long long n);

// Whether r avoids the critical values of d and the distances of the
// multiplicity breakpoints of T.
bool is_generic_radius(const DistanceFunction& d, const Current1& T, const Rational& r);

// <T, d, r+> computed from the sign changes of the indicator of {d <= r}
// along the support of T. Throws std::domain_error when r is not generic.
Current0 slice(const Current1& T, const DistanceFunction& d, const Rational& r);
// The defining expression d(T restricted) - (dT) restricted, for comparison.
Current0 slice_by_definition(const MetricGraph& g, const Current1& T, const DistanceFunction& d, const Rational& r);

// Affine singular 1-simplex running along one edge.
struct GraphSimplex {
  int edge;
  Rational from;
  Rational to;
  friend auto operator<=>(const GraphSimplex&, const GraphSimplex&) = default;
};

class GraphChain0 {
 public:
  void add(const GraphPoint& p, long long n);
  const std::map<GraphPoint, long long>& terms() const& { return terms_; }
  std::map<GraphPoint, long long> terms() && { return std::move(terms_); }
  bool empty() const { return terms_.empty(); }
  friend bool operator==(const GraphChain0&, const GraphChain0&) = default;

 private:
  std::map<GraphPoint, long long> terms_;
};

class GraphChain1 {
 public:
  void add(const GraphSimplex& s, long long n);
  // Concatenated geodesic segments, each a separate simplex.
  void add_path(const std::vector<graph::EdgeSegment>& path, long long n);
  const std::map<GraphSimplex, long long>& terms() const& { return terms_; }
  std::map<GraphSimplex, long long> terms() && { return std::move(terms_); }
  bool empty() const { return terms_.empty(); }
  GraphChain1& operator+=(const GraphChain1& o);
  friend bool operator==(const GraphChain1&, const GraphChain1&) = default;

 private:
  std::map<GraphSimplex, long long> terms_;
};

GraphChain0 boundary(const MetricGraph& g, const GraphChain1& c);
// sd[p, q] = [m, q] - [m, p] with m the midpoint.
GraphChain1 subdivide(const GraphChain1& c, int m = 1);

Current1 chain_to_current(const GraphChain1& c);
Current0 chain_to_current(const GraphChain0& c);
GraphChain0 current_to_chain0(const Current0& T);

struct WindingVector {
  std::map<long long, long long> entries;  // circle index -> multiplicity, nonzero only

  bool is_zero() const { return entries.empty(); }
  long long max_abs() const;
  bool divisible_by_all(const std::set<long long>& divisors) const;
};

// Requires dT = 0 on an earring model graph.
WindingVector winding_vector(const MetricGraph& g, const Current1& T);

}  // namespace ichom::currents
