#pragma once

// Finite metric graphs with rational edge lengths, measured either plainly or
// in units of pi. Points are a vertex or an interior parameter s in (0,1) of
// an edge, running from tail (s = 0) to head (s = 1).

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ichom/certified.hpp"
#include "ichom/rational.hpp"

namespace ichom::graph {

enum class LengthUnit { Plain, Pi };

struct Edge {
  int tail = 0;
  int head = 0;
  Rational length;      // in units of the graph
  long long circle = 0;  // index n when the edge is the loop L_n of the earring model
};

class GraphPoint {
 public:
  static GraphPoint vertex(int v);
  // s = 0 and s = 1 normalize to the end vertices.
  static GraphPoint on_edge(const class MetricGraph& g, int edge, const Rational& s);

  bool is_vertex() const { return edge_ < 0; }
  int vertex_index() const { return vertex_; }
  int edge() const { return edge_; }
  const Rational& parameter() const { return s_; }

  std::string to_string() const;
  friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
  friend std::strong_ordering operator<=>(const GraphPoint& a, const GraphPoint& b);

 private:
  int vertex_ = -1;
  int edge_ = -1;
  Rational s_ = 0;
};

class MetricGraph {
 public:
  MetricGraph(int vertex_count, std::vector<Edge> edges, LengthUnit unit, int basepoint = 0);

  // One vertex with loops L_1..L_N, L_n of length 2/n (times pi).
  static MetricGraph earring(int circles);
  // A single circle of the given length split into `pieces` edges.
  static MetricGraph circle(const Rational& length, int pieces = 1, LengthUnit unit = LengthUnit::Plain);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const& { return edges_; }
  std::vector<Edge> edges() && { return std::move(edges_); }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  LengthUnit unit() const { return unit_; }
  int basepoint() const { return basepoint_; }

  // Edge carrying the loop L_n, if any.
  std::optional<int> edge_for_circle(long long n) const;
  CertifiedReal to_real(const Rational& len, const PiEnclosure& pi = PiEnclosure::standard()) const;
  // Length of the shortest embedded cycle; nullopt for a forest.
  std::optional<Rational> girth() const;

  std::string unit_name() const { return unit_ == LengthUnit::Pi ? "pi" : "plain"; }

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  LengthUnit unit_;
  int basepoint_;
};

struct Interval {
  Rational from;
  Rational to;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of closed parameter intervals per edge, merged and sorted.
class ArcSet {
 public:
  static ArcSet whole(const MetricGraph& g);
  static ArcSet edge_set(int edge);

  void add(int edge, Rational from, Rational to);
  const std::map<int, std::vector<Interval>>& arcs() const& { return arcs_; }
  std::map<int, std::vector<Interval>> arcs() && { return std::move(arcs_); }
  bool contains(const MetricGraph& g, const GraphPoint& p) const;
  bool empty() const { return arcs_.empty(); }
  // Closure of the complement.
  ArcSet complement(const MetricGraph& g) const;

 private:
  std::map<int, std::vector<Interval>> arcs_;
};

// Geodesic segment along one edge, parameter `from` to `to`.
struct EdgeSegment {
  int edge;
  Rational from;
  Rational to;
};

// Length-metric distance to a fixed point; exact.
class DistanceFunction {
 public:
  DistanceFunction(const MetricGraph& g, GraphPoint center);

  const GraphPoint& center() const { return center_; }
  const MetricGraph& graph() const { return *g_; }
  const Rational& vertex_distance(int v) const { return dist_.at(static_cast<std::size_t>(v)); }

  Rational operator()(const GraphPoint& p) const;
  Rational at(int edge, const Rational& s) const;
  // Parameters in [0,1] where two branches of the distance on the edge cross,
  // together with the center parameter on its own edge.
  std::vector<Rational> breakpoints(int edge) const;
  // max of the distance over [from, to] on an edge.
  Rational max_on(int edge, const Rational& from, const Rational& to) const;
  // min of the distance over [from, to] on an edge.
  Rational min_on(int edge, const Rational& from, const Rational& to) const;

  ArcSet sublevel(const Rational& r) const;    // {d <= r}
  ArcSet strict_sublevel_closure(const Rational& r) const;  // closure of {d < r}
  // Values where the level set {d = r} is not a finite set of transverse
  // crossings in edge interiors: 0, vertex distances and branch crossings.
  std::vector<Rational> critical_values() const;

  // Shortest path from the center, as consecutive segments.
  std::vector<EdgeSegment> geodesic_to(const GraphPoint& p) const;

  // Whether the closed ball of radius R contains no embedded cycle.
  bool ball_is_tree(const Rational& R) const;

 private:
  struct Pred {
    int edge = -1;
    Rational from, to;   // parameters along `edge` towards the vertex
    int previous = -1;   // previous vertex, -1 when reached from the center
  };
  std::vector<EdgeSegment> path_to_vertex(int v) const;

  const MetricGraph* g_;
  GraphPoint center_;
  std::vector<Rational> dist_;
  std::vector<Pred> pred_;
};

}  // namespace ichom::graph
