#include "ichom/serialize.hpp"

#include <stdexcept>

namespace ichom::serialize {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  return j.at(key);
}

long long integer(const Json& j, const std::string& what) {
  require(j.is_number_integer(), what + " must be an integer");
  return j.get<long long>();
}

}  // namespace

Json rational(const Rational& q) { return q.to_string(); }

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  require(j.is_string(), "rational must be a string \"p/q\" or an integer");
  return Rational::parse(j.get<std::string>());
}

Json chain(const chains::Chain& c) {
  Json out = Json::array();
  for (const auto& [s, n] : c.terms()) {
    Json verts = Json::array();
    for (const auto& p : s) {
      Json coords = Json::array();
      for (const auto& x : p) coords.push_back(rational(x));
      verts.push_back(coords);
    }
    out.push_back({{"coefficient", n}, {"vertices", verts}});
  }
  return out;
}

chains::Chain parse_chain(const Json& j) {
  require(j.is_array(), "chain must be a list of terms");
  std::optional<chains::Chain> out;
  for (const auto& term : j) {
    const long long n = integer(field(term, "coefficient"), "coefficient");
    const Json& vs = field(term, "vertices");
    require(vs.is_array() && !vs.empty(), "simplex needs a nonempty vertex list");
    chains::Simplex s;
    for (const auto& v : vs) {
      require(v.is_array(), "vertex must be a coordinate list");
      chains::Point p;
      for (const auto& x : v) p.push_back(parse_rational(x));
      s.push_back(std::move(p));
    }
    if (!out) out.emplace(static_cast<int>(s.size()) - 1);
    out->add(s, n);
  }
  return out ? *out : chains::Chain(0);
}

Json graph_spec(const graph::MetricGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json je = {{"tail", e.tail}, {"head", e.head}, {"length", rational(e.length)}};
    if (e.circle) je["circle"] = e.circle;
    edges.push_back(je);
  }
  return {{"kind", "graph"},
          {"vertices", g.vertex_count()},
          {"unit", g.unit_name()},
          {"basepoint", g.basepoint()},
          {"edges", edges}};
}

namespace {

graph::LengthUnit parse_unit(const Json& j) {
  if (!j.contains("unit")) return graph::LengthUnit::Plain;
  const std::string u = field(j, "unit").get<std::string>();
  require(u == "plain" || u == "pi", "unit must be \"plain\" or \"pi\"");
  return u == "pi" ? graph::LengthUnit::Pi : graph::LengthUnit::Plain;
}

}  // namespace

graph::MetricGraph parse_graph(const Json& j) {
  require(j.is_object(), "graph spec must be an object");
  const Json& kind = field(j, "kind");
  require(kind.is_string(), "graph kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "earring") return graph::MetricGraph::earring(static_cast<int>(integer(field(j, "circles"), "circles")));
  if (k == "circle") {
    const int pieces = j.contains("pieces") ? static_cast<int>(integer(j.at("pieces"), "pieces")) : 1;
    return graph::MetricGraph::circle(parse_rational(field(j, "length")), pieces, parse_unit(j));
  }
  require(k == "graph", "unknown graph kind '" + k + "'");
  std::vector<graph::Edge> edges;
  const Json& je = field(j, "edges");
  require(je.is_array(), "edges must be a list");
  for (const auto& e : je) {
    graph::Edge ed;
    ed.tail = static_cast<int>(integer(field(e, "tail"), "tail"));
    ed.head = static_cast<int>(integer(field(e, "head"), "head"));
    ed.length = parse_rational(field(e, "length"));
    if (e.contains("circle")) ed.circle = integer(e.at("circle"), "circle");
    edges.push_back(std::move(ed));
  }
  const int base = j.contains("basepoint") ? static_cast<int>(integer(j.at("basepoint"), "basepoint")) : 0;
  return graph::MetricGraph(static_cast<int>(integer(field(j, "vertices"), "vertices")), std::move(edges),
                            parse_unit(j), base);
}

Json point(const graph::GraphPoint& p) {
  if (p.is_vertex()) return {{"vertex", p.vertex_index()}};
  return {{"edge", p.edge()}, {"s", rational(p.parameter())}};
}

graph::GraphPoint parse_point(const graph::MetricGraph& g, const Json& j) {
  if (j.contains("vertex")) {
    const long long v = integer(j.at("vertex"), "vertex");
    require(v >= 0 && v < g.vertex_count(), "vertex out of range");
    return graph::GraphPoint::vertex(static_cast<int>(v));
  }
  return graph::GraphPoint::on_edge(g, static_cast<int>(integer(field(j, "edge"), "edge")),
                                    parse_rational(field(j, "s")));
}

Json current1(const graph::MetricGraph& g, const currents::Current1& T) {
  Json edges = Json::array();
  for (const auto& [e, steps] : T.edges()) {
    Json ivs = Json::array();
    for (const auto& p : steps) {
      ivs.push_back({{"from", rational(p.from)}, {"to", rational(p.to)}, {"weight", p.weight}, {"orientation", 1}});
    }
    Json je = {{"edge", e}, {"intervals", ivs}};
    if (g.edge(e).circle) je["circle"] = g.edge(e).circle;
    edges.push_back(je);
  }
  return {{"edges", edges}};
}

currents::Current1 parse_current1(const graph::MetricGraph& g, const Json& j) {
  currents::Current1 T;
  const Json& edges = field(j, "edges");
  require(edges.is_array(), "edges must be a list");
  for (const auto& je : edges) {
    int e = -1;
    if (je.contains("edge")) {
      e = static_cast<int>(integer(je.at("edge"), "edge"));
    } else {
      const long long n = integer(field(je, "circle"), "circle");
      auto found = g.edge_for_circle(n);
      require(found.has_value(), "graph has no circle L" + std::to_string(n));
      e = *found;
    }
    require(e >= 0 && e < g.edge_count(), "edge index out of range");
    const Json& ivs = field(je, "intervals");
    require(ivs.is_array(), "intervals must be a list");
    for (const auto& iv : ivs) {
      const long long w = integer(field(iv, "weight"), "weight");
      const long long o = iv.contains("orientation") ? integer(iv.at("orientation"), "orientation") : 1;
      require(o == 1 || o == -1, "orientation must be 1 or -1");
      const Rational from = parse_rational(field(iv, "from"));
      const Rational to = parse_rational(field(iv, "to"));
      require(from < to, "interval needs from < to");
      T.add(e, from, to, w * o);
    }
  }
  return T;
}

Json current0(const currents::Current0& T) {
  Json out = Json::array();
  for (const auto& [p, w] : T.points()) out.push_back({{"point", point(p)}, {"weight", w}});
  return out;
}

Json graph_chain(const currents::GraphChain1& c) {
  Json out = Json::array();
  for (const auto& [s, n] : c.terms()) {
    out.push_back({{"coefficient", n}, {"edge", s.edge}, {"from", rational(s.from)}, {"to", rational(s.to)}});
  }
  return out;
}

Json reconstruction(const graph::MetricGraph& g, const reconstruction::Result& r) {
  Json steps = Json::array();
  for (const auto& st : r.steps) {
    steps.push_back({{"center", point(st.center)},
                     {"ball_radius", rational(st.ball_radius)},
                     {"uncovered_sup", rational(st.need)},
                     {"r_bar", rational(st.r_bar)},
                     {"alpha", rational(st.alpha)},
                     {"slice_radius", rational(st.r)},
                     {"slice", current0(st.slice)},
                     {"piece", current1(g, st.piece)},
                     {"chain", graph_chain(st.chain)},
                     {"reach", rational(st.reach)},
                     {"diameter_bound", rational(st.diameter_bound)},
                     {"filling", st.filling_zero ? "0" : "nonzero"}});
  }
  Json out = {{"epsilon", rational(r.epsilon)},
              {"gamma", rational(r.gamma)},
              {"F", "2*gamma*t"},
              {"radius", rational(r.radius)},
              {"restarts", r.restarts},
              {"remainder_zero", r.remainder_zero},
              {"unit", g.unit_name()},
              {"steps", steps},
              {"chain", graph_chain(r.chain)}};
  if (r.r_x) out["r_x"] = rational(*r.r_x);
  return out;
}

Json certificate_check(const reconstruction::Check& c) {
  Json items = Json::array();
  for (const auto& it : c.items) {
    Json ji = {{"id", it.id}, {"pass", it.pass}};
    if (!it.detail.empty()) ji["detail"] = it.detail;
    items.push_back(ji);
  }
  return {{"pass", c.pass}, {"checks", items}};
}

Json recursion_report(const earring::RecursionReport& r) {
  return {{"identity", "sigma_{n-1} = c_{n-1} . sigma_n . ... . sigma_n"},
          {"parameters", {{"n", r.n}, {"depth", r.depth}}},
          {"samples", r.samples},
          {"resolved", r.resolved},
          {"max_discrepancy", rational(r.max_discrepancy)},
          {"max_slack_used", rational(r.max_slack_used)},
          {"pass", r.pass}};
}

Json commutator_report(const freegroup::Word& w, const freegroup::CommutatorDecision& d) {
  Json out = {{"word", w.to_string()}, {"is_commutator", d.is_commutator}};
  if (d.witness) {
    const auto& x = *d.witness;
    out["witness"] = {{"A", x.a.to_string()},      {"B", x.b.to_string()}, {"C", x.c.to_string()},
                      {"rotation", x.rotation},    {"x", x.x.to_string()}, {"y", x.y.to_string()},
                      {"conjugator", x.conjugator.to_string()}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

namespace {

homology::IntMatrix parse_matrix(const Json& j, std::size_t& cols_out) {
  require(j.is_array(), "boundary matrix must be a list of rows");
  const std::size_t rows = j.size();
  std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
  homology::IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require(j[r].is_array() && j[r].size() == cols, "boundary matrix rows have unequal lengths");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Integer(std::to_string(integer(j[r][c], "matrix entry")));
  }
  cols_out = cols;
  return m;
}

}  // namespace

homology::ChainComplex parse_complex(const Json& j) {
  const Json* facets = nullptr;
  if (j.is_array()) facets = &j;
  if (j.is_object() && j.contains("facets")) facets = &j.at("facets");
  if (facets) {
    require(facets->is_array(), "facets must be a list");
    std::vector<std::vector<int>> fs;
    for (const auto& f : *facets) {
      require(f.is_array(), "facet must be a list of vertex indices");
      std::vector<int> v;
      for (const auto& x : f) v.push_back(static_cast<int>(integer(x, "vertex index")));
      fs.push_back(std::move(v));
    }
    require(!fs.empty(), "complex needs at least one facet");
    auto cc = homology::SimplicialComplex::from_facets(fs).chain_complex();
    cc.validate();
    return cc;
  }
  const Json& bs = field(j, "boundaries");
  require(bs.is_array(), "boundaries must be a list of matrices");
  homology::ChainComplex cc;
  if (j.contains("sizes")) {
    for (const auto& s : j.at("sizes")) {
      const long long n = integer(s, "size");
      require(n >= 0, "chain group sizes must be non-negative");
      cc.sizes.push_back(static_cast<std::size_t>(n));
    }
  }
  for (const auto& mj : bs) {
    std::size_t cols = 0;
    cc.boundary.push_back(parse_matrix(mj, cols));
  }
  if (cc.sizes.empty()) {
    require(!cc.boundary.empty(), "give \"sizes\" when there are no boundary matrices");
    cc.sizes.push_back(cc.boundary[0].rows());
    for (const auto& m : cc.boundary) cc.sizes.push_back(m.cols());
  }
  cc.validate();
  return cc;
}

Json homology_groups(const std::vector<homology::HomologyGroup>& groups) {
  Json out = Json::array();
  for (const auto& g : groups) {
    Json tors = Json::array();
    for (const auto& t : g.torsion) tors.push_back(t.get_str());
    out.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", tors}, {"group", g.to_string()}});
  }
  return out;
}

}  // namespace ichom::serialize
