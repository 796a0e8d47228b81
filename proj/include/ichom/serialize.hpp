#pragma once

// JSON forms of the library's values. Rationals are strings "p/q" (or "p").

#include <json.hpp>

#include "ichom/chains.hpp"
#include "ichom/currents.hpp"
#include "ichom/earring.hpp"
#include "ichom/freegroup.hpp"
#include "ichom/homology.hpp"
#include "ichom/reconstruction.hpp"

namespace ichom::serialize {

using Json = nlohmann::json;

Json rational(const Rational& q);
// Accepts a string "p/q" or an integer.
Rational parse_rational(const Json& j);

Json chain(const chains::Chain& c);
chains::Chain parse_chain(const Json& j);

// {"kind": "earring", "circles": N}
// {"kind": "circle", "length": "1", "pieces": 4, "unit": "plain"}
// {"kind": "graph", "vertices": n, "unit": "plain"|"pi", "basepoint": 0,
//  "edges": [{"tail": 0, "head": 1, "length": "1"}]}
Json graph_spec(const graph::MetricGraph& g);
graph::MetricGraph parse_graph(const Json& j);

Json point(const graph::GraphPoint& p);
graph::GraphPoint parse_point(const graph::MetricGraph& g, const Json& j);

// {"edges": [{"edge": e | "circle": n,
//             "intervals": [{"from", "to", "weight", "orientation"}]}]}
Json current1(const graph::MetricGraph& g, const currents::Current1& T);
currents::Current1 parse_current1(const graph::MetricGraph& g, const Json& j);
Json current0(const currents::Current0& T);
Json graph_chain(const currents::GraphChain1& c);

Json reconstruction(const graph::MetricGraph& g, const reconstruction::Result& r);
Json certificate_check(const reconstruction::Check& c);

Json recursion_report(const earring::RecursionReport& r);
Json commutator_report(const freegroup::Word& w, const freegroup::CommutatorDecision& d);

// A list of facets, {"facets": [...]}, or {"boundaries": [matrix, ...]} with
// each matrix a list of integer rows (boundary of degree k+1 at index k).
homology::ChainComplex parse_complex(const Json& j);
Json homology_groups(const std::vector<homology::HomologyGroup>& groups);

}  // namespace ichom::serialize
