#pragma once

// Representing a 1-current on a metric graph by a chain of short geodesic
// segments: cover the support by small balls, cut off one ball at a time by
// slicing its distance function at a generic radius, and fill the boundary of
// each piece by geodesics to the ball center.

#include <optional>
#include <string>
#include <vector>

#include "ichom/currents.hpp"

namespace ichom::reconstruction {

using currents::Current0;
using currents::Current1;
using currents::GraphChain1;
using currents::GraphSimplex;
using graph::GraphPoint;
using graph::MetricGraph;

struct Params {
  Rational epsilon;
  // Contraction constant of geodesic contractions in tree-like balls; the
  // filling diameter function is F(t) = 2 gamma t.
  Rational gamma = 1;
  int max_restarts = 12;
};

struct Step {
  GraphPoint center;
  Rational ball_radius;  // R_i
  Rational need;         // sup of d_i over the part of the support not covered by earlier balls
  Rational r_bar;
  Rational alpha;
  Rational r;            // slicing radius in (r_bar + alpha, r_bar + 3 alpha)
  Current0 slice;        // <T_cur, d_i, r+>
  Current1 piece;        // T_i = T_cur restricted to {d_i <= r}
  GraphChain1 chain;     // c_i, geodesics from the center to the points of dT_i
  Rational reach;        // max of d_i over spt T_i and im c_i
  Rational diameter_bound;  // 2 * reach
  bool filling_zero = false;  // T_i - [c_i] = 0
};

struct Result {
  GraphChain1 chain;
  Rational epsilon;
  Rational gamma;
  Rational radius;                 // R, common to all balls
  std::optional<Rational> r_x;     // contractibility radius from the girth
  int restarts = 0;
  std::vector<Step> steps;
  bool remainder_zero = false;
};

// 2 (R + F(2R + 2F(2R))) for F(t) = 2 gamma t.
Rational nested_radius_bound(const Rational& R, const Rational& gamma);

// Throws std::invalid_argument for epsilon <= 0 and std::runtime_error when
// the cover still fails after max_restarts halvings of the radius.
Result current_to_chain(const MetricGraph& g, const Current1& T, const Params& params);

struct CheckItem {
  std::string id;
  bool pass;
  std::string detail;
};

struct Check {
  bool pass = true;
  std::vector<CheckItem> items;
};

// Re-verifies every certificate from scratch, including, for cycles, the
// identity d([c']|(X-U)) = [bc'] - <[c], d, r+> for U = {d <= r} and c' the
// part of sd^m(c) meeting U.
Check check_certificate(const MetricGraph& g, const Current1& T, const Result& result);

}  // namespace ichom::reconstruction
