#pragma once

// Seeded random inputs for the verification suites and the tests.

#include <random>

#include "ichom/chains.hpp"
#include "ichom/currents.hpp"
#include "ichom/freegroup.hpp"

namespace ichom::gen {

using Rng = std::mt19937_64;

long long integer(Rng& rng, long long lo, long long hi);
// Uniform on the grid {lo + j/den} within [lo, hi].
Rational rational(Rng& rng, const Rational& lo, const Rational& hi, long long den);

freegroup::Word word(Rng& rng, int max_length, int generators = 2);
// Unreduced letter list.
std::vector<freegroup::Letter> letters(Rng& rng, int max_length, int generators = 2);

// Vertices with coordinates in [-2, 2] and denominators up to 3.
chains::Simplex simplex(Rng& rng, int k, int ambient);
chains::Chain chain(Rng& rng, int k, int ambient, int max_terms = 3);
chains::AffineMap affine_map(Rng& rng, int source, int target);

// Random weighted intervals on random edges.
currents::Current1 current(Rng& rng, const graph::MetricGraph& g, int max_pieces = 4);
// Integer combination of whole loops when the graph is the earring model,
// otherwise of the cycles through a spanning tree.
currents::Current1 cycle(Rng& rng, const graph::MetricGraph& g, int max_weight = 3);

// A star-shaped tree with some subdivided branches.
graph::MetricGraph tree(Rng& rng);

// Chain of `pieces` consecutive random segments along edges (a PL path).
currents::GraphChain1 pl_chain(Rng& rng, const graph::MetricGraph& g, int pieces);

}  // namespace ichom::gen
