#include "ichom/generators.hpp"

#include <deque>

namespace ichom::gen {

long long integer(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

Rational rational(Rng& rng, const Rational& lo, const Rational& hi, long long den) {
  const long long a = to_int64((lo * den).ceil());
  const long long b = to_int64((hi * den).floor());
  return Rational(integer(rng, a, b), den);
}

std::vector<freegroup::Letter> letters(Rng& rng, int max_length, int generators) {
  std::vector<freegroup::Letter> out(static_cast<std::size_t>(integer(rng, 0, max_length)));
  for (auto& l : out) {
    l.generator = static_cast<int>(integer(rng, 1, generators));
    l.sign = integer(rng, 0, 1) ? 1 : -1;
  }
  return out;
}

freegroup::Word word(Rng& rng, int max_length, int generators) {
  return freegroup::reduce(letters(rng, max_length, generators));
}

chains::Simplex simplex(Rng& rng, int k, int ambient) {
  chains::Simplex s(static_cast<std::size_t>(k + 1));
  for (auto& p : s) {
    p.resize(static_cast<std::size_t>(ambient));
    for (auto& x : p) x = Rational(integer(rng, -6, 6), integer(rng, 1, 3));
  }
  return s;
}

chains::Chain chain(Rng& rng, int k, int ambient, int max_terms) {
  chains::Chain c(k);
  const long long terms = integer(rng, 1, max_terms);
  for (long long i = 0; i < terms; ++i) {
    long long n = integer(rng, -3, 3);
    if (n == 0) n = 1;
    c.add(simplex(rng, k, ambient), n);
  }
  return c;
}

chains::AffineMap affine_map(Rng& rng, int source, int target) {
  chains::AffineMap f;
  f.matrix.assign(static_cast<std::size_t>(target), std::vector<Rational>(static_cast<std::size_t>(source)));
  for (auto& row : f.matrix)
    for (auto& x : row) x = Rational(integer(rng, -4, 4), integer(rng, 1, 2));
  f.offset.resize(static_cast<std::size_t>(target));
  for (auto& x : f.offset) x = Rational(integer(rng, -3, 3), integer(rng, 1, 2));
  return f;
}

currents::Current1 current(Rng& rng, const graph::MetricGraph& g, int max_pieces) {
  currents::Current1 T;
  const long long pieces = integer(rng, 1, max_pieces);
  for (long long i = 0; i < pieces; ++i) {
    const int e = static_cast<int>(integer(rng, 0, g.edge_count() - 1));
    Rational a = rational(rng, 0, 1, 12);
    Rational b = rational(rng, 0, 1, 12);
    if (a == b) b = a.is_zero() ? Rational(1) : Rational(0);
    long long w = integer(rng, -3, 3);
    if (w == 0) w = 2;
    T.add(e, a, b, w);
  }
  return T;
}

currents::Current1 cycle(Rng& rng, const graph::MetricGraph& g, int max_weight) {
  const int n = g.vertex_count();
  std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<bool> tree_edge(static_cast<std::size_t>(g.edge_count()), false);
  std::deque<int> queue{g.basepoint()};
  seen[static_cast<std::size_t>(g.basepoint())] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      int w = -1;
      if (ed.tail == v) w = ed.head;
      else if (ed.head == v) w = ed.tail;
      if (w < 0 || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      parent[static_cast<std::size_t>(w)] = v;
      parent_edge[static_cast<std::size_t>(w)] = e;
      tree_edge[static_cast<std::size_t>(e)] = true;
      queue.push_back(w);
    }
  }
  // Walk from v up to the root with the given weight.
  auto to_root = [&](currents::Current1& T, int v, long long w) {
    while (parent[static_cast<std::size_t>(v)] >= 0) {
      const int e = parent_edge[static_cast<std::size_t>(v)];
      T.add_edge(e, g.edge(e).tail == v ? w : -w);
      v = parent[static_cast<std::size_t>(v)];
    }
  };
  currents::Current1 T;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (tree_edge[static_cast<std::size_t>(e)]) continue;
    const long long w = integer(rng, -max_weight, max_weight);
    if (w == 0) continue;
    T.add_edge(e, w);
    to_root(T, g.edge(e).head, w);
    to_root(T, g.edge(e).tail, -w);
  }
  return T;
}

graph::MetricGraph tree(Rng& rng) {
  const int branches = static_cast<int>(integer(rng, 2, 4));
  std::vector<graph::Edge> edges;
  int next = 1;
  for (int b = 0; b < branches; ++b) {
    int at = 0;
    const long long depth = integer(rng, 1, 2);
    for (long long d = 0; d < depth; ++d) {
      edges.push_back({at, next, Rational(integer(rng, 1, 4), 2), 0});
      at = next++;
    }
  }
  return graph::MetricGraph(next, std::move(edges), graph::LengthUnit::Plain);
}

currents::GraphChain1 pl_chain(Rng& rng, const graph::MetricGraph& g, int pieces) {
  currents::GraphChain1 c;
  for (int i = 0; i < pieces; ++i) {
    const int e = static_cast<int>(integer(rng, 0, g.edge_count() - 1));
    const Rational a = rational(rng, 0, 1, 8);
    const Rational b = rational(rng, 0, 1, 8);
    long long n = integer(rng, -2, 2);
    if (n == 0) n = 1;
    c.add({e, a, b}, n);
  }
  return c;
}

}  // namespace ichom::gen
