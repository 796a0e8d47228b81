#include <doctest.h>

#include <random>

#include "ichom/homology.hpp"

using namespace ichom;
using namespace ichom::homology;

namespace {

std::vector<HomologyGroup> compute(const ChainComplex& c) { return ichom::homology::homology(c); }

// Rank by Gaussian elimination over Q, or over Z/p when p > 0.
long long rank_of(const IntMatrix& m, long p = 0) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer v = m.at(r, c);
      if (p > 0) v = ((v % p) + p) % p;
      a[r][c] = Rational(v);
    }
  }
  long long rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t piv = row;
    while (piv < m.rows() && a[piv][c].is_zero()) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[row]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      if (p == 0) {
        const Rational f = a[r][c] / a[row][c];
        for (std::size_t j = c; j < m.cols(); ++j) a[r][j] -= f * a[row][j];
      } else {
        // integer row operation a[r] = a[row][c] a[r] - a[r][c] a[row], mod p
        const Integer x = a[row][c].numerator(), y = a[r][c].numerator();
        for (std::size_t j = c; j < m.cols(); ++j) {
          Integer v = x * a[r][j].numerator() - y * a[row][j].numerator();
          v = ((v % p) + p) % p;
          a[r][j] = Rational(v);
        }
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

Integer determinant(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = Rational(m.at(r, c));
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det.numerator();
}

std::vector<std::vector<int>> torus_facets() {
  std::vector<std::vector<int>> t;
  for (int i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return t;
}

const std::vector<std::vector<int>> rp2 = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                           {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};

std::vector<std::string> strings(const std::vector<HomologyGroup>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(g.to_string());
  return out;
}

void check_against_ranks(const ChainComplex& cc) {
  const auto hs = compute(cc);
  REQUIRE(hs.size() == cc.sizes.size());
  for (std::size_t k = 0; k < cc.sizes.size(); ++k) {
    const long long out = k == 0 ? 0 : rank_of(cc.boundary[k - 1]);
    const long long in = k + 1 < cc.sizes.size() ? rank_of(cc.boundary[k]) : 0;
    CHECK(hs[k].betti == static_cast<long long>(cc.sizes[k]) - out - in);
    // 2-torsion shows up as a rank drop mod 2
    const long long in2 = k + 1 < cc.sizes.size() ? rank_of(cc.boundary[k], 2) : 0;
    bool has2 = false;
    for (const auto& t : hs[k].torsion) has2 = has2 || t % 2 == 0;
    CHECK(has2 == (in2 < in));
  }
}

}  // namespace

TEST_CASE("fixtures") {
  using SC = SimplicialComplex;
  CHECK(strings(compute(SC::from_facets({{0}}).chain_complex())) == std::vector<std::string>{"Z"});
  CHECK(strings(compute(SC::from_facets({{0, 1}, {1, 2}, {0, 2}}).chain_complex())) ==
        std::vector<std::string>{"Z", "Z"});
  CHECK(strings(compute(SC::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}).chain_complex())) ==
        std::vector<std::string>{"Z", "0", "Z"});
  CHECK(strings(compute(SC::from_facets(torus_facets()).chain_complex())) ==
        std::vector<std::string>{"Z", "Z^2", "Z"});
  CHECK(strings(compute(SC::from_facets(rp2).chain_complex())) == std::vector<std::string>{"Z", "Z/2", "0"});
  CHECK(strings(compute(SC::from_facets({{0, 1}, {2, 3}}).chain_complex())) ==
        std::vector<std::string>{"Z^2", "0"});
  CHECK(strings(compute(SC::from_facets({{0, 1, 2, 3}}).chain_complex())) ==
        std::vector<std::string>{"Z", "0", "0", "0"});
}

TEST_CASE("betti numbers and 2-torsion agree with rank computations") {
  using SC = SimplicialComplex;
  for (const auto& f : {std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}, torus_facets(),
                        rp2, std::vector<std::vector<int>>{{0, 1, 2, 3}, {2, 3, 4}, {4, 5}, {5, 2}}}) {
    check_against_ranks(SC::from_facets(f).chain_complex());
  }
}

TEST_CASE("simplicial complex faces") {
  const auto sc = SimplicialComplex::from_facets({{2, 0, 1}});
  REQUIRE(sc.simplices.size() == 3);
  CHECK(sc.simplices[0].size() == 3);
  CHECK(sc.simplices[1].size() == 3);
  CHECK(sc.simplices[2] == std::vector<std::vector<int>>{{0, 1, 2}});
  const auto cc = sc.chain_complex();
  CHECK((cc.boundary[0] * cc.boundary[1]).is_zero());
}

TEST_CASE("invariant factors") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(1, 1) = 3;
  CHECK(invariant_factors(m) == std::vector<Integer>{1, 6});
  IntMatrix z(2, 3);
  CHECK(invariant_factors(z).empty());
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 4;
    IntMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a.at(r, c) = entry(rng);
    const auto f = invariant_factors(a);
    for (std::size_t j = 1; j < f.size(); ++j) CHECK(f[j] % f[j - 1] == 0);
    CHECK(static_cast<long long>(f.size()) == rank_of(a));
    const Integer det = determinant(a);
    if (det != 0) {
      Integer prod = 1;
      for (const auto& d : f) prod *= d;
      CHECK(prod == abs(det));
    }
  }
}

TEST_CASE("validation") {
  ChainComplex bad;
  bad.sizes = {1, 1};
  bad.boundary = {IntMatrix(2, 1)};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  // nonzero composite
  ChainComplex c;
  c.sizes = {1, 1, 1};
  c.boundary = {IntMatrix(1, 1), IntMatrix(1, 1)};
  c.boundary[0].at(0, 0) = 1;
  c.boundary[1].at(0, 0) = 1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK_THROWS_AS(compute(c), std::invalid_argument);
  ChainComplex missing;
  missing.sizes = {1, 1};
  CHECK_THROWS_AS(missing.validate(), std::invalid_argument);
}
