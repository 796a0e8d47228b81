// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ichom/chains.hpp"
#include "ichom/currents.hpp"
#include "ichom/earring.hpp"
#include "ichom/freegroup.hpp"
#include "ichom/generators.hpp"
#include "ichom/homology.hpp"
#include "ichom/reconstruction.hpp"
#include "ichom/seqorder.hpp"

using namespace ichom;

namespace {

// Pinned tolerances and sizes.
constexpr int kEnumMax = 7;
constexpr double kEnumSeconds = 10.0;
constexpr int kOracleDepth = 12;
constexpr int kTauRange = 5;
constexpr int kMonotoneRange = 6;
constexpr int kDensityDepth = 8;
constexpr int kDensityGrid = 1000;
const Rational kDensityMax(1, 50);
const Rational kDensityFixture(1, 10321920);
constexpr int kLipschitzPairs = 1000;
constexpr int kSigmaDepth = 8;
constexpr int kRecursionSamples = 200;
constexpr int kRecursionResolved = 100;
constexpr int kRandomChains = 100;
constexpr double kHomologySeconds = 5.0;
constexpr int kSliceTrials = 20;
constexpr int kRoundTrips = 50;
const Rational kEpsilon(1, 2);
constexpr int kProbeCycles = 200;
constexpr unsigned long long kSeed = 97531;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s [%2d] %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Order straight from its definition.
bool def_lt(const std::vector<int>& s, const std::vector<int>& t) {
  const std::size_t n = std::min(s.size(), t.size());
  for (std::size_t j = 0; j < n; ++j)
    if (s[j] != t[j]) return s[j] < t[j];
  return s.size() < t.size();
}

std::vector<seqorder::Seq> union_B(int hi) {
  std::vector<seqorder::Seq> all;
  for (int n = 1; n <= hi; ++n) {
    auto b = seqorder::enumerate_B(n);
    all.insert(all.end(), b.begin(), b.end());
  }
  return all;
}

void cardinality() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string sizes;
  for (int n = 1; n <= kEnumMax; ++n) {
    const auto b = seqorder::enumerate_B(n);
    ok = ok && Integer(static_cast<long>(b.size())) == factorial(n);
    for (std::size_t i = 0; i < b.size(); ++i) {
      ok = ok && b[i].is_bounded() && b[i].length() == n;
      if (i > 0) ok = ok && def_lt(b[i - 1].entries(), b[i].entries());
    }
    sizes += (n > 1 ? "," : "") + std::to_string(b.size());
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < kEnumSeconds;
  char buf[64];
  std::snprintf(buf, sizeof buf, " in %.3f s", secs);
  report(1, "|B_n| = n! for n = 1..7", ok, sizes + buf);
}

void tau_values() {
  using namespace seqorder;
  const auto all = union_B(kTauRange);
  bool oracle = true, inc1 = true, incm = true, trans = true;
  for (const auto& s : all) {
    const auto br = tau_oracle(s, kOracleDepth);
    const Rational t = tau(s);
    oracle = oracle && br.lo <= t && t <= br.hi && br.hi - br.lo == pow2(-kOracleDepth);
    inc1 = inc1 && tau(s.appended(1)) - t == lambda(s.length());
    for (int m = 1; m <= s.length(); ++m)
      incm = incm && tau(s.appended(m + 1)) - tau(s.appended(m)) == Rational(2) * lambda(s.length() + 1);
  }
  int triples = 0;
  for (const auto& s : enumerate_B(3)) {
    for (const auto& t : enumerate_B(3)) {
      for (int a = 1; a <= 4; ++a) {
        for (int b = 0; b <= 5; ++b) {
          const Seq u = b == 0 ? Seq({a}) : Seq({a, b});
          const Seq su = s + u, tu = t + u;
          if (!su.is_bounded() || !tu.is_bounded()) continue;
          trans = trans && tau(su) - tau(tu) == tau(s) - tau(t);
          ++triples;
        }
      }
    }
  }
  report(2, "tau in the 2^-12 oracle interval, increments, translation", oracle && inc1 && incm && trans,
         std::to_string(all.size()) + " sequences; oracle " + (oracle ? "ok" : "bad") + ", +<1> " +
             (inc1 ? "ok" : "bad") + ", +<m> " + (incm ? "ok" : "bad") + ", translation " + std::to_string(triples) +
             " triples " + (trans ? "ok" : "bad"));
}

void monotone() {
  using namespace seqorder;
  auto all = union_B(kMonotoneRange);
  bool ok = true;
  std::size_t pairs = 0;
  std::vector<Rational> a, b;
  for (const auto& s : all) {
    a.push_back(tau(s));
    b.push_back(a.back() + lambda(s.length()));
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (!def_lt(all[i].entries(), all[j].entries())) continue;
      ++pairs;
      // tau strictly increasing, and [a_i,b_i] meets [a_j,b_j] in at most a point
      ok = ok && a[i] < a[j];
      const Rational lo = max(a[i], a[j]), hi = min(b[i], b[j]);
      ok = ok && hi <= lo;
    }
  }
  report(3, "tau strictly monotone, intervals meet in at most one point on B_1..B_6", ok,
         std::to_string(pairs) + " ordered pairs");
}

void density() {
  bool ok = true;
  Rational prev = 2, last;
  std::string values;
  for (int d = 1; d <= kDensityDepth; ++d) {
    last = seqorder::density_report(d, kDensityGrid);
    ok = ok && last <= prev;
    prev = last;
    values += (d > 1 ? "," : "") + last.to_string();
  }
  ok = ok && last <= kDensityMax && last == kDensityFixture;
  report(4, "density max gap non-increasing, <= 1/50 at depth 8", ok, values);
}

void lipschitz() {
  using namespace earring;
  const PiEnclosure pi = PiEnclosure::standard();
  gen::Rng rng(kSeed);
  int resolved = 0, attempts = 0;
  bool ok = true;
  double worst = 0;
  const long long den = 1LL << 24;
  while (resolved < kLipschitzPairs && attempts < 20 * kLipschitzPairs) {
    ++attempts;
    const Rational t = gen::rational(rng, 0, 1, den);
    const Rational u = attempts % 2 ? gen::rational(rng, 0, 1, den)
                                    : min(Rational(1), t + gen::rational(rng, 0, 1, den) *
                                                               pow2(-static_cast<int>(gen::integer(rng, 2, 14))));
    if (u == t) continue;
    const auto x = sigma(1, t, kSigmaDepth, pi), y = sigma(1, u, kSigmaDepth, pi);
    if (!x.error_bound.is_zero() || !y.error_bound.is_zero()) continue;
    ++resolved;
    const CertifiedReal d = distance(x.point, y.point, pi);
    ok = ok && d.hi <= (u - t).abs();
    worst = std::max(worst, (d.hi / (u - t).abs()).to_double());
  }
  ok = ok && resolved >= kLipschitzPairs;
  std::string speeds;
  for (int k = 1; k <= 3; ++k) {
    const CertifiedReal v = max_speed(commutator_loop(k, pi), pi);
    ok = ok && v.hi <= Rational(1);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.6f", k > 1 ? "," : "", v.hi.to_double());
    speeds += buf;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d pairs, max ratio %.6f; c_k speed hi ", resolved, worst);
  report(5, "sigma_1 1-Lipschitz, c_k speed <= 1", ok, buf + speeds);
}

void recursion() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 4; ++n) {
    const auto r = earring::verify_recursion(n, kRecursionSamples, kSigmaDepth, 4);
    ok = ok && r.pass && r.resolved >= kRecursionResolved && r.max_discrepancy.is_zero();
    detail += (n > 2 ? "; " : "") + std::string("n=") + std::to_string(n) + " resolved " +
              std::to_string(r.resolved) + "/" + std::to_string(r.samples) + " discrepancy " +
              r.max_discrepancy.to_string();
  }
  report(6, "sigma_{n-1} = c_{n-1} . sigma_n ... sigma_n for n = 2,3,4", ok, detail);
}

void words() {
  using freegroup::Word;
  const auto path = earring::sigma1_truncation(3);
  bool ok = true;
  std::string detail;
  for (int k = 1; k <= 3; ++k) {
    const Word w = earring::project_word(path, k);
    Word expect;
    for (long long i = 0; i < to_int64(factorial(k)); ++i) expect = expect * Word::parse("abAB");
    ok = ok && w == expect && freegroup::abelianize(w).is_zero();
    detail += "k=" + std::to_string(k) + " |w|=" + std::to_string(w.length()) + "; ";
  }
  const bool sq = freegroup::is_single_commutator(Word::parse("abABabAB")).is_commutator;
  const bool one = freegroup::is_single_commutator(Word::parse("abAB")).is_commutator;
  ok = ok && !sq && one;
  report(7, "project_word(sigma_1, k) = [a,b]^{k!}, [a,b]^2 not a commutator", ok,
         detail + "[a,b]^2 single commutator: " + (sq ? "true" : "false"));
}

void chain_identities() {
  using namespace chains;
  gen::Rng rng(kSeed + 1);
  auto dim = [&](int lo, int hi) { return static_cast<int>(gen::integer(rng, lo, hi)); };
  bool bb = true, sd = true, hom = true, pr = true, cf = true, nat = true;
  for (int i = 0; i < kRandomChains; ++i) {
    bb = bb && boundary(boundary(gen::chain(rng, dim(1, 3), 3))).empty();
    const Chain c = gen::chain(rng, dim(1, 2), 2, 2);
    const int m = 1 + i % 2;
    sd = sd && boundary(subdivide(c, m)) == subdivide(boundary(c), m);
    const Chain h = gen::chain(rng, dim(0, 2), 2, 2);
    hom = hom && boundary(subdiv_homotopy(h, i % 3)) + subdiv_homotopy(boundary(h), i % 3) == subdivide(h, i % 3) - h;
    const Chain p = gen::chain(rng, dim(0, 2), 2);
    pr = pr && boundary(prism(p)) + prism(boundary(p)) == include_at(p, 1) - include_at(p, 0);
    const Chain z = boundary(gen::chain(rng, dim(1, 3), 3));
    if (!z.empty()) {
      const Contraction phi = Contraction::straight_line(z.terms().begin()->first.front(), 1);
      const ConeFill f = cone_fill(z, phi);
      // out^2 <= 4 gamma^2 in^2, recomputed from the vertices
      cf = cf && boundary(f.filling) == z && diameter_squared(f.filling) <= Rational(4) * diameter_squared(z);
    }
    const AffineMap g = gen::affine_map(rng, 2, 3);
    nat = nat && subdiv_homotopy(push_forward(g, h), m) == push_forward(g, subdiv_homotopy(h, m));
  }
  auto flag = [](bool b) { return b ? std::string("ok") : std::string("bad"); };
  report(8, "chain identities on 100 random chains each", bb && sd && hom && pr && cf && nat,
         "bb " + flag(bb) + ", b sd^m " + flag(sd) + ", D_m " + flag(hom) + ", prism " + flag(pr) + ", cone fill " +
             flag(cf) + ", naturality " + flag(nat));
}

long long rational_rank(const homology::IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = Rational(m.at(r, c));
  long long rank = 0;
  for (std::size_t c = 0; c < m.cols() && static_cast<std::size_t>(rank) < m.rows(); ++c) {
    const std::size_t row = static_cast<std::size_t>(rank);
    std::size_t p = row;
    while (p < m.rows() && a[p][c].is_zero()) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      const Rational f = a[r][c] / a[row][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[r][j] -= f * a[row][j];
    }
    ++rank;
  }
  return rank;
}

void homology_fixtures() {
  using homology::SimplicialComplex;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<int>> torus;
  for (int i = 0; i < 7; ++i) {
    torus.push_back({i, (i + 1) % 7, (i + 3) % 7});
    torus.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  const std::vector<std::vector<std::vector<int>>> fixtures = {
      {{0}},
      {{0, 1}, {1, 2}, {0, 2}},
      {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}},
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}},
      torus,
      {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1}, {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}}};
  std::vector<std::vector<homology::HomologyGroup>> hs;
  bool ok = true;
  for (const auto& f : fixtures) {
    const auto cc = SimplicialComplex::from_facets(f).chain_complex();
    hs.push_back(homology::homology(cc));
    for (std::size_t k = 0; k < cc.sizes.size(); ++k) {
      const long long out = k == 0 ? 0 : rational_rank(cc.boundary[k - 1]);
      const long long in = k + 1 < cc.sizes.size() ? rational_rank(cc.boundary[k]) : 0;
      ok = ok && hs.back()[k].betti == static_cast<long long>(cc.sizes[k]) - out - in;
    }
  }
  ok = ok && hs[0][0].to_string() == "Z" && hs[1][1].to_string() == "Z" && hs[2][1].to_string() == "Z^2";
  const double secs = seconds_since(t0);
  ok = ok && secs < kHomologySeconds;
  char buf[160];
  std::snprintf(buf, sizeof buf, "H0(pt) %s, H1(circle) %s, H1(wedge) %s, %zu fixtures match rank oracle, %.3f s",
                hs[0][0].to_string().c_str(), hs[1][1].to_string().c_str(), hs[2][1].to_string().c_str(),
                fixtures.size(), secs);
  report(9, "homology fixtures", ok, buf);
}

void current_calculus() {
  using namespace currents;
  gen::Rng rng(kSeed + 2);
  const MetricGraph H = MetricGraph::earring(4);
  bool sl = true, ret = true, stokes = true, trip = true;
  int trials = 0;
  while (trials < kSliceTrials) {
    const MetricGraph g = trials % 2 ? H : gen::tree(rng);
    const Current1 T = gen::current(rng, g, 5);
    const int e = static_cast<int>(gen::integer(rng, 0, g.edge_count() - 1));
    const DistanceFunction d(g, GraphPoint::on_edge(g, e, gen::rational(rng, 0, 1, 5)));
    const Rational r = gen::rational(rng, Rational(1, 97), 2, 485);
    if (!is_generic_radius(d, T, r)) continue;
    ++trials;
    // d(T|{d<=r}) - (dT)|{d<=r}
    Current0 inner;
    const ArcSet U = d.sublevel(r);
    for (const auto& [p, w] : boundary1(g, T).points())
      if (U.contains(g, p)) inner.add(p, w);
    const Current0 def = boundary1(g, restrict(T, U)) - inner;
    sl = sl && slice(T, d, r) == def;
  }
  for (int i = 0; i < 50; ++i) {
    const Current1 T = gen::current(rng, H, 6);
    for (long long n = 1; n <= 4; ++n) {
      const MetricGraph L = circle_model(n);
      const Current1 back = earring_inclusion(L, H, n).push_forward(earring_retraction(H, L, n).push_forward(T));
      ret = ret && back == restrict(T, ArcSet::edge_set(*H.edge_for_circle(n)));
    }
  }
  for (int i = 0; i < 50; ++i) {
    const MetricGraph g = i % 2 ? H : gen::tree(rng);
    const GraphChain1 c = gen::pl_chain(rng, g, 5);
    stokes = stokes && boundary1(g, chain_to_current(c)) == chain_to_current(boundary(g, c));
  }
  int pieces = 0, cycles = 0;
  Rational worst = 0;
  const MetricGraph circle = MetricGraph::circle(1, 3);
  for (int i = 0; i < kRoundTrips; ++i) {
    const int kind = i % 3;
    const MetricGraph g = kind == 0 ? circle : (kind == 1 ? gen::tree(rng) : MetricGraph::earring(1 + i % 4));
    Current1 T = gen::cycle(rng, g);
    if (i % 2) T += gen::current(rng, g, 3);
    cycles += boundary1(g, T).empty();
    const auto res = reconstruction::current_to_chain(g, T, {kEpsilon});
    trip = trip && chain_to_current(res.chain) == T && reconstruction::check_certificate(g, T, res).pass;
    for (const auto& st : res.steps) {
      worst = max(worst, st.diameter_bound);
      trip = trip && st.diameter_bound < kEpsilon;
    }
    pieces += static_cast<int>(res.steps.size());
  }
  auto flag = [](bool b) { return b ? std::string("ok") : std::string("bad"); };
  report(10, "current calculus", sl && ret && stokes && trip,
         "slice " + std::to_string(trials) + " " + flag(sl) + ", retraction " + flag(ret) + ", stokes " + flag(stokes) +
             ", round trips " + std::to_string(kRoundTrips) + " (" + std::to_string(cycles) + " cycles) " + flag(trip) +
             ", " + std::to_string(pieces) + " pieces, max diameter bound " + worst.to_string() + " < " +
             kEpsilon.to_string());
}

void divisibility() {
  using namespace currents;
  gen::Rng rng(kSeed + 3);
  const MetricGraph H = MetricGraph::earring(6);
  bool ok = true;
  int survivors = 0, rejected = 0;
  for (int i = 0; i < kProbeCycles; ++i) {
    const Current1 T = gen::cycle(rng, H, i % 4 == 0 ? 0 : 1 + i % 7);
    const WindingVector v = winding_vector(H, T);
    std::set<long long> K;
    for (long long k = 2; k <= v.max_abs() + 1; ++k) K.insert(k);
    if (v.divisible_by_all(K)) {
      ++survivors;
      ok = ok && T.empty();
    } else {
      ++rejected;
    }
  }
  ok = ok && survivors > 0 && rejected > 0;
  report(11, "divisibility probe", ok,
         std::to_string(kProbeCycles) + " cycles: " + std::to_string(survivors) + " pass the probe, all zero; " +
             std::to_string(rejected) + " rejected");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {cardinality, tau_values, monotone,          density,
                                                       lipschitz,   recursion,  words,             chain_identities,
                                                       homology_fixtures, current_calculus, divisibility};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      std::printf("FAIL exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
