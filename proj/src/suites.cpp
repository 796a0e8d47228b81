#include "ichom/suites.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ichom/chains.hpp"
#include "ichom/currents.hpp"
#include "ichom/earring.hpp"
#include "ichom/freegroup.hpp"
#include "ichom/generators.hpp"
#include "ichom/homology.hpp"
#include "ichom/reconstruction.hpp"
#include "ichom/seqorder.hpp"

namespace ichom::suites {

namespace {

template <class T>
void read(const Json& j, const char* key, T& field) {
  if (j.contains(key)) field = j.at(key).get<T>();
}

std::string approx(const Rational& q) {
  std::ostringstream os;
  os.precision(6);
  os << q.to_double();
  return os.str();
}

CheckResult check(std::string id, std::string statement, Json parameters, bool pass, std::string result,
                  const Rational& discrepancy = 0) {
  CheckResult c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.parameters = std::move(parameters);
  c.pass = pass;
  c.result = std::move(result);
  c.discrepancy = discrepancy.to_string();
  return c;
}

PiEnclosure pi_of(const Config& cfg) {
  return cfg.pi_digits > 0 ? PiEnclosure::with_digits(cfg.pi_digits) : PiEnclosure::standard();
}

// ---------------------------------------------------------------- seqorder

std::vector<CheckResult> seqorder_suite(const Config& cfg) {
  using namespace seqorder;
  std::vector<CheckResult> out;
  const int cap = std::max({kDefaultEnumerationCap, cfg.enumeration_depth, cfg.monotone_range});

  {
    bool ok = true;
    std::string sizes;
    for (int n = 1; n <= cfg.enumeration_depth; ++n) {
      const auto b = enumerate_B(n, cap);
      ok = ok && Integer(static_cast<unsigned long>(b.size())) == factorial(n);
      bool increasing = true;
      for (std::size_t i = 1; i < b.size(); ++i) increasing = increasing && precedes(b[i - 1], b[i]);
      ok = ok && increasing;
      sizes += (n > 1 ? "," : "") + std::to_string(b.size());
    }
    out.push_back(check("seqorder.cardinality", "|B_n| = n! and enumerate_B lists B_n in increasing order",
                        {{"n_max", cfg.enumeration_depth}}, ok, "sizes " + sizes));
  }

  // B_1 .. B_monotone_range in order, with tau and interval ends.
  std::vector<Seq> all;
  for (int n = 1; n <= cfg.monotone_range; ++n) {
    const auto b = enumerate_B(n, cap);
    all.insert(all.end(), b.begin(), b.end());
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < all.size() && ok; ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        const Order a = compare(all[i], all[j]);
        const Order b = compare(all[j], all[i]);
        const bool same = all[i] == all[j];
        if ((a == Order::Equal) != same || (a == Order::Less) != (b == Order::Greater)) {
          ok = false;
          break;
        }
      }
    }
    const auto b4 = enumerate_B(4, cap);
    for (const auto& s : b4)
      for (const auto& t : b4)
        for (const auto& u : b4)
          if (precedes(s, t) && precedes(t, u) && !precedes(s, u)) ok = false;
    out.push_back(check("seqorder.total_order",
                        "exactly one of <, =, > holds on B_1..B_6; transitivity on all triples of B_4",
                        {{"range", cfg.monotone_range}}, ok, std::to_string(all.size()) + " sequences"));
  }
  std::sort(all.begin(), all.end(), precedes);
  std::vector<Rational> taus, ends;
  for (const auto& s : all) {
    taus.push_back(tau(s));
    ends.push_back(taus.back() + lambda(s.length()));
  }
  {
    bool ok = taus.front().is_zero() && all.front() == Seq::ones(1);
    for (std::size_t i = 1; i < taus.size(); ++i) ok = ok && taus[i - 1] < taus[i];
    out.push_back(check("seqorder.tau_monotone", "s < t implies tau(s) < tau(t); <1> is the minimum, tau(<1>) = 0",
                        {{"range", cfg.monotone_range}}, ok, "checked along the sorted union"));
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        // [tau_i, end_i] meets [tau_j, end_j] in at most the point tau_j
        if (taus[j] < ends[i]) ok = false;
      }
    }
    out.push_back(check("seqorder.interval_disjointness",
                        "for s < s' the intervals [tau(s), tau(s+<1>)] and [tau(s'), tau(s'+<1>)] share at most "
                        "tau(s')",
                        {{"range", cfg.monotone_range}}, ok, std::to_string(all.size() * (all.size() - 1) / 2) + " pairs"));
  }
  {
    // Partial sums over the sorted union bracket differences of tau.
    std::vector<Rational> prefix{0};
    for (const auto& s : all) prefix.push_back(prefix.back() + lambda(s.length()));
    const Rational tail = pow2(-cfg.monotone_range);
    bool ok = true;
    Rational worst = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i].length() > 4) continue;
      for (std::size_t j = i; j < all.size(); ++j) {
        if (all[j].length() > 4) continue;
        const Rational diff = taus[j] - taus[i];
        const Rational lo = prefix[j] - prefix[i];
        if (diff < lo || diff > lo + tail) ok = false;
        worst = max(worst, diff - lo);
      }
    }
    out.push_back(check("seqorder.difference_formula",
                        "tau(s') - tau(s) is the sum of lambda(l(t)) over s <= t < s', bracketed by truncation "
                        "plus tail on B_1..B_4",
                        {{"truncation", cfg.monotone_range}}, ok, "largest tail used " + worst.to_string(), 0));
  }

  std::vector<Seq> small;
  for (int n = 1; n <= cfg.tau_range; ++n) {
    const auto b = enumerate_B(n, cap);
    small.insert(small.end(), b.begin(), b.end());
  }
  {
    bool ok = true;
    Rational width = 0;
    for (const auto& s : small) {
      const auto br = tau_oracle(s, cfg.oracle_depth);
      const Rational t = tau(s);
      ok = ok && br.lo <= t && t <= br.hi && br.hi - br.lo == pow2(-cfg.oracle_depth);
      width = max(width, br.hi - br.lo);
    }
    out.push_back(check("seqorder.tau_oracle", "tau(s) lies in the truncated-sum oracle interval",
                        {{"range", cfg.tau_range}, {"depth", cfg.oracle_depth}}, ok,
                        std::to_string(small.size()) + " sequences, width " + width.to_string()));
  }
  {
    bool ok = true;
    Rational worst = 0;
    for (const auto& s : small) {
      const Rational d = tau(s.appended(1)) - tau(s) - lambda(s.length());
      worst = max(worst, d.abs());
      ok = ok && d.is_zero();
    }
    out.push_back(check("seqorder.increment_one", "tau(s+<1>) - tau(s) = lambda(l(s))", {{"range", cfg.tau_range}},
                        ok, "exact", worst));
  }
  {
    bool ok = true;
    Rational worst = 0;
    int count = 0;
    for (const auto& s : small) {
      for (int m = 1; m <= s.length(); ++m) {
        const Rational d = tau(s.appended(m + 1)) - tau(s.appended(m)) - Rational(2) * lambda(s.length() + 1);
        worst = max(worst, d.abs());
        ok = ok && d.is_zero();
        ++count;
      }
    }
    out.push_back(check("seqorder.increment_m", "tau(s+<m+1>) - tau(s+<m>) = 2 lambda(l(s)+1)",
                        {{"range", cfg.tau_range}}, ok, std::to_string(count) + " increments", worst));
  }
  {
    const auto b3 = enumerate_B(3, cap);
    std::vector<Seq> tails;
    for (int a = 1; a <= 4; ++a) {
      tails.push_back(Seq({a}));
      for (int b = 1; b <= 5; ++b) tails.push_back(Seq({a, b}));
    }
    bool ok = true;
    Rational worst = 0;
    int count = 0;
    for (const auto& s : b3) {
      for (const auto& t : b3) {
        for (const auto& u : tails) {
          const Seq su = s + u, tu = t + u;
          if (!su.is_bounded() || !tu.is_bounded()) continue;
          const Rational d = (tau(su) - tau(tu)) - (tau(s) - tau(t));
          worst = max(worst, d.abs());
          ok = ok && d.is_zero();
          ++count;
        }
      }
    }
    out.push_back(check("seqorder.translation", "tau(s+s'') - tau(s'+s'') = tau(s) - tau(s') for s, s' in B_3",
                        {{"suffix_length_max", 2}}, ok, std::to_string(count) + " triples", worst));
  }
  {
    std::vector<Rational> gaps;
    bool ok = true;
    std::string values;
    for (int d = 1; d <= cfg.density_depth; ++d) {
      gaps.push_back(density_report(d, cfg.density_grid));
      if (gaps.size() > 1 && gaps[gaps.size() - 2] < gaps.back()) ok = false;
      values += (d > 1 ? "," : "") + gaps.back().to_string();
    }
    if (cfg.density_depth >= 8 && cfg.density_grid == 1000) ok = ok && gaps[7] <= Rational(1, 50);
    out.push_back(check("seqorder.density",
                        "largest grid distance to the generation <= d intervals is non-increasing in d",
                        {{"depth", cfg.density_depth}, {"grid", cfg.density_grid}}, ok, values, gaps.back()));
  }
  {
    bool ok = false;
    const auto a = locate(Rational(1, 4), 3);
    if (auto* hit = std::get_if<IntervalHit>(&a)) ok = hit->seq == Seq::ones(1) && hit->offset == Rational(1, 4);
    const auto b = locate(0, 1);
    if (auto* hit = std::get_if<IntervalHit>(&b)) ok = ok && hit->seq == Seq::ones(1) && hit->offset.is_zero();
    else ok = false;
    for (int d = 1; d <= cfg.density_depth; ++d) ok = ok && std::holds_alternative<GapHit>(locate(1, d));
    out.push_back(check("seqorder.locate", "locate(1/4, 3) is in the interval of <1>, locate(1, d) is a gap",
                        {{"depth", cfg.density_depth}}, ok, ok ? "as expected" : "unexpected location"));
  }
  return out;
}

// ---------------------------------------------------------------- earring

std::vector<CheckResult> earring_suite(const Config& cfg) {
  using namespace earring;
  std::vector<CheckResult> out;
  const PiEnclosure pi = pi_of(cfg);
  gen::Rng rng(cfg.seed);

  {
    bool ok = true;
    for (int k = 1; k <= 3; ++k) {
      const auto c = commutator_loop(k, pi);
      ok = ok && c.start_point().is_origin() && c.end_point().is_origin();
    }
    for (int n = 1; n <= cfg.max_sigma_n; ++n) {
      const auto a = sigma(n, 0, cfg.sigma_depth, pi);
      const auto b = sigma(n, sigma_domain(n), cfg.sigma_depth, pi);
      ok = ok && a.point.is_origin() && b.point.is_origin() && a.error_bound.is_zero() && b.error_bound.is_zero();
    }
    out.push_back(check("earring.endpoints", "c_k and sigma_n start and end at the origin",
                        {{"k_max", 3}, {"n_max", cfg.max_sigma_n}}, ok, ok ? "all at origin" : "endpoint off origin"));
  }
  {
    bool ok = true;
    std::string ns;
    for (int k = 1; k <= 5; ++k) {
      const long long n = choose_n(k, pi);
      const Rational need = Rational(8) * pi.hi * pow2(k) * Rational(factorial(k));
      ok = ok && Rational(n) >= need && Rational(n - 1) < need;
      if (k > 1) ok = ok && n > choose_n(k - 1, pi) + 1;
      if (k <= 3) ns += (k > 1 ? "," : "") + std::to_string(n);
    }
    out.push_back(check("earring.circle_choice", "n_k is the least integer >= 8 pi 2^k k! and n_{k+1} > n_k + 1",
                        {{"k_max", 5}}, ok, "n_1..n_3 = " + ns));
  }
  {
    bool ok = true;
    Rational worst = 0;
    std::string speeds;
    for (int k = 1; k <= 3; ++k) {
      const CertifiedReal v = max_speed(commutator_loop(k, pi), pi);
      ok = ok && v.hi <= Rational(1);
      worst = max(worst, v.hi);
      speeds += (k > 1 ? "," : "") + approx(v.hi);
    }
    const CertifiedReal t = max_speed(sigma1_truncation(3, pi), pi);
    ok = ok && t.hi <= Rational(1);
    out.push_back(check("earring.speed", "the speed enclosure of c_k has upper end <= 1",
                        {{"k_max", 3}}, ok, "hi = " + speeds, max(Rational(0), worst - Rational(1))));
  }
  {
    int resolved = 0, attempts = 0;
    bool ok = true;
    Rational worst_excess = 0, worst_ratio = 0;
    const long long den = 1LL << 24;
    while (resolved < cfg.lipschitz_pairs && attempts < 20 * cfg.lipschitz_pairs) {
      ++attempts;
      const Rational t = gen::rational(rng, 0, 1, den);
      Rational u;
      if (attempts % 2) {
        u = gen::rational(rng, 0, 1, den);
      } else {
        const Rational delta = gen::rational(rng, 0, 1, den) * pow2(-static_cast<int>(gen::integer(rng, 2, 14)));
        u = min(Rational(1), t + delta);
      }
      if (u == t) continue;
      const auto a = sigma(1, t, cfg.sigma_depth, pi);
      const auto b = sigma(1, u, cfg.sigma_depth, pi);
      if (!a.error_bound.is_zero() || !b.error_bound.is_zero()) continue;
      ++resolved;
      const Rational gap = (u - t).abs();
      const CertifiedReal d = distance(a.point, b.point, pi);
      if (d.hi > gap) ok = false;
      worst_excess = max(worst_excess, d.hi - gap);
      worst_ratio = max(worst_ratio, d.hi / gap);
    }
    ok = ok && resolved >= cfg.lipschitz_pairs;
    out.push_back(check("earring.lipschitz", "d(sigma_1(t), sigma_1(t')) <= |t - t'| on resolved pairs",
                        {{"pairs", cfg.lipschitz_pairs}, {"depth", cfg.sigma_depth}}, ok,
                        std::to_string(resolved) + " pairs, max ratio " + approx(worst_ratio),
                        max(Rational(0), worst_excess)));
  }
  {
    // A gap bound at a low depth must hold for the value resolved deeper.
    const int shallow = 3;
    int tested = 0;
    bool ok = true;
    for (int i = 0; i < 4000 && tested < 200; ++i) {
      const Rational t = gen::rational(rng, 0, 1, 1LL << 20);
      const auto a = sigma(1, t, shallow, pi);
      if (a.error_bound.is_zero()) continue;
      const auto b = sigma(1, t, cfg.sigma_depth, pi);
      if (!b.error_bound.is_zero()) continue;
      ++tested;
      if (norm(b.point).enclose(pi).hi > a.error_bound) ok = false;
    }
    out.push_back(check("earring.gap_soundness", "a gap bound b at low depth bounds d(sigma_1(t), origin)",
                        {{"shallow_depth", shallow}, {"depth", cfg.sigma_depth}}, ok && tested > 0,
                        std::to_string(tested) + " gap times"));
  }
  {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= cfg.max_sigma_n; ++n) {
      const auto r = verify_recursion(n, cfg.recursion_samples, cfg.sigma_depth, cfg.max_sigma_n, pi);
      // at least 100 resolved samples, or half of a smaller sample set
      ok = ok && r.pass && r.resolved >= std::min(100, cfg.recursion_samples / 2) && r.max_discrepancy.is_zero();
      detail += (n > 2 ? "; " : "") + std::string("n=") + std::to_string(n) + " resolved " + std::to_string(r.resolved);
    }
    out.push_back(check("earring.recursion", "sigma_{n-1} = c_{n-1} . sigma_n . ... . sigma_n (n copies)",
                        {{"samples", cfg.recursion_samples}, {"depth", cfg.sigma_depth}, {"n_max", cfg.max_sigma_n}},
                        ok, detail));
  }
  {
    using freegroup::Word;
    bool ok = true;
    const auto path = sigma1_truncation(3, pi);
    std::string detail;
    for (int k = 1; k <= 3; ++k) {
      const Word w = project_word(path, k, pi);
      const long long kf = to_int64(factorial(k));
      ok = ok && seqorder::enumerate_B(k).size() == static_cast<std::size_t>(kf);
      ok = ok && w == freegroup::commutator_power(Word::parse("a"), Word::parse("b"), kf);
      detail += (k > 1 ? "; " : "") + std::string("k=") + std::to_string(k) + " length " + std::to_string(w.length());
    }
    out.push_back(check("earring.word_count", "project_word(sigma_1, k) = [a,b]^{k!} since |B_k| = k!",
                        {{"k_max", 3}}, ok, detail));
  }
  {
    bool ok = true;
    auto random_point = [&]() {
      if (gen::integer(rng, 0, 5) == 0) return EarringPoint::origin();
      return EarringPoint::on_circle(gen::integer(rng, 1, 6), gen::rational(rng, 0, 1, 24));
    };
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_point(), y = random_point(), z = random_point();
      const Rational xy = distance_coefficient(x, y).coefficient;
      ok = ok && xy == distance_coefficient(y, x).coefficient;
      ok = ok && distance_coefficient(x, z).coefficient <= xy + distance_coefficient(y, z).coefficient;
      ok = ok && (xy.is_zero() == (x == y));
    }
    out.push_back(check("earring.metric_axioms", "the length metric is symmetric, definite and satisfies the triangle "
                                                 "inequality",
                        {{"triples", 1000}}, ok, "exact pi coefficients"));
  }
  return out;
}

// ---------------------------------------------------------------- freegroup

std::vector<CheckResult> freegroup_suite(const Config& cfg) {
  using namespace freegroup;
  std::vector<CheckResult> out;
  gen::Rng rng(cfg.seed + 1);
  {
    bool ok = true;
    for (int i = 0; i < cfg.random_words; ++i) {
      auto ls = gen::letters(rng, 20);
      const Word w = reduce(ls);
      ok = ok && reduce(w.letters()) == w && w.length() <= ls.size();
      // inserting a cancelling pair does not change the element
      const auto pos = static_cast<std::size_t>(gen::integer(rng, 0, static_cast<long long>(ls.size())));
      const Letter l{static_cast<int>(gen::integer(rng, 1, 2)), gen::integer(rng, 0, 1) ? 1 : -1};
      auto longer = ls;
      longer.insert(longer.begin() + static_cast<std::ptrdiff_t>(pos), {l, l.inverse()});
      ok = ok && reduce(longer) == w && (w * w.inverse()).empty();
    }
    out.push_back(check("freegroup.reduce", "reduction is idempotent, shortens, and respects the group element",
                        {{"words", cfg.random_words}}, ok, "exact"));
  }
  {
    bool ok = true;
    for (int i = 0; i < cfg.random_words / 10; ++i) {
      const Word u = gen::word(rng, 12), v = gen::word(rng, 12);
      const auto a = abelianize(u), b = abelianize(v), c = abelianize(u * v);
      for (std::size_t k = 0; k < 2; ++k) ok = ok && c.exponent_sums[k] == a.exponent_sums[k] + b.exponent_sums[k];
    }
    out.push_back(check("freegroup.abelianize", "abelianize(uv) = abelianize(u) + abelianize(v)",
                        {{"pairs", cfg.random_words / 10}}, ok, "exact"));
  }
  {
    bool ok = true;
    int positives = 0;
    for (int i = 0; i < 300; ++i) {
      const Word x = gen::word(rng, 3), y = gen::word(rng, 3), g = gen::word(rng, 2);
      const Word w = g * commutator(x, y) * g.inverse();
      const auto d = is_single_commutator(w);
      if (!d.is_commutator || !d.witness) {
        ok = false;
        continue;
      }
      const auto& wit = *d.witness;
      ok = ok && wit.conjugator * commutator(wit.x, wit.y) * wit.conjugator.inverse() == w;
      ok = ok && abelianize(w).is_zero();
      ++positives;
    }
    for (int i = 0; i < 300; ++i) {
      const Word w = gen::word(rng, 10);
      const auto d = is_single_commutator(w);
      if (d.is_commutator) {
        ++positives;
        ok = ok && abelianize(w).is_zero();
      }
    }
    out.push_back(check("freegroup.commutator_search",
                        "conjugates of [x,y] are found with a valid witness; every positive has zero abelianization",
                        {{"constructed", 300}, {"random", 300}}, ok, std::to_string(positives) + " positives"));
  }
  {
    const Word c = Word::parse("abAB");
    const bool one = is_single_commutator(c).is_commutator;
    const bool two = is_single_commutator(commutator_power(Word::parse("a"), Word::parse("b"), 2)).is_commutator;
    out.push_back(check("freegroup.square_not_commutator", "[a,b] is a commutator and [a,b]^2 is not",
                        Json::object(), one && !two,
                        std::string("[a,b]: ") + (one ? "true" : "false") + ", [a,b]^2: " + (two ? "true" : "false")));
  }
  {
    const PiEnclosure pi = pi_of(cfg);
    const auto path = earring::sigma1_truncation(3, pi);
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= 3; ++k) {
      const Word w = earring::project_word(path, k, pi);
      const long long kf = to_int64(factorial(k));
      ok = ok && w == commutator_power(Word::parse("a"), Word::parse("b"), kf) && abelianize(w).is_zero();
      if (k <= 2) {
        const bool single = is_single_commutator(w).is_commutator;
        ok = ok && single == (k == 1);
        detail += (k > 1 ? "; " : "") + std::string("k=") + std::to_string(k) + " single commutator " +
                  (single ? "true" : "false");
      }
    }
    out.push_back(check("freegroup.projection",
                        "project_word(sigma_1, k) = [a,b]^{k!} with zero abelianization; for k = 2 not a single "
                        "commutator",
                        {{"k_max", 3}}, ok, detail));
  }
  return out;
}

// ---------------------------------------------------------------- chains

std::vector<CheckResult> chains_suite(const Config& cfg) {
  using namespace chains;
  std::vector<CheckResult> out;
  gen::Rng rng(cfg.seed + 2);
  const int N = cfg.random_chains;
  auto dim = [&](int lo, int hi) { return static_cast<int>(gen::integer(rng, lo, hi)); };

  {
    bool ok = true;
    for (int i = 0; i < N; ++i) ok = ok && boundary(boundary(gen::chain(rng, dim(1, 3), 3))).empty();
    out.push_back(check("chains.boundary_squared", "b(b(c)) = 0", {{"chains", N}, {"dim_max", 3}}, ok, "exact"));
  }
  {
    bool ok = true;
    for (int i = 0; i < N; ++i) {
      const Chain c = gen::chain(rng, dim(1, 2), 2, 2);
      const int m = dim(1, 2);
      ok = ok && boundary(subdivide(c, m)) == subdivide(boundary(c), m);
    }
    out.push_back(check("chains.subdivision_chain_map", "b sd^m = sd^m b", {{"chains", N}, {"m_max", 2}}, ok,
                        "exact"));
  }
  {
    bool ok = true;
    for (int i = 0; i < N; ++i) {
      const Chain c = gen::chain(rng, dim(0, 2), 2, 2);
      const int m = i % 3;
      const Chain lhs = boundary(subdiv_homotopy(c, m)) + subdiv_homotopy(boundary(c), m);
      ok = ok && lhs == subdivide(c, m) - c;
    }
    out.push_back(check("chains.subdivision_homotopy", "b D_m + D_m b = sd^m - id",
                        {{"chains", N}, {"m", Json::array({0, 1, 2})}, {"dim_max", 2}}, ok, "exact"));
  }
  {
    bool ok = true;
    for (int i = 0; i < N; ++i) {
      const Chain c = gen::chain(rng, dim(0, 2), 2);
      ok = ok && boundary(prism(c)) + prism(boundary(c)) == include_at(c, 1) - include_at(c, 0);
    }
    out.push_back(check("chains.prism", "b K + K b = j - i for the inclusions at the ends of [0,1]",
                        {{"chains", N}, {"dim_max", 2}}, ok, "exact"));
  }
  {
    bool ok = true;
    Rational worst = 0;
    for (int i = 0; i < N; ++i) {
      const Chain c = boundary(gen::chain(rng, dim(1, 3), 3));
      if (c.empty()) continue;
      const Point x0 = c.terms().begin()->first.front();
      const Contraction phi = Contraction::straight_line(x0, 1);
      const ConeFill f = cone_fill(c, phi);
      ok = ok && boundary(f.filling) == c && f.diameter_bound_holds && phi.satisfies_estimate(vertex_set(c), 3);
      if (!f.input_diameter_squared.is_zero()) {
        worst = max(worst, f.output_diameter_squared / f.input_diameter_squared);
      }
    }
    out.push_back(check("chains.cone_fill", "b(fill c) = c and diam(fill c) <= 2 gamma diam(c)",
                        {{"cycles", N}, {"gamma", 1}}, ok, "largest diameter ratio^2 " + approx(worst)));
  }
  {
    bool ok = true;
    for (int i = 0; i < N; ++i) {
      const Chain c = gen::chain(rng, dim(0, 2), 2, 2);
      const AffineMap f = gen::affine_map(rng, 2, 3);
      const int m = 1 + i % 2;
      ok = ok && subdiv_homotopy(push_forward(f, c), m) == push_forward(f, subdiv_homotopy(c, m));
    }
    out.push_back(check("chains.naturality", "D_m(f c) = f D_m(c) for affine f", {{"chains", N}, {"m_max", 2}}, ok,
                        "exact"));
  }
  {
    bool ok = true;
    for (int i = 0; i < N; ++i) {
      const int k = dim(1, 2);
      const Chain c = Chain::of(gen::simplex(rng, k, 2));
      const Rational d0 = max_simplex_diameter_squared(c);
      const Rational q = Rational(k, k + 1);
      Chain s = c;
      for (int m = 1; m <= 3; ++m) {
        s = subdivide(s);
        Rational bound = d0;
        for (int j = 0; j < 2 * m; ++j) bound *= q;
        ok = ok && max_simplex_diameter_squared(s) <= bound;
      }
    }
    out.push_back(check("chains.subdivision_diameter", "simplices of sd^m s have diameter <= (k/(k+1))^m diam s",
                        {{"simplices", N}, {"m_max", 3}}, ok, "exact squared comparison"));
  }
  {
    bool ok = true;
    for (int i = 0; i < N / 2; ++i) {
      const Chain c = gen::chain(rng, 1, 2, 2);
      const Point centre = {Rational(gen::integer(rng, -2, 2)), Rational(gen::integer(rng, -2, 2))};
      const Region U = Region::ball(centre, 1);
      const Rational eps(1, 2);
      const Part p = part_near(c, U, eps);
      for (const auto& [s, n] : p.subdivided.terms()) {
        ok = ok && diameter_squared(s) < eps * eps;
        const bool in_part = p.part.terms().count(s) > 0;
        ok = ok && in_part == U.meets(s);
      }
    }
    out.push_back(check("chains.part_near", "sd^m c has eps-small simplices and the part keeps exactly those meeting U",
                        {{"chains", N / 2}}, ok, "exact"));
  }
  {
    using homology::SimplicialComplex;
    struct Fixture {
      const char* name;
      std::vector<std::vector<int>> facets;
      std::vector<std::string> expected;
    };
    std::vector<std::vector<int>> torus;
    for (int i = 0; i < 7; ++i) {
      torus.push_back({i, (i + 1) % 7, (i + 3) % 7});
      torus.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    const std::vector<Fixture> fixtures = {
        {"point", {{0}}, {"Z"}},
        {"circle", {{0, 1}, {1, 2}, {0, 2}}, {"Z", "Z"}},
        {"wedge", {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}, {"Z", "Z^2"}},
        {"sphere", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, {"Z", "0", "Z"}},
        {"torus", torus, {"Z", "Z^2", "Z"}},
        {"projective_plane",
         {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1}, {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}},
         {"Z", "Z/2", "0"}},
    };
    bool ok = true;
    std::string detail;
    for (const auto& f : fixtures) {
      const auto groups = homology::homology(SimplicialComplex::from_facets(f.facets).chain_complex());
      std::vector<std::string> got;
      for (const auto& g : groups) got.push_back(g.to_string());
      ok = ok && got == f.expected;
      std::string joined;
      for (const auto& s : got) joined += (joined.empty() ? "" : ", ") + s;
      detail += (detail.empty() ? "" : "; ") + std::string(f.name) + ": " + joined;
    }
    out.push_back(check("chains.homology_fixtures", "Smith normal form homology of standard complexes",
                        {{"fixtures", fixtures.size()}}, ok, detail));
  }
  return out;
}

// ---------------------------------------------------------------- currents

std::vector<CheckResult> currents_suite(const Config& cfg) {
  using namespace currents;
  std::vector<CheckResult> out;
  gen::Rng rng(cfg.seed + 3);
  const MetricGraph earring = MetricGraph::earring(cfg.max_circle);
  const Rational eps = Rational::parse(cfg.epsilon);

  {
    bool ok = true;
    int trials = 0;
    while (trials < cfg.slice_trials) {
      const MetricGraph g = trials % 2 ? earring : gen::tree(rng);
      const Current1 T = gen::current(rng, g, 5);
      const int e = static_cast<int>(gen::integer(rng, 0, g.edge_count() - 1));
      const DistanceFunction d(g, GraphPoint::on_edge(g, e, gen::rational(rng, 0, 1, 5)));
      const Rational r = gen::rational(rng, Rational(1, 97), 2, 97 * 5);
      if (!is_generic_radius(d, T, r)) continue;
      ++trials;
      const Current0 S = slice(T, d, r);
      ok = ok && S == slice_by_definition(g, T, d, r);
      const ArcSet spt = T.support();
      for (const auto& [p, w] : S.points()) ok = ok && d(p) == r && spt.contains(g, p);
    }
    out.push_back(check("currents.slice", "<T, d, r+> = d(T restricted to {d <= r}) - (dT) restricted, supported in "
                                          "{d = r} and spt T",
                        {{"trials", cfg.slice_trials}}, ok, "exact"));
  }
  {
    bool ok = true;
    for (int i = 0; i < cfg.random_currents; ++i) {
      const Current1 T = gen::current(rng, earring, 6);
      Rational parts = 0;
      for (long long n = 1; n <= cfg.max_circle; ++n) {
        const int e = *earring.edge_for_circle(n);
        const MetricGraph L = circle_model(n);
        const GraphMap p = earring_retraction(earring, L, n);
        const GraphMap inc = earring_inclusion(L, earring, n);
        const Current1 local = restrict(T, ArcSet::edge_set(e));
        ok = ok && inc.push_forward(p.push_forward(T)) == local;
        parts += mass_coefficient(earring, local);
      }
      ok = ok && mass_coefficient(earring, T) == parts;
    }
    out.push_back(check("currents.retraction", "(i_n p_n)_# T = T restricted to L_n; mass is additive over circles",
                        {{"currents", cfg.random_currents}, {"circles", cfg.max_circle}}, ok, "exact"));
  }
  {
    bool ok = true;
    for (int i = 0; i < cfg.random_currents; ++i) {
      const MetricGraph g = i % 2 ? earring : gen::tree(rng);
      const GraphChain1 c = gen::pl_chain(rng, g, 5);
      ok = ok && boundary1(g, chain_to_current(c)) == chain_to_current(boundary(g, c));
      ok = ok && chain_to_current(subdivide(c, 2)) == chain_to_current(c);
    }
    out.push_back(check("currents.stokes", "d[c] = [bc] for PL chains; subdivision leaves [c] unchanged",
                        {{"chains", cfg.random_currents}}, ok, "exact"));
  }
  {
    bool ok = true;
    int pieces = 0;
    Rational worst = 0;
    const MetricGraph circle = MetricGraph::circle(1, 3);
    for (int i = 0; i < cfg.random_currents; ++i) {
      const int kind = i % 3;
      const MetricGraph g = kind == 0 ? circle : (kind == 1 ? gen::tree(rng) : MetricGraph::earring(1 + i % 3));
      Current1 T = gen::cycle(rng, g);
      if (i % 2) T += gen::current(rng, g, 3);
      const auto res = reconstruction::current_to_chain(g, T, {eps});
      const auto chk = reconstruction::check_certificate(g, T, res);
      ok = ok && chk.pass && chain_to_current(res.chain) == T;
      for (const auto& st : res.steps) worst = max(worst, st.diameter_bound);
      pieces += static_cast<int>(res.steps.size());
    }
    out.push_back(check("currents.round_trip",
                        "[current_to_chain(T)] = T with every piece of diameter < epsilon, certificates rechecked",
                        {{"currents", cfg.random_currents}, {"epsilon", eps.to_string()}}, ok && worst < eps,
                        std::to_string(pieces) + " pieces, largest diameter bound " + worst.to_string()));
  }
  {
    bool ok = true;
    int survivors = 0;
    for (int i = 0; i < cfg.random_currents; ++i) {
      const Current1 T = gen::cycle(rng, earring, i % 5 == 0 ? 0 : 6);
      const WindingVector v = winding_vector(earring, T);
      std::set<long long> K;
      for (long long k = 2; k <= v.max_abs() + 1; ++k) K.insert(k);
      if (v.divisible_by_all(K)) {
        ++survivors;
        ok = ok && T.empty();
      }
    }
    out.push_back(check("currents.divisible_zero",
                        "a cycle whose winding vector is divisible by every k in {2..max+1} is zero",
                        {{"cycles", cfg.random_currents}}, ok, std::to_string(survivors) + " survivors, all zero"));
  }
  return out;
}

using SuiteFn = std::function<std::vector<CheckResult>(const Config&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"seqorder", seqorder_suite},
      {"earring", earring_suite},
      {"freegroup", freegroup_suite},
      {"chains", chains_suite},
      {"currents", currents_suite},
  };
  return r;
}

}  // namespace

Config Config::from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  Config c;
  read(j, "enumeration_depth", c.enumeration_depth);
  read(j, "oracle_depth", c.oracle_depth);
  read(j, "tau_range", c.tau_range);
  read(j, "monotone_range", c.monotone_range);
  read(j, "density_depth", c.density_depth);
  read(j, "density_grid", c.density_grid);
  read(j, "sigma_depth", c.sigma_depth);
  read(j, "lipschitz_pairs", c.lipschitz_pairs);
  read(j, "recursion_samples", c.recursion_samples);
  read(j, "max_sigma_n", c.max_sigma_n);
  read(j, "pi_digits", c.pi_digits);
  read(j, "random_words", c.random_words);
  read(j, "random_chains", c.random_chains);
  read(j, "random_currents", c.random_currents);
  read(j, "slice_trials", c.slice_trials);
  read(j, "max_circle", c.max_circle);
  read(j, "epsilon", c.epsilon);
  read(j, "seed", c.seed);
  read(j, "inject_failure", c.inject_failure);
  return c;
}

Json Config::to_json() const {
  return {{"enumeration_depth", enumeration_depth},
          {"oracle_depth", oracle_depth},
          {"tau_range", tau_range},
          {"monotone_range", monotone_range},
          {"density_depth", density_depth},
          {"density_grid", density_grid},
          {"sigma_depth", sigma_depth},
          {"lipschitz_pairs", lipschitz_pairs},
          {"recursion_samples", recursion_samples},
          {"max_sigma_n", max_sigma_n},
          {"pi_digits", pi_digits},
          {"random_words", random_words},
          {"random_chains", random_chains},
          {"random_currents", random_currents},
          {"slice_trials", slice_trials},
          {"max_circle", max_circle},
          {"epsilon", epsilon},
          {"seed", seed}};
}

Json SuiteReport::to_json() const {
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"id", c.id},
                           {"statement", c.statement},
                           {"parameters", c.parameters},
                           {"result", c.result},
                           {"discrepancy", c.discrepancy},
                           {"pass", c.pass}});
  }
  return {{"suite", name}, {"pass", pass}, {"checks", checks_json}};
}

std::vector<std::string> SuiteReport::failing_ids() const {
  std::vector<std::string> ids;
  for (const auto& c : checks)
    if (!c.pass) ids.push_back(c.id);
  return ids;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

SuiteReport run_suite(const std::string& name, const Config& config) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  SuiteReport rep;
  rep.name = name;
  for (const auto& [n, fn] : registry()) {
    if (name != "all" && name != n) continue;
    auto part = fn(config);
    rep.checks.insert(rep.checks.end(), part.begin(), part.end());
  }
  if (!config.inject_failure.empty()) {
    auto it = std::find_if(rep.checks.begin(), rep.checks.end(),
                           [&](const CheckResult& c) { return c.id == config.inject_failure; });
    if (it != rep.checks.end()) {
      it->pass = false;
      it->result += " (failure injected)";
    } else {
      rep.checks.push_back(check(config.inject_failure, "injected failure", Json::object(), false, "failure injected"));
    }
  }
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) { return c.pass; });
  return rep;
}

}  // namespace ichom::suites
