// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed or
// an output file could not be written, 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ichom/earring.hpp"
#include "ichom/freegroup.hpp"
#include "ichom/homology.hpp"
#include "ichom/reconstruction.hpp"
#include "ichom/seqorder.hpp"
#include "ichom/serialize.hpp"
#include "ichom/suites.hpp"

using namespace ichom;
using Json = nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config_path;
  bool json = false;
  int depth = -1;
  int samples = -1;
  std::string csv, svg;
  std::string inject;
  std::string epsilon = "1/2";
  std::string seq, suite, file;
  int n = 0;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

suites::Config load_config(const Options& o) {
  suites::Config c;
  if (!o.config_path.empty()) {
    try {
      c = suites::Config::from_json(read_json_file(o.config_path));
    } catch (const Json::exception& e) {
      throw UsageError(o.config_path + ": " + e.what());
    }
  }
  if (o.samples == 0) throw UsageError("--samples must be positive");
  return c;
}

PiEnclosure pi_of(const suites::Config& c) {
  return c.pi_digits > 0 ? PiEnclosure::with_digits(c.pi_digits) : PiEnclosure::standard();
}

seqorder::Seq parse_bounded(const std::string& literal) {
  try {
    seqorder::Seq s = seqorder::Seq::parse(literal);
    if (!s.is_bounded()) throw UsageError("sequence " + s.to_string() + " is not in B (needs s(i) <= i)");
    return s;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

int cmd_tau(const Options& o) {
  const auto cfg = load_config(o);
  const auto s = parse_bounded(o.seq);
  const int depth = o.depth > 0 ? o.depth : cfg.oracle_depth;
  if (depth < s.length()) throw UsageError("--depth must be at least the sequence length");
  const Rational t = seqorder::tau(s);
  const auto br = seqorder::tau_oracle(s, depth);
  const bool ok = br.lo <= t && t <= br.hi;
  if (o.json) {
    std::cout << Json{{"seq", s.to_string()}, {"tau", t.to_string()}, {"depth", depth},
                      {"oracle", {{"lo", br.lo.to_string()}, {"hi", br.hi.to_string()}}}, {"pass", ok}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << t << " in [" << br.lo << ", " << br.hi << "] " << (ok ? "OK" : "FAIL") << '\n';
  }
  return ok ? kPass : kFail;
}

int cmd_enum(const Options& o) {
  const auto cfg = load_config(o);
  const int cap = std::max(seqorder::kDefaultEnumerationCap, cfg.enumeration_depth);
  if (o.n < 1 || o.n > cap) throw UsageError("n must lie in [1, " + std::to_string(cap) + "]");
  const auto b = seqorder::enumerate_B(o.n, cap);
  if (o.json) {
    Json list = Json::array();
    for (const auto& s : b) list.push_back(s.to_string());
    std::cout << Json{{"n", o.n}, {"count", b.size()}, {"sequences", list}}.dump(2) << '\n';
  } else {
    for (const auto& s : b) std::cout << s.to_string() << '\n';
    std::cout << "count " << b.size() << '\n';
  }
  return kPass;
}

int cmd_density(const Options& o) {
  const auto cfg = load_config(o);
  const int depth = o.depth > 0 ? o.depth : cfg.density_depth;
  const int grid = o.samples > 0 ? o.samples : cfg.density_grid;
  if (grid < 2) throw UsageError("--samples (grid) must be at least 2");
  const auto rows = seqorder::density_profile(depth, grid);
  Rational worst = 0;
  for (const auto& r : rows) worst = max(worst, r.distance);
  if (!o.csv.empty()) {
    auto out = open_output(o.csv);
    out << "grid_point,distance\n";
    for (const auto& r : rows) out << r.grid_point << ',' << r.distance << '\n';
  }
  if (o.json) {
    std::cout << Json{{"depth", depth}, {"grid", grid}, {"max_gap", worst.to_string()}}.dump(2) << '\n';
  } else {
    std::cout << "max gap " << worst << " (depth " << depth << ", grid " << grid << ")\n";
  }
  return kPass;
}

int cmd_sigma(const Options& o) {
  const auto cfg = load_config(o);
  if (o.n < 1 || o.n > cfg.max_sigma_n) throw UsageError("n must lie in [1, " + std::to_string(cfg.max_sigma_n) + "]");
  const int samples = o.samples > 0 ? o.samples : 256;
  const int depth = o.depth > 0 ? o.depth : cfg.sigma_depth;
  const auto pts = earring::sample_sigma(o.n, samples, depth, pi_of(cfg));
  if (!o.csv.empty()) {
    auto out = open_output(o.csv);
    earring::write_sigma_csv(out, pts);
  }
  if (!o.svg.empty()) {
    auto out = open_output(o.svg);
    earring::write_sigma_svg(out, pts);
  }
  Rational worst = 0;
  for (const auto& p : pts) worst = max(worst, p.value.error_bound);
  if (o.json) {
    std::cout << Json{{"n", o.n}, {"samples", samples}, {"depth", depth}, {"max_error_bound", worst.to_string()}}
                     .dump(2)
              << '\n';
  } else if (o.csv.empty() && o.svg.empty()) {
    earring::write_sigma_csv(std::cout, pts);
  } else {
    std::cout << samples << " samples written, max error bound " << worst << '\n';
  }
  return kPass;
}

int cmd_word(const Options& o) {
  const auto cfg = load_config(o);
  if (o.n < 1 || o.n > 3) throw UsageError("k must lie in [1, 3]");
  const PiEnclosure pi = pi_of(cfg);
  const int k = o.n;
  const freegroup::Word w = earring::project_word(earring::sigma1_truncation(k, pi), k, pi);
  const long long kf = to_int64(factorial(k));
  const auto expected = freegroup::commutator_power(freegroup::Word::parse("a"), freegroup::Word::parse("b"), kf);
  const bool equal = w == expected;
  const auto ab = freegroup::abelianize(w);
  std::optional<freegroup::CommutatorDecision> single;
  if (k <= 2) single = freegroup::is_single_commutator(w);
  const bool ok = equal && ab.is_zero() && (!single || single->is_commutator == (k == 1));
  if (o.json) {
    Json j = {{"k", k}, {"word", w.to_string()}, {"equals_commutator_power", equal}, {"power", kf},
              {"abelianization", ab.exponent_sums}, {"pass", ok}};
    if (single) j["single_commutator"] = serialize::commutator_report(w, *single);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << w.to_string() << "; " << (equal ? "equals" : "differs from") << " [a,b]^" << kf
              << "; abelianization " << ab.to_string();
    if (single) std::cout << "; is_single_commutator: " << (single->is_commutator ? "true" : "false");
    std::cout << '\n';
  }
  return ok ? kPass : kFail;
}

int cmd_suite(const Options& o) {
  auto cfg = load_config(o);
  if (!suites::is_suite(o.suite)) throw UsageError("unknown suite '" + o.suite + "'");
  if (o.depth > 0) cfg.sigma_depth = o.depth;
  if (o.samples > 0) cfg.recursion_samples = o.samples;
  if (!o.inject.empty()) cfg.inject_failure = o.inject;
  const auto rep = suites::run_suite(o.suite, cfg);
  if (o.json) {
    Json j = rep.to_json();
    j["config"] = cfg.to_json();
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.result << '\n';
    }
    std::cout << "suite " << rep.name << ": " << (rep.pass ? "PASS" : "FAIL") << " (" << rep.checks.size()
              << " checks)\n";
    for (const auto& id : rep.failing_ids()) std::cerr << "failing check: " << id << '\n';
  }
  return rep.pass ? kPass : kFail;
}

int cmd_homology(const Options& o) {
  homology::ChainComplex cc;
  try {
    cc = serialize::parse_complex(read_json_file(o.file));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const Json::exception& e) {
    throw UsageError(e.what());
  }
  const auto groups = homology::homology(cc);
  if (o.json) {
    std::cout << Json{{"homology", serialize::homology_groups(groups)}}.dump(2) << '\n';
  } else {
    for (const auto& g : groups) std::cout << "H_" << g.degree << " = " << g.to_string() << '\n';
  }
  return kPass;
}

int cmd_current_demo(const Options& o) {
  const auto cfg = load_config(o);
  const Json input = read_json_file(o.file);
  Rational eps;
  std::optional<graph::MetricGraph> g;
  currents::Current1 T;
  try {
    eps = Rational::parse(o.epsilon);
    if (eps <= Rational(0)) throw std::invalid_argument("--epsilon must be positive");
    const Json gj = input.contains("graph") ? input.at("graph") : Json{{"kind", "earring"}, {"circles", cfg.max_circle}};
    g.emplace(serialize::parse_graph(gj));
    T = serialize::parse_current1(*g, input.contains("current") ? input.at("current") : input);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const Json::exception& e) {
    throw UsageError(e.what());
  }
  const auto res = reconstruction::current_to_chain(*g, T, {eps});
  const auto chk = reconstruction::check_certificate(*g, T, res);
  if (o.json) {
    std::cout << Json{{"graph", serialize::graph_spec(*g)},
                      {"current", serialize::current1(*g, T)},
                      {"certificate", serialize::reconstruction(*g, res)},
                      {"check", serialize::certificate_check(chk)}}
                     .dump(2)
              << '\n';
  } else {
    Rational worst = 0;
    for (const auto& st : res.steps) worst = max(worst, st.diameter_bound);
    std::cout << "epsilon " << eps << " (" << g->unit_name() << "), radius " << res.radius << ", "
              << res.steps.size() << " pieces, " << res.chain.terms().size() << " segments\n";
    std::cout << "largest piece diameter bound " << worst << '\n';
    std::cout << "certificate " << (chk.pass ? "PASS" : "FAIL") << " (" << chk.items.size() << " checks)\n";
    for (const auto& it : chk.items)
      if (!it.pass) std::cerr << "failing check: " << it.id << '\n';
  }
  return chk.pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification workbench for the Hawaiian Earring constructions"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config_path, "JSON configuration file")->check(CLI::ExistingFile);
  app.add_flag("--json", o.json, "machine-readable output");

  auto* tau = app.add_subcommand("tau", "tau(s) and its oracle interval");
  tau->add_option("seq", o.seq, "sequence literal, e.g. 1,1,2")->required();
  tau->add_option("--depth", o.depth, "oracle depth");

  auto* en = app.add_subcommand("enum-b", "list B_n in increasing order");
  en->add_option("n", o.n)->required();

  auto* dens = app.add_subcommand("density", "largest grid distance to the intervals");
  dens->add_option("--depth", o.depth, "interval generation");
  dens->add_option("--samples", o.samples, "grid size");
  dens->add_option("--csv", o.csv, "write grid_point,distance rows");

  auto* sig = app.add_subcommand("sigma", "sample sigma_n");
  sig->add_option("n", o.n)->required();
  sig->add_option("--samples", o.samples, "number of equispaced times");
  sig->add_option("--depth", o.depth, "resolution depth");
  sig->add_option("--csv", o.csv, "CSV output path");
  sig->add_option("--svg", o.svg, "SVG output path");

  auto* word = app.add_subcommand("word", "projected word of sigma_1 at level k");
  word->add_option("k", o.n)->required();

  auto* suite = app.add_subcommand("suite", "run an invariant suite");
  suite->add_option("name", o.suite, "seqorder, earring, freegroup, chains, currents or all")->required();
  suite->add_option("--depth", o.depth, "sigma resolution depth");
  suite->add_option("--samples", o.samples, "recursion samples");
  suite->add_option("--inject-failure", o.inject)->group("");

  auto* hom = app.add_subcommand("homology", "integral homology of a complex");
  hom->add_option("complex", o.file, "JSON complex")->required();

  auto* demo = app.add_subcommand("current-demo", "represent a 1-current by a chain of short segments");
  demo->add_option("current", o.file, "JSON current, optionally with a graph")->required();
  demo->add_option("--epsilon", o.epsilon, "target diameter p/q in graph units");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (tau->parsed()) return cmd_tau(o);
    if (en->parsed()) return cmd_enum(o);
    if (dens->parsed()) return cmd_density(o);
    if (sig->parsed()) return cmd_sigma(o);
    if (word->parsed()) return cmd_word(o);
    if (suite->parsed()) return cmd_suite(o);
    if (hom->parsed()) return cmd_homology(o);
    if (demo->parsed()) return cmd_current_demo(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
