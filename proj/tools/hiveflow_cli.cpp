#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hiveflow/enumerate.hpp"
#include "hiveflow/oracles.hpp"
#include "hiveflow/render.hpp"

using nlohmann::json;
using namespace hiveflow;

namespace {

Partition parse_partition(const std::string& s, const char* name) {
  Partition p;
  if (s.empty()) return p;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != tok.size())
      throw std::invalid_argument(std::string(name) + ": bad integer '" + tok + "'");
    p.push_back(v);
  }
  if (!is_partition(p))
    throw std::invalid_argument(std::string(name) + " must be weakly decreasing and nonnegative");
  return p;
}

Partition strip_zeros(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

struct Triple {
  Partition lambda, mu, nu; // trailing zeros stripped
  int n = 1;
};

// parses and validates the common triple flags; |lambda| + |mu| = |nu| is
// enforced here, before any verb runs
Triple make_triple(const std::string& ls, const std::string& ms, const std::string& ns,
                   int n_override) {
  Triple t;
  t.lambda = strip_zeros(parse_partition(ls, "--lambda"));
  t.mu = strip_zeros(parse_partition(ms, "--mu"));
  t.nu = strip_zeros(parse_partition(ns, "--nu"));
  int64_t sl = 0, sm = 0, sv = 0;
  for (auto x : t.lambda) sl = checked_add(sl, x);
  for (auto x : t.mu) sm = checked_add(sm, x);
  for (auto x : t.nu) sv = checked_add(sv, x);
  if (checked_add(sl, sm) != sv) throw std::invalid_argument("|lambda| + |mu| must equal |nu|");
  size_t len = std::max(std::max(t.lambda.size(), t.mu.size()), t.nu.size());
  t.n = n_override > 0 ? n_override : (int)std::max<size_t>(len, 1);
  if (t.n < (int)len) throw std::invalid_argument("--n is smaller than the partition lengths");
  return t;
}

json flow_json(const FlowClass& f) { return json{{"n", f.n}, {"delta", f.delta}}; }

int cmd_compute(const Triple& t, const std::string& format, int64_t limit) {
  Lattice L(t.n);
  BorderSpec b = border_spec(L, t.lambda, t.mu, t.nu);
  EnumCounters ctr;
  std::vector<FlowClass> flows;
  std::function<void(const FlowClass&, int64_t)> keep;
  if (limit > 0)
    keep = [&](const FlowClass& g, int64_t) {
      if ((int64_t)flows.size() < limit) flows.push_back(g);
    };
  int64_t c = lr_compute(L, b, &ctr, op_budget_from_env(), keep);
  if (format == "json") {
    json out{{"lambda", t.lambda}, {"mu", t.mu},          {"nu", t.nu},
             {"n", t.n},           {"coefficient", c},    {"ops", ctr.ops}};
    if (limit > 0) {
      out["flows"] = json::array();
      for (const FlowClass& f : flows) out["flows"].push_back(flow_json(f));
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "coefficient: " << c << "\n";
    for (const FlowClass& f : flows) std::cout << to_json(f) << "\n";
  }
  return c > 0 ? 0 : 2;
}

int cmd_decide(const Triple& t, int64_t threshold, const std::string& format) {
  Lattice L(t.n);
  BorderSpec b = border_spec(L, t.lambda, t.mu, t.nu);
  EnumCounters ctr;
  bool reached = lr_threshold(L, b, threshold, &ctr, op_budget_from_env());
  if (format == "json")
    std::cout << json{{"threshold", threshold}, {"reached", reached}}.dump() << "\n";
  else
    std::cout << (reached ? "true" : "false") << "\n";
  return reached ? 0 : 2;
}

int cmd_enumerate(const Triple& t, int64_t limit) {
  Lattice L(t.n);
  BorderSpec b = border_spec(L, t.lambda, t.mu, t.nu);
  EnumCounters ctr;
  int64_t count = 0;
  auto dump = [&](const FlowClass& g, int64_t) {
    std::cout << to_json(g) << "\n";
    ++count;
  };
  if (limit > 0)
    lr_threshold(L, b, limit, &ctr, op_budget_from_env(), dump);
  else
    lr_compute(L, b, &ctr, op_budget_from_env(), dump);
  return count > 0 ? 0 : 2;
}

int cmd_oracle(const std::string& ls, const std::string& ms, const std::string& ns, int n_override,
               const std::string& format) {
  Partition l = strip_zeros(parse_partition(ls, "--lambda"));
  Partition m = strip_zeros(parse_partition(ms, "--mu"));
  Partition v = strip_zeros(parse_partition(ns, "--nu"));
  int64_t lr = lr_rule_count(l, m, v);
  int64_t sl = 0, sm = 0, sv = 0;
  for (auto x : l) sl = checked_add(sl, x);
  for (auto x : m) sm = checked_add(sm, x);
  for (auto x : v) sv = checked_add(sv, x);
  int64_t hive = 0;
  if (checked_add(sl, sm) == sv) {
    size_t len = std::max(std::max(l.size(), m.size()), v.size());
    int n = n_override > 0 ? n_override : (int)std::max<size_t>(len, 1);
    if (n < (int)len) throw std::invalid_argument("--n is smaller than the partition lengths");
    Lattice L(n);
    hive = hive_count_bruteforce(L, border_spec(L, l, m, v));
  }
  if (format == "json")
    std::cout << json{{"lr_rule", lr}, {"hive_bruteforce", hive}, {"agree", lr == hive}}.dump()
              << "\n";
  else
    std::cout << "lr_rule: " << lr << "\nhive_bruteforce: " << hive
              << "\nagree: " << (lr == hive ? "yes" : "no") << "\n";
  if (lr != hive) {
    std::cerr << "error: the two oracles disagree\n";
    return 5;
  }
  return lr > 0 ? 0 : 2;
}

int cmd_stretch(const Triple& t, int64_t M, const std::string& format) {
  int64_t budget = op_budget_from_env();
  std::vector<int64_t> table;
  for (int64_t k = 1; k <= M; ++k)
    table.push_back(stretched_coefficient(t.lambda, t.mu, t.nu, k, nullptr, budget));
  bool linear_expected = table[0] == 2;
  bool linear_ok = true;
  if (linear_expected)
    for (int64_t k = 1; k <= M; ++k) linear_ok = linear_ok && table[k - 1] == k + 1;
  if (format == "json") {
    json out{{"table", table}};
    if (linear_expected) out["linear"] = linear_ok;
    std::cout << out.dump() << "\n";
  } else {
    for (int64_t k = 1; k <= M; ++k) std::cout << "M=" << k << ": " << table[k - 1] << "\n";
    if (linear_expected)
      std::cout << "linear growth: " << (linear_ok ? "confirmed" : "violated") << "\n";
  }
  if (table[0] == 0) return 2;
  if (linear_expected && !linear_ok) return 5;
  return 0;
}

int cmd_sweep(int max_parts, int64_t max_norm, const std::string& out_path) {
  std::ofstream fout;
  if (!out_path.empty()) {
    fout.open(out_path);
    if (!fout) throw std::invalid_argument("cannot open " + out_path);
  }
  std::ostream& os = out_path.empty() ? std::cout : fout;
  int64_t budget = op_budget_from_env();
  os << sweep_csv_header() << "\n";
  bool agree = true;
  for_each_triple(max_parts, max_norm,
                  [&](const Partition& l, const Partition& m, const Partition& v) {
                    int n = (int)std::max(std::max(l.size(), m.size()), v.size());
                    Lattice L(std::max(n, 1));
                    BorderSpec b = border_spec(L, l, m, v);
                    int64_t lr = lr_rule_count(l, m, v);
                    int64_t hive = hive_count_bruteforce(L, b);
                    int64_t flow = lr_compute(L, b, nullptr, budget);
                    os << sweep_csv_row(l, m, v, lr, hive, flow) << "\n";
                    agree = agree && lr == hive && hive == flow;
                  });
  if (!agree) {
    std::cerr << "error: oracle disagreement in sweep\n";
    return 5;
  }
  return 0;
}

int cmd_render(const std::string& ls, const std::string& ms, const std::string& ns, int n_override,
               const std::string& seed_flow, const std::string& out_path) {
  FlowClass f;
  if (!seed_flow.empty()) {
    std::ifstream in(seed_flow);
    if (!in) throw std::invalid_argument("cannot open " + seed_flow);
    std::stringstream ss;
    ss << in.rdbuf();
    std::optional<FlowClass> fl = flow_from_json(ss.str());
    if (!fl) throw std::invalid_argument("malformed flow JSON in " + seed_flow);
    f = *fl;
  } else {
    if (ns.empty()) throw std::invalid_argument("render needs --seed-flow or a full triple");
    Triple t = make_triple(ls, ms, ns, n_override);
    Lattice L(t.n);
    std::optional<FlowClass> f0 = initial_hive_flow(L, border_spec(L, t.lambda, t.mu, t.nu));
    if (!f0) {
      std::cerr << "error: the polytope is empty, nothing to draw\n";
      return 2;
    }
    f = *f0;
  }
  Lattice L(f.n);
  if (!is_conserved(L, f)) throw std::invalid_argument("flow is not conserved");
  std::string svg = render_flow_svg(L, f);
  if (out_path.empty()) {
    std::cout << svg;
  } else {
    std::ofstream o(out_path);
    if (!o) throw std::invalid_argument("cannot open " + out_path);
    o << svg;
  }
  return 0;
}

int cmd_selftest() {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok - " : "FAIL - ") << what << "\n";
    failures += !ok;
  };

  struct {
    int n, nvert, nedge, ntri, nrhombi, nturn;
  } sizes[] = {{1, 3, 3, 1, 0, 6}, {3, 10, 18, 9, 9, 54}, {5, 21, 45, 25, 30, 150}};
  for (auto s : sizes) {
    Lattice L(s.n);
    report(L.nvert == s.nvert && L.nedge == s.nedge && L.ntri == s.ntri &&
               L.nrhombi == s.nrhombi && L.nturn == s.nturn,
           "lattice sizes n=" + std::to_string(s.n));
  }

  {
    Partition lam{4, 2}, mu{5, 2}, nu{6, 4, 3};
    Lattice L(3);
    BorderSpec b = border_spec(L, lam, mu, nu);
    int64_t flow = lr_compute(L, b);
    int64_t lr = lr_rule_count(lam, mu, nu);
    int64_t hive = hive_count_bruteforce(L, b);
    report(flow == 2 && lr == 2 && hive == 2, "worked example counts 2 on all three engines");
  }

  {
    int64_t triples = 0, nonzero = 0, mismatches = 0;
    for_each_triple(3, 6, [&](const Partition& l, const Partition& m, const Partition& v) {
      int n = (int)std::max(std::max(l.size(), m.size()), v.size());
      Lattice L(std::max(n, 1));
      BorderSpec b = border_spec(L, l, m, v);
      int64_t lr = lr_rule_count(l, m, v);
      int64_t hive = hive_count_bruteforce(L, b);
      int64_t flow = lr_compute(L, b);
      ++triples;
      nonzero += lr > 0;
      mismatches += !(lr == hive && hive == flow);
    });
    report(mismatches == 0, "sweep agreement over " + std::to_string(triples) + " triples (" +
                                std::to_string(nonzero) + " nonzero)");
  }

  return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Littlewood-Richardson coefficients via lattice flows"};
  app.require_subcommand(1);

  std::string ls, ms, ns, format = "text", seed_flow, out_path;
  int n_override = 0;
  int64_t limit = 0, threshold = 1, M = 4, max_norm = 6;
  int max_parts = 3;

  auto add_triple = [&](CLI::App* c, bool required) {
    auto* ol = c->add_option("--lambda", ls, "partition, comma separated");
    auto* om = c->add_option("--mu", ms, "partition, comma separated");
    auto* on = c->add_option("--nu", ns, "partition, comma separated");
    if (required) {
      ol->required();
      om->required();
      on->required();
    }
    c->add_option("--n", n_override, "lattice size (default: longest partition)");
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* c_compute = app.add_subcommand("compute", "count the polytope's lattice points");
  add_triple(c_compute, true);
  add_format(c_compute);
  c_compute->add_option("--limit", limit, "also print up to this many flows")
      ->check(CLI::NonNegativeNumber);

  CLI::App* c_decide = app.add_subcommand("decide", "decide coefficient >= threshold");
  add_triple(c_decide, true);
  add_format(c_decide);
  c_decide->add_option("--threshold", threshold, "threshold t >= 1")->check(CLI::PositiveNumber);

  CLI::App* c_enum = app.add_subcommand("enumerate", "stream flows as JSON lines");
  add_triple(c_enum, true);
  c_enum->add_option("--limit", limit, "stop after this many flows (0: all)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* c_oracle = app.add_subcommand("oracle", "run both brute-force counters");
  add_triple(c_oracle, true);
  add_format(c_oracle);

  CLI::App* c_stretch = app.add_subcommand("stretch", "coefficients of stretched triples");
  add_triple(c_stretch, true);
  add_format(c_stretch);
  c_stretch->add_option("--M", M, "largest stretch factor")->check(CLI::PositiveNumber);

  CLI::App* c_sweep = app.add_subcommand("sweep", "CSV cross-check of all three engines");
  c_sweep->add_option("--max-parts", max_parts, "partition length bound")
      ->check(CLI::PositiveNumber);
  c_sweep->add_option("--max-norm", max_norm, "|nu| bound")->check(CLI::PositiveNumber);
  c_sweep->add_option("--out", out_path, "write CSV here instead of stdout");

  CLI::App* c_render = app.add_subcommand("render", "draw a flow as SVG");
  add_triple(c_render, false);
  c_render->add_option("--seed-flow", seed_flow, "flow JSON file to draw");
  c_render->add_option("--out", out_path, "output SVG path (default stdout)");

  app.add_subcommand("selftest", "built-in consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_compute->parsed()) return cmd_compute(make_triple(ls, ms, ns, n_override), format, limit);
    if (c_decide->parsed()) return cmd_decide(make_triple(ls, ms, ns, n_override), threshold, format);
    if (c_enum->parsed()) return cmd_enumerate(make_triple(ls, ms, ns, n_override), limit);
    if (c_oracle->parsed()) return cmd_oracle(ls, ms, ns, n_override, format);
    if (c_stretch->parsed()) return cmd_stretch(make_triple(ls, ms, ns, n_override), M, format);
    if (c_sweep->parsed()) return cmd_sweep(max_parts, max_norm, out_path);
    if (c_render->parsed()) return cmd_render(ls, ms, ns, n_override, seed_flow, out_path);
    return cmd_selftest();
  } catch (const budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
