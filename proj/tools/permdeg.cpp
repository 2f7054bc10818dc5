// permdeg: minimal faithful permutation and quasi-permutation degrees of
// p-groups given by power-commutator presentations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "permdeg/bounds.hpp"
#include "permdeg/catalog.hpp"
#include "permdeg/mu.hpp"
#include "permdeg/quasiperm.hpp"

using namespace permdeg;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "permdeg/1";

enum Exit { kOk = 0, kMismatch = 1, kBudget = 2, kInput = 3 };

struct Config {
  std::string target;
  int p = 0;
  std::vector<std::string> params;
  double budget = 0;
  double max_subgroups = 0;
  bool exact = false;
  bool all = false;
  bool cross_check = false;
  std::string certificate;
  std::string format = "text";
  std::string catalog;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

std::map<std::string, std::string> param_map(const std::vector<std::string>& kv) {
  std::map<std::string, std::string> out;
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects k=v, got '" + s + "'");
    out[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return out;
}

void check_prime(int p) {
  if (p < 3 || p > 97 || !is_prime(p)) throw InputError("prime must be an odd prime <= 97, got " + std::to_string(p));
}

SearchBudget budget_of(const Config& cfg) {
  SearchBudget b;
  if (cfg.budget < 0 || cfg.max_subgroups < 0) throw InputError("budget must be positive");
  if (cfg.budget > 0) b.max_nodes = static_cast<std::uint64_t>(cfg.budget);
  if (cfg.max_subgroups > 0) b.max_subgroups = static_cast<std::uint64_t>(cfg.max_subgroups);
  return b;
}

struct Loaded {
  Presentation pres;
  Bindings bindings;
  std::shared_ptr<PcGroup> group;
};

Loaded load(const Config& cfg) {
  check_prime(cfg.p);
  Loaded l;
  l.pres = load_presentation(cfg.target);
  l.bindings = permdeg::bind(l.pres, cfg.p, param_map(cfg.params));
  l.group = refine(l.pres, l.bindings);
  return l;
}

std::vector<std::string> gens_of(const PcGroup& g, const Subgroup& s) {
  std::vector<std::string> out;
  for (const auto& x : s.basis()) out.push_back(g.format(x));
  return out;
}

std::string angle(const std::vector<std::string>& gens) {
  std::string s;
  for (const auto& x : gens) s += (s.empty() ? "" : ",") + x;
  return "<" + s + ">";
}

ordered_json group_json(const Loaded& l) {
  const PcGroup& g = *l.group;
  ordered_json j;
  j["name"] = l.pres.name;
  j["p"] = g.p();
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : l.bindings.params) params[k] = v;
  j["params"] = params;
  j["order"] = g.order();
  Subgroup z = center(g);
  j["center_order"] = z.order();
  j["center_rank"] = rank_d(z);
  j["exponent"] = exponent(g);
  try {
    ordered_json cd = ordered_json::object();
    for (const auto& [d, n] : character_degrees(g)) cd[std::to_string(d)] = n;
    j["cd"] = cd;
  } catch (const InputError&) {
    j["cd"] = nullptr;
  }
  return j;
}

void group_text(std::ostream& out, const ordered_json& j) {
  out << "group " << j["name"].get<std::string>() << " p=" << j["p"];
  for (const auto& [k, v] : j["params"].items()) out << " " << k << "=" << v;
  out << "\norder " << j["order"] << ", |Z| " << j["center_order"] << ", d(Z) " << j["center_rank"] << ", exp "
      << j["exponent"] << "\n";
  if (!j["cd"].is_null()) {
    out << "cd (degree:count)";
    for (const auto& [d, n] : j["cd"].items()) out << " " << d << ":" << n;
    out << "\n";
  }
}

ordered_json oracles_json(const std::vector<BoundCheck>& checks) {
  ordered_json a = ordered_json::array();
  for (const auto& b : checks)
    if (b.applicable) a.push_back({{"name", b.name}, {"satisfied", b.satisfied}, {"detail", b.detail}});
  return a;
}

void oracles_text(std::ostream& out, const ordered_json& a) {
  for (const auto& b : a)
    out << "  " << (b["satisfied"].get<bool>() ? "ok   " : "FAIL ") << b["name"].get<std::string>() << ": "
        << b["detail"].get<std::string>() << "\n";
}

bool oracles_ok(const std::vector<BoundCheck>& checks) {
  for (const auto& b : checks)
    if (b.applicable && !b.satisfied) return false;
  return true;
}

void write_rep(const PcGroup& g, const std::vector<Subgroup>& parts, const std::string& path) {
  auto text = format_perm_rep(coset_action(g, parts));
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void emit(const Config& cfg, const ordered_json& j, const std::string& text) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int budget_exit(const Config& cfg, ordered_json j, const ResourceError& e) {
  j["status"] = "budget-exhausted";
  j["best_bound"] = e.best_bound();
  j["reached"] = e.reached();
  std::ostringstream t;
  t << "budget exhausted (" << e.what() << "); best degree found " << e.best_bound() << " is an upper bound only\n";
  emit(cfg, j, t.str());
  return kBudget;
}

int cmd_parse(const Config& cfg) {
  auto l = load(cfg);
  const PcGroup& g = *l.group;
  ordered_json j{{"schema", kSchema}, {"command", "parse"}, {"group", group_json(l)}};
  j["pc_generators"] = g.n();
  ordered_json names = ordered_json::object();
  for (const auto& [n, x] : g.names()) names[n] = g.format(x);
  j["named"] = names;
  auto bad = consistency_check(g);
  j["consistency"] = bad;
  std::ostringstream t;
  group_text(t, j["group"]);
  t << "pc generators " << g.n() << "\n";
  for (const auto& [n, x] : g.names()) t << "  " << n << " -> " << g.format(x) << "\n";
  t << (bad.empty() ? "consistent\n" : "INCONSISTENT: " + std::to_string(bad.size()) + " failing test words\n");
  emit(cfg, j, t.str());
  return bad.empty() ? kOk : kMismatch;
}

int cmd_mu(const Config& cfg, bool export_only) {
  auto l = load(cfg);
  const PcGroup& g = *l.group;
  ordered_json j{{"schema", kSchema}, {"command", export_only ? "export" : "mu"}, {"group", group_json(l)}};
  MuResult r;
  try {
    r = minimal_degree(g, budget_of(cfg));
  } catch (const ResourceError& e) {
    return budget_exit(cfg, j, e);
  }
  if (export_only) {
    write_rep(g, r.cert.parts, cfg.certificate);
    return kOk;
  }
  auto checks = bound_oracles(g, r.mu);
  j["status"] = "exact";
  j["mu"] = r.mu;
  j["by_formula"] = r.by_formula;
  ordered_json parts = ordered_json::array();
  for (const auto& s : r.cert.parts) parts.push_back({{"index", s.index()}, {"generators", gens_of(g, s)}});
  j["certificate"] = parts;
  j["stats"] = {{"nodes", r.stats.nodes}, {"subgroups", r.stats.subgroups}};
  j["oracles"] = oracles_json(checks);
  std::ostringstream t;
  group_text(t, j["group"]);
  t << "mu " << r.mu << (r.by_formula ? " (invariant factor formula)" : "") << "\n";
  t << "certificate: " << r.cert.parts.size() << " part" << (r.cert.parts.size() == 1 ? "" : "s") << "\n";
  for (const auto& s : r.cert.parts) t << "  index " << s.index() << " " << angle(gens_of(g, s)) << "\n";
  if (!j["oracles"].empty()) t << "bound oracles:\n";
  oracles_text(t, j["oracles"]);
  emit(cfg, j, t.str());
  if (!cfg.certificate.empty()) write_rep(g, r.cert.parts, cfg.certificate);
  return oracles_ok(checks) ? kOk : kMismatch;
}

int cmd_c(const Config& cfg) {
  auto l = load(cfg);
  const PcGroup& g = *l.group;
  ordered_json j{{"schema", kSchema}, {"command", "c"}, {"group", group_json(l)}};
  CResult r;
  std::optional<MuResult> mu;
  try {
    r = minimal_c(g, budget_of(cfg));
    if (cfg.cross_check) mu = minimal_degree(g, budget_of(cfg));
  } catch (const ResourceError& e) {
    return budget_exit(cfg, j, e);
  }
  auto checks = bound_oracles(g, r.c, &r.cert);
  j["status"] = "exact";
  j["c"] = r.c;
  j["by_formula"] = r.by_formula;
  ordered_json classes = ordered_json::array();
  std::vector<Subgroup> kernels;
  for (const auto& cc : r.cert.classes) {
    classes.push_back({{"H", gens_of(g, cc.H)},
                       {"K", gens_of(g, cc.K)},
                       {"conductor", cc.conductor},
                       {"induced_degree", cc.induced_degree},
                       {"cost", cc.cost()}});
    kernels.push_back(cc.K);
  }
  j["certificate"] = classes;
  j["stats"] = {{"nodes", r.stats.nodes}, {"subgroups", r.stats.subgroups}};
  j["oracles"] = oracles_json(checks);
  std::ostringstream t;
  group_text(t, j["group"]);
  t << "c " << r.c << (r.by_formula ? " (invariant factor formula)" : "") << "\n";
  t << "certificate: " << r.cert.classes.size() << " Galois class" << (r.cert.classes.size() == 1 ? "" : "es") << "\n";
  for (const auto& cc : r.cert.classes)
    t << "  H=" << angle(gens_of(g, cc.H)) << " K=" << angle(gens_of(g, cc.K)) << " |G:K|=" << cc.cost() << "\n";
  bool ok = oracles_ok(checks);
  if (mu) {
    bool eq = mu->mu == r.c;
    ok = ok && eq;
    j["cross_check"] = {{"mu", mu->mu}, {"equal", eq}};
    t << "cross-check " << (eq ? "OK" : "MISMATCH") << " (mu = " << mu->mu << ")\n";
  }
  if (!j["oracles"].empty()) t << "bound oracles:\n";
  oracles_text(t, j["oracles"]);
  emit(cfg, j, t.str());
  // The kernels of an optimal class set are a minimal faithful permutation representation.
  if (!cfg.certificate.empty()) write_rep(g, kernels, cfg.certificate);
  return ok ? kOk : kMismatch;
}

ordered_json report_json(const EntryReport& r) {
  ordered_json j{{"id", r.id}, {"params", r.params}, {"status", status_name(r.status)}};
  if (r.expected) j["expected"] = r.expected;
  if (r.witness_degree) j["witness_degree"] = r.witness_degree;
  j["problems"] = r.problems;
  if (r.exact != ExactStatus::NotRun) {
    j["exact"] = {{"status", exact_status_name(r.exact)}, {"value", r.computed}};
    j["oracles"] = oracles_json(r.oracles);
  }
  return j;
}

int cmd_verify(const Config& cfg) {
  check_prime(cfg.p);
  if (cfg.all == !cfg.target.empty()) throw InputError("verify takes either an id or --all");
  Catalog cat = load_catalog(cfg.catalog.empty() ? default_catalog_dir() : std::filesystem::path(cfg.catalog));
  VerifyOptions opt;
  opt.exact = cfg.exact;
  opt.budget = budget_of(cfg);
  opt.workers = std::max(1u, cfg.workers);
  Summary s;
  if (cfg.all) {
    s = verify_all(cat, cfg.p, opt);
  } else if (!cfg.params.empty()) {
    s.reports.push_back(verify_entry(cat, cfg.target, cfg.p, param_map(cfg.params), opt));
    ++s.counts[s.reports.back().status];
  } else {
    s = verify_ids(cat, {cfg.target}, cfg.p, opt);
  }
  ordered_json j{{"schema", kSchema}, {"command", "verify"}, {"p", cfg.p}, {"exact", cfg.exact}};
  ordered_json reports = ordered_json::array();
  std::ostringstream t;
  bool bounded = false;
  for (const auto& r : s.reports) {
    reports.push_back(report_json(r));
    t << r.id << (r.params.empty() ? "" : " " + r.params) << "  " << status_name(r.status);
    if (r.witness_degree) t << "  witness " << r.witness_degree;
    if (r.expected) t << "  expected " << r.expected;
    if (r.exact != ExactStatus::NotRun) t << "  " << exact_status_name(r.exact) << " " << r.computed;
    t << "\n";
    for (const auto& pr : r.problems) t << "    " << pr << "\n";
    bounded = bounded || r.exact == ExactStatus::Bounded;
  }
  ordered_json counts = ordered_json::object();
  t << "summary:";
  for (const auto& [st, n] : s.counts) {
    counts[status_name(st)] = n;
    t << " " << n << " " << status_name(st);
  }
  t << "\n";
  j["reports"] = reports;
  j["counts"] = counts;
  emit(cfg, j, t.str());
  if (!s.ok()) return kMismatch;
  return bounded ? kBudget : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal faithful permutation and quasi-permutation degrees of finite p-groups"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-p,--prime", cfg.p, "Odd prime, at most 97")->required();
    sub->add_option("--param", cfg.params, "Parameter binding k=v (repeatable)");
    sub->add_option("--budget", cfg.budget, "Maximum search nodes (e.g. 1e8)");
    sub->add_option("--max-subgroups", cfg.max_subgroups, "Maximum subgroups visited by the search");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* parse = app.add_subcommand("parse", "Build and summarize a presentation");
  parse->add_option("file", cfg.target, "Presentation file")->required();
  common(parse);

  auto* mu = app.add_subcommand("mu", "Minimal faithful permutation degree with certificate");
  mu->add_option("file", cfg.target, "Presentation file")->required();
  mu->add_option("--certificate", cfg.certificate, "Write the permutation representation here");
  common(mu);

  auto* c = app.add_subcommand("c", "Minimal faithful quasi-permutation degree with certificate");
  c->add_option("file", cfg.target, "Presentation file")->required();
  c->add_option("--certificate", cfg.certificate, "Write the permutation representation on the kernels here");
  c->add_flag("--cross-check", cfg.cross_check, "Also compute mu and compare");
  common(c);

  auto* verify = app.add_subcommand("verify", "Check catalog witnesses, optionally against exact search");
  verify->add_option("id", cfg.target, "Catalog id such as G_(3,23)");
  verify->add_flag("--all", cfg.all, "Every catalog entry");
  verify->add_flag("--exact", cfg.exact, "Also run the exact search");
  verify->add_option("--workers", cfg.workers, "Worker threads");
  verify->add_option("--catalog", cfg.catalog, "Catalog directory");
  common(verify);

  auto* exp = app.add_subcommand("export", "Print a minimal faithful permutation representation");
  exp->add_option("file", cfg.target, "Presentation file")->required();
  exp->add_option("--certificate", cfg.certificate, "Output path (default stdout)");
  common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (parse->parsed()) return cmd_parse(cfg);
    if (mu->parsed()) return cmd_mu(cfg, false);
    if (c->parsed()) return cmd_c(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (exp->parsed()) return cmd_mu(cfg, true);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
