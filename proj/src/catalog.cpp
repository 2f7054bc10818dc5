#include "permdeg/catalog.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "permdeg/mu.hpp"
#include "permdeg/quasiperm.hpp"

#ifndef PERMDEG_DEFAULT_CATALOG
#define PERMDEG_DEFAULT_CATALOG "catalog"
#endif

namespace permdeg {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \r") - b + 1);
}

std::vector<std::string> gen_list(const std::string& s) {
  std::vector<std::string> out;
  for (auto& w : split(s, ',')) {
    w = trim(w);
    if (w.empty()) throw InputError("empty generator in '" + s + "'");
    parse_word(w);
    out.push_back(w);
  }
  return out;
}

ClassSpec parse_class(const std::string& s, bool in_factor) {
  auto hk = split(s, '/');
  if (hk.size() != 2) throw InputError("character class needs H/K: '" + s + "'");
  ClassSpec c;
  std::string h = trim(hk[0]);
  if (h == (in_factor ? "H" : "G")) {
    c.h_whole = true;
  } else {
    c.h = gen_list(h);
  }
  if (!trim(hk[1]).empty()) c.k = gen_list(hk[1]);
  return c;
}

std::vector<ClassSpec> parse_classes(const std::string& s, bool in_factor) {
  std::vector<ClassSpec> out;
  for (const auto& part : split(s, ';')) out.push_back(parse_class(part, in_factor));
  return out;
}

void parse_witness(CatalogEntry& e, const std::string& w) {
  switch (e.kind) {
    case WitnessKind::None:
      break;
    case WitnessKind::Subgroups:
      for (const auto& part : split(w, ';')) e.subgroups.push_back(gen_list(part));
      break;
    case WitnessKind::Characters:
      e.classes = parse_classes(w, false);
      break;
    case WitnessKind::Type1: {
      auto f = split(w, '|');
      if (f.size() != 4 || f[0].rfind("H=", 0) != 0 || f[1].rfind("A=", 0) != 0 || f[2].rfind("cH=", 0) != 0)
        throw InputError("type1 witness needs H=..|A=..|cH=..|classes");
      e.factor = gen_list(f[0].substr(2));
      e.complement = gen_list(f[1].substr(2));
      e.expected_factor = PPoly::parse(f[2].substr(3));
      e.classes = parse_classes(f[3], true);
      break;
    }
  }
}

WitnessKind parse_kind(const std::string& s) {
  if (s == "subgroups") return WitnessKind::Subgroups;
  if (s == "characters") return WitnessKind::Characters;
  if (s == "type1") return WitnessKind::Type1;
  if (s == "none") return WitnessKind::None;
  throw InputError("unknown witness kind '" + s + "'");
}

std::string dash_empty(const std::string& s) { return s == "-" ? "" : s; }

std::vector<Elem> eval_all(const PcGroup& g, const std::vector<std::string>& words, const Bindings& b) {
  std::vector<Elem> out;
  for (const auto& w : words) out.push_back(eval_word(g, parse_word(w), b));
  return out;
}

std::string params_text(const std::map<std::string, std::string>& params) {
  std::string s;
  for (const auto& [k, v] : params) s += (s.empty() ? "" : ",") + k + "=" + v;
  return s;
}

struct Witness {
  std::uint64_t degree = 0;
  std::uint64_t factor_cost = 0;
};

Witness check_subgroups(const LoadedEntry& le, std::vector<std::string>& problems) {
  const PcGroup& g = *le.group;
  std::vector<Subgroup> parts;
  Witness w;
  for (const auto& gens : le.entry->subgroups) {
    parts.push_back(closure(g, eval_all(g, gens, le.bindings)));
    w.degree += parts.back().index();
  }
  auto f = is_faithful(g, parts);
  if (!f.faithful) problems.push_back("subgroups not faithful: " + g.format(*f.witness) + " lies in every core");
  return w;
}

// Builds the classes, checks irreducibility and that their kernels meet trivially.
std::uint64_t check_classes(const PcGroup& g, const std::vector<std::pair<Subgroup, Subgroup>>& hk,
                            std::vector<std::string>& problems) {
  std::uint64_t total = 0;
  std::vector<Subgroup> kernels;
  for (std::size_t i = 0; i < hk.size(); ++i) {
    try {
      CharClass cc = make_char_class(hk[i].first, hk[i].second);
      total += cc.cost();
      kernels.push_back(cc.K);
      if (!induced_irreducible(g, cc)) problems.push_back("class " + std::to_string(i + 1) + " induces reducibly");
    } catch (const InputError& e) {
      problems.push_back("class " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  auto f = is_faithful(g, kernels);
  if (!f.faithful) problems.push_back("kernels meet nontrivially: " + g.format(*f.witness));
  return total;
}

Witness check_characters(const LoadedEntry& le, std::vector<std::string>& problems) {
  const PcGroup& g = *le.group;
  std::vector<std::pair<Subgroup, Subgroup>> hk;
  for (const auto& c : le.entry->classes) {
    Subgroup h = c.h_whole ? whole_group(g) : closure(g, eval_all(g, c.h, le.bindings));
    hk.emplace_back(h, join(closure(g, eval_all(g, c.k, le.bindings)), derived(h)));
  }
  return {check_classes(g, hk, problems), 0};
}

// G = H × A_1 × ... × A_m: each class of H extends by A, and each A_i
// contributes a linear class with kernel H × (the other factors).
Witness check_type1(const LoadedEntry& le, std::vector<std::string>& problems) {
  const PcGroup& g = *le.group;
  const auto& e = *le.entry;
  Subgroup h = closure(g, eval_all(g, e.factor, le.bindings));
  auto a = eval_all(g, e.complement, le.bindings);
  Subgroup z = center(g);
  std::uint64_t prod = h.order();
  for (const auto& x : a) {
    if (!z.contains(x)) problems.push_back("complement generator " + g.format(x) + " is not central");
    prod *= g.order_of(x);
  }
  if (!is_normal(h, whole_group(g))) problems.push_back("factor H is not normal");
  if (prod != g.order() || join(h, a).index() != 1) problems.push_back("H and the complement do not give a direct product");
  if (!problems.empty()) return {};

  std::vector<std::pair<Subgroup, Subgroup>> hk;
  Witness w;
  for (const auto& c : e.classes) {
    Subgroup r = c.h_whole ? h : closure(g, eval_all(g, c.h, le.bindings));
    if (!is_subgroup(r, h)) problems.push_back("class subgroup is not inside H");
    Subgroup k = join(closure(g, eval_all(g, c.k, le.bindings)), derived(r));
    if (is_subgroup(k, r)) w.factor_cost += h.order() / k.order();
    hk.emplace_back(join(r, a), join(k, a));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Elem> others;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) others.push_back(a[j]);
    hk.emplace_back(whole_group(g), join(h, others));
  }
  w.degree = check_classes(g, hk, problems);
  return w;
}

void run_exact(const LoadedEntry& le, int p, const VerifyOptions& opt, EntryReport& r) {
  const auto& e = *le.entry;
  try {
    auto res = minimal_degree(*le.group, opt.budget);
    r.exact = ExactStatus::Exact;
    r.computed = res.mu;
  } catch (const ResourceError& err) {
    r.exact = ExactStatus::Bounded;
    r.computed = err.best_bound();
  }
  if (r.exact == ExactStatus::Exact) {
    if (e.expected) {
      std::uint64_t want = e.expected->at(static_cast<std::uint64_t>(p));
      bool ok = e.claim == Claim::Exact ? r.computed == want : r.computed <= want;
      if (!ok)
        r.problems.push_back("exact value " + std::to_string(r.computed) + (e.claim == Claim::Exact ? " != " : " > ") +
                             std::to_string(want));
    }
    r.oracles = bound_oracles(*le.group, r.computed);
    for (const auto& b : r.oracles)
      if (b.applicable && !b.satisfied) r.problems.push_back("oracle " + b.name + " fails: " + b.detail);
  } else if (e.expected && e.claim == Claim::Exact && r.computed < e.expected->at(static_cast<std::uint64_t>(p))) {
    r.problems.push_back("search found degree " + std::to_string(r.computed) + " below the expected value");
  }
}

}  // namespace

const CatalogEntry& Catalog::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw InputError("unknown catalog id '" + id + "'");
}

std::filesystem::path Catalog::presentation_path(const CatalogEntry& e, int p) const {
  if (p == 5 && !e.file_p5.empty()) return dir / e.file_p5;
  if (e.file.empty()) return {};
  return dir / e.file;
}

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("PERMDEG_CATALOG")) return env;
  return PERMDEG_DEFAULT_CATALOG;
}

Catalog parse_catalog(const std::string& tsv, const std::filesystem::path& dir) {
  Catalog cat;
  cat.dir = dir;
  std::istringstream in(tsv);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    auto f = split(line, '\t');
    if (f.size() != 8) throw InputError("expected.tsv line " + std::to_string(lineno) + ": need 8 fields");
    for (auto& x : f) x = trim(x);
    try {
      CatalogEntry e;
      e.id = f[0];
      e.file = dash_empty(f[1]);
      e.file_p5 = dash_empty(f[2]);
      e.validity_text = f[3];
      e.validity = parse_expr(f[3]);
      e.kind = parse_kind(f[4]);
      if (f[5] == "exact") {
        e.claim = Claim::Exact;
      } else if (f[5] == "upper") {
        e.claim = Claim::Upper;
      } else {
        throw InputError("claim must be exact or upper");
      }
      if (f[6] != "-") e.expected = PPoly::parse(f[6]);
      if (e.kind != WitnessKind::None && !e.expected) throw InputError("witness without an expected value");
      parse_witness(e, f[7]);
      for (const auto& o : cat.entries)
        if (o.id == e.id) throw InputError("duplicate id");
      cat.entries.push_back(std::move(e));
    } catch (const InputError& err) {
      throw InputError("expected.tsv line " + std::to_string(lineno) + ": " + err.what());
    }
  }
  return cat;
}

Catalog load_catalog(const std::filesystem::path& dir) {
  std::ifstream in(dir / "expected.tsv");
  if (!in) throw InputError("cannot read " + (dir / "expected.tsv").string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str(), dir);
}

bool prime_valid(const CatalogEntry& e, int p) {
  if (p < 3 || !is_prime(p)) return false;
  Bindings b;
  b.p = p;
  b.prime = prime_params(p);
  return eval_expr(e.validity, b) != 0;
}

LoadedEntry load_entry(const Catalog& cat, const std::string& id, int p,
                       const std::map<std::string, std::string>& params) {
  const CatalogEntry& e = cat.find(id);
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (!prime_valid(e, p)) throw InputError(id + " requires " + e.validity_text);
  auto path = cat.presentation_path(e, p);
  if (path.empty() || !std::filesystem::exists(path))
    throw MissingPresentation(id + ": needs-external-presentation" + (path.empty() ? "" : " (" + path.string() + ")"));
  LoadedEntry le;
  le.entry = &e;
  le.pres = load_presentation(path.string());
  le.bindings = permdeg::bind(le.pres, p, params);
  le.group = refine(le.pres, le.bindings);
  auto check = [&](const std::vector<std::string>& words) {
    try {
      eval_all(*le.group, words, le.bindings);
    } catch (const InputError& err) {
      throw InputError(id + " witness: " + err.what());
    }
  };
  for (const auto& s : e.subgroups) check(s);
  for (const auto& c : e.classes) {
    check(c.h);
    check(c.k);
  }
  check(e.factor);
  check(e.complement);
  return le;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "FAIL";
    case Status::NeedsExternal: return "needs-external-presentation";
    case Status::NoWitness: return "no-witness";
    case Status::InvalidPrime: return "invalid-prime";
  }
  return "?";
}

const char* exact_status_name(ExactStatus s) {
  switch (s) {
    case ExactStatus::NotRun: return "skipped";
    case ExactStatus::Exact: return "exact";
    case ExactStatus::Bounded: return "bounded";
  }
  return "?";
}

EntryReport verify_entry(const LoadedEntry& le, int p, const VerifyOptions& opt) {
  const auto& e = *le.entry;
  EntryReport r;
  r.id = e.id;
  r.p = p;
  if (e.expected) r.expected = e.expected->at(static_cast<std::uint64_t>(p));
  Witness w;
  switch (e.kind) {
    case WitnessKind::Subgroups: w = check_subgroups(le, r.problems); break;
    case WitnessKind::Characters: w = check_characters(le, r.problems); break;
    case WitnessKind::Type1: w = check_type1(le, r.problems); break;
    case WitnessKind::None: break;
  }
  r.witness_degree = w.degree;
  if (e.kind != WitnessKind::None && r.problems.empty() && w.degree != r.expected)
    r.problems.push_back("witness degree " + std::to_string(w.degree) + " != " + std::to_string(r.expected));
  if (e.kind == WitnessKind::Type1 && r.problems.empty()) {
    std::uint64_t want = e.expected_factor->at(static_cast<std::uint64_t>(p));
    if (w.factor_cost != want)
      r.problems.push_back("factor degree " + std::to_string(w.factor_cost) + " != " + std::to_string(want));
  }
  if (opt.exact) run_exact(le, p, opt, r);
  if (!r.problems.empty()) {
    r.status = Status::Fail;
  } else if (e.kind == WitnessKind::None) {
    r.status = Status::NoWitness;
  }
  return r;
}

EntryReport verify_entry(const Catalog& cat, const std::string& id, int p,
                         const std::map<std::string, std::string>& params, const VerifyOptions& opt) {
  const CatalogEntry& e = cat.find(id);
  EntryReport r;
  r.id = id;
  r.p = p;
  r.params = params_text(params);
  if (!prime_valid(e, p)) {
    r.status = Status::InvalidPrime;
    return r;
  }
  try {
    auto le = load_entry(cat, id, p, params);
    auto out = verify_entry(le, p, opt);
    out.params = r.params;
    return out;
  } catch (const MissingPresentation&) {
    r.status = Status::NeedsExternal;
    if (e.expected) r.expected = e.expected->at(static_cast<std::uint64_t>(p));
    return r;
  } catch (const InputError& err) {
    r.status = Status::Fail;
    r.problems.push_back(err.what());
    return r;
  }
}

bool Summary::ok() const {
  auto it = counts.find(Status::Fail);
  return it == counts.end() || it->second == 0;
}

Summary verify_all(const Catalog& cat, int p, const VerifyOptions& opt) {
  std::vector<std::string> ids;
  for (const auto& e : cat.entries) ids.push_back(e.id);
  return verify_ids(cat, ids, p, opt);
}

Summary verify_ids(const Catalog& cat, const std::vector<std::string>& ids, int p, const VerifyOptions& opt) {
  struct Task {
    const CatalogEntry* entry;
    std::map<std::string, std::string> params;
  };
  std::vector<Task> tasks;
  for (const auto& id : ids) {
    const CatalogEntry& e = cat.find(id);
    auto path = cat.presentation_path(e, p);
    if (!prime_valid(e, p) || path.empty() || !std::filesystem::exists(path)) {
      tasks.push_back({&e, {}});
      continue;
    }
    std::vector<std::map<std::string, std::string>> choices{{}};
    try {
      choices = parameter_choices(load_presentation(path.string()), p);
    } catch (const InputError&) {
      // verify_entry reports the same error
    }
    for (auto& c : choices) tasks.push_back({&e, std::move(c)});
  }

  Summary s;
  s.reports.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        s.reports[i] = verify_entry(cat, tasks[i].entry->id, p, tasks[i].params, opt);
      } catch (const std::exception& err) {
        s.reports[i].id = tasks[i].entry->id;
        s.reports[i].p = p;
        s.reports[i].params = params_text(tasks[i].params);
        s.reports[i].status = Status::Fail;
        s.reports[i].problems.push_back(err.what());
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& r : s.reports) ++s.counts[r.status];
  return s;
}

std::map<std::uint64_t, std::vector<int>> load_order_3_6_reference(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::map<std::uint64_t, std::vector<int>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || line[0] == '#') continue;
    auto f = split(line, '\t');
    if (f.size() != 2) throw InputError("bad reference line: " + line);
    auto& ids = out[std::stoull(f[0])];
    for (const auto& x : split(f[1], ',')) ids.push_back(std::stoi(x));
  }
  return out;
}

}  // namespace permdeg
