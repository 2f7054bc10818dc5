#include "permdeg/quasiperm.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace permdeg {

namespace {

// Order of x modulo the normal subgroup k.
std::uint64_t order_mod(const PcGroup& g, const Subgroup& k, Elem x) {
  std::uint64_t o = 1;
  while (!k.contains(x)) {
    x = g.pow(x, g.p());
    o *= static_cast<std::uint64_t>(g.p());
  }
  return o;
}

// Right cosets H t, as canonical representatives in breadth-first order.
std::vector<Elem> right_transversal(const PcGroup& g, const Subgroup& h) {
  std::vector<Elem> pts{h.coset_rep(g.identity())};
  std::unordered_map<Elem, std::size_t, ElemHash> where{{pts[0], 0}};
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int k = 0; k < g.n(); ++k) {
      Elem y = h.coset_rep(g.mul(pts[i], g.gen(k)));
      if (where.emplace(y, pts.size()).second) pts.push_back(y);
    }
  return pts;
}

// For each double coset H x H with x outside N_G(H): pairs (y, x y x^-1)
// for generators y of H ∩ H^x.
struct MackeyData {
  std::vector<std::vector<std::pair<Elem, Elem>>> outside;
};

MackeyData mackey_data(const PcGroup& g, const Subgroup& h, const Subgroup& n) {
  MackeyData md;
  if (n.index() == 1) return md;
  auto pts = right_transversal(g, h);
  std::unordered_map<Elem, std::size_t, ElemHash> where;
  for (std::size_t i = 0; i < pts.size(); ++i) where.emplace(pts[i], i);
  std::vector<char> done(pts.size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (done[i]) continue;
    // Orbit of H x under right multiplication by H.
    std::vector<std::size_t> orbit{i};
    done[i] = 1;
    for (std::size_t j = 0; j < orbit.size(); ++j)
      for (const auto& b : h.basis()) {
        std::size_t to = where.at(h.coset_rep(g.mul(pts[orbit[j]], b)));
        if (!done[to]) {
          done[to] = 1;
          orbit.push_back(to);
        }
      }
    const Elem& x = pts[i];
    if (n.contains(x)) continue;
    Subgroup d = intersection(h, conjugate(h, x));
    std::vector<std::pair<Elem, Elem>> pairs;
    Elem xi = g.inv(x);
    for (const auto& y : d.basis()) {
      // d lies in x^-1 H x, so x y x^-1 is in H.
      pairs.push_back({y, g.mul(g.mul(x, y), xi)});
    }
    md.outside.push_back(std::move(pairs));
  }
  return md;
}

bool inertia_is_h(const PcGroup& g, const CharClass& cc, const Subgroup& n) {
  (void)g;
  Subgroup s = normalizer(n, cc.K);
  return centralizer(s, {cc.gen}, cc.K).order() == cc.H.order();
}

bool mackey_ok(const CharClass& cc, const MackeyData& md, const PcGroup& g) {
  for (const auto& pairs : md.outside) {
    bool agree = true;
    for (const auto& [y, z] : pairs) {
      if (!cc.K.contains(g.mul(y, g.inv(z)))) {
        agree = false;
        break;
      }
    }
    if (agree) return false;
  }
  return true;
}

// Elements of Q(ζ_m) as integer vectors over ζ^0..ζ^{m-1}.
using Cyc = std::vector<std::int64_t>;

void canonicalize(Cyc& c, std::uint64_t m, int p) {
  if (m == 1) return;
  std::uint64_t s = m / static_cast<std::uint64_t>(p);
  for (std::uint64_t j = (p - 1) * s; j < m; ++j) {
    std::int64_t v = c[j];
    if (!v) continue;
    for (int k = 0; k < p; ++k) c[j % s + k * s] -= v;
  }
}

std::int64_t trace_of(const Cyc& c, std::uint64_t m, int p) {
  std::int64_t phi = static_cast<std::int64_t>(m - m / static_cast<std::uint64_t>(p));
  std::uint64_t s = m / static_cast<std::uint64_t>(p);
  std::int64_t t = 0;
  for (std::uint64_t j = 0; j < m; ++j) {
    if (!c[j]) continue;
    if (j == 0)
      t += c[j] * (m == 1 ? 1 : phi);
    else if (j % s == 0)
      t -= c[j] * static_cast<std::int64_t>(s);
  }
  return t;
}

struct CharValues {
  std::uint64_t m;
  std::vector<Cyc> values;  // indexed by rank, canonical
};

CharValues char_values(const PcGroup& g, const CharClass& cc, std::uint64_t max_order) {
  if (g.order() > max_order) throw ResourceError("character values need a smaller group", g.order(), 0);
  const std::uint64_t m = cc.conductor;
  std::unordered_map<Elem, std::uint64_t, ElemHash> dlog;
  Elem acc = g.identity();
  for (std::uint64_t k = 0; k < m; ++k) {
    dlog.emplace(cc.K.coset_rep(acc), k);
    acc = g.mul(acc, cc.gen);
  }
  auto trans = right_transversal(g, cc.H);
  std::vector<Elem> trans_inv;
  for (const auto& t : trans) trans_inv.push_back(g.inv(t));
  CharValues cv{m, {}};
  cv.values.resize(g.order());
  for (std::uint64_t r = 0; r < g.order(); ++r) {
    Elem x = g.unrank(r);
    Cyc v(m, 0);
    for (std::size_t i = 0; i < trans.size(); ++i) {
      Elem y = g.mul(g.mul(trans[i], x), trans_inv[i]);
      if (!cc.H.contains(y)) continue;
      ++v[dlog.at(cc.K.coset_rep(y))];
    }
    canonicalize(v, m, g.p());
    cv.values[r] = std::move(v);
  }
  return cv;
}

Cyc galois_apply(const Cyc& c, std::uint64_t m, std::uint64_t s, int p) {
  Cyc out(m, 0);
  for (std::uint64_t j = 0; j < m; ++j)
    if (c[j]) out[(j * s) % m] += c[j];
  canonicalize(out, m, p);
  return out;
}

}  // namespace

std::uint64_t CharClass::d_value() const {
  if (conductor == 1) return induced_degree;
  return induced_degree * (conductor - conductor / static_cast<std::uint64_t>(H.group().p()));
}

CharClass make_char_class(const Subgroup& h, const Subgroup& k) {
  const PcGroup& g = h.group();
  if (!is_subgroup(k, h)) throw InputError("K must be a subgroup of H");
  if (!is_subgroup(derived(h), k)) throw InputError("H/K must be abelian");
  if (!is_cyclic_quotient(h, k)) throw InputError("H/K must be cyclic");
  CharClass cc;
  cc.H = h;
  cc.K = k;
  cc.conductor = h.order() / k.order();
  cc.induced_degree = h.index();
  cc.gen = g.identity();
  for (const auto& b : h.basis())
    if (order_mod(g, k, b) == cc.conductor) {
      cc.gen = b;
      break;
    }
  if (cc.conductor > 1 && order_mod(g, k, cc.gen) != cc.conductor)
    throw std::logic_error("no basis element generates H/K");
  return cc;
}

std::vector<Subgroup> cyclic_quotient_kernels(const Subgroup& h) {
  const PcGroup& g = h.group();
  const Subgroup hder = derived(h);
  std::vector<Subgroup> out{h};
  struct Node {
    Subgroup k;
    Elem q;
    std::uint64_t order;  // |h:k|
  };
  std::vector<Node> todo;
  for (auto& m : maximal_subgroups(h)) {
    Elem q = g.identity();
    for (const auto& b : h.basis())
      if (!m.contains(b)) {
        q = b;
        break;
      }
    todo.push_back({m, q, static_cast<std::uint64_t>(g.p())});
  }
  // A child k' of index p in k keeps h/k' cyclic iff k/k' is central in h/k'
  // and q^|h:k| ∉ k'. Each kernel has exactly one parent.
  for (std::size_t i = 0; i < todo.size(); ++i) {
    Node node = todo[i];
    out.push_back(node.k);
    if (node.k.is_trivial()) continue;
    Elem z = g.pow(node.q, static_cast<std::int64_t>(node.order));
    Subgroup below = join(join(frattini(node.k), commutator_subgroup(node.k, h)), hder);
    if (below.contains(z)) continue;
    for (auto& c : maximal_subgroups(node.k, below))
      if (!c.contains(z)) todo.push_back({c, node.q, node.order * g.p()});
  }
  return out;
}

Subgroup inertia_group(const PcGroup& g, const CharClass& cc) {
  Subgroup n = normalizer(whole_group(g), cc.H);
  Subgroup s = normalizer(n, cc.K);
  return centralizer(s, {cc.gen}, cc.K);
}

bool induced_irreducible(const PcGroup& g, const CharClass& cc) {
  if (cc.H.index() == 1) return true;
  Subgroup n = normalizer(whole_group(g), cc.H);
  if (!inertia_is_h(g, cc, n)) return false;
  return mackey_ok(cc, mackey_data(g, cc.H, n), g);
}

Subgroup induced_kernel(const PcGroup&, const CharClass& cc) { return core(cc.K); }

CResult minimal_c(const PcGroup& g, const SearchBudget& budget, bool force_search) {
  CResult res;
  Subgroup whole = whole_group(g);
  if (whole.is_trivial()) {
    res.c = 1;
    res.by_formula = true;
    return res;
  }
  if (is_abelian(whole) && !force_search) {
    auto basis = abelian_basis(whole);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Elem> rest;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) rest.push_back(basis[j]);
      res.cert.classes.push_back(make_char_class(whole, closure(g, rest)));
      res.cert.c_value += res.cert.classes.back().cost();
    }
    res.c = mu_abelian(abelian_invariants(whole));
    res.by_formula = true;
    if (res.c != res.cert.c_value) throw std::logic_error("abelian certificate value mismatch");
    return res;
  }

  const Subgroup socle = socle_of_center(g);
  const std::uint64_t p = static_cast<std::uint64_t>(g.p());
  const std::uint64_t central_index = center(g).index();
  struct Entry {
    std::uint64_t cost;
    Subgroup trace;
    CharClass cc;
  };
  std::map<std::string, Entry> pool;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<const Entry*> chosen;
  auto fail = [&](const std::string& what, std::uint64_t reached) {
    return ResourceError(what, reached, best == std::numeric_limits<std::uint64_t>::max() ? g.order() : best);
  };

  SubgroupClassWalker walker(g, budget.max_subgroups);
  ClassLevel level = walker.top();
  while (!level.reps.empty()) {
    const std::uint64_t idx = level.reps.front().index();
    // χ(1)^2 ≤ |G:Z(G)|, and every class at this level costs at least idx·p.
    if (idx * idx > central_index || idx * p >= best) break;
    for (const auto& h : level.reps) {
      Subgroup n = normalizer(whole, h);
      bool have_mackey = false;
      MackeyData md;
      for (const auto& k : cyclic_quotient_kernels(h)) {
        if (k == h) continue;
        std::uint64_t cost = k.index();
        if (cost >= best) continue;
        Subgroup trace = intersect_normal(k, socle);
        if (trace.size() == socle.size()) continue;
        std::string key = trace.key();
        auto it = pool.find(key);
        if (it != pool.end() && it->second.cost <= cost) continue;
        if (++res.stats.candidates > budget.max_nodes) throw fail("candidate budget exceeded", res.stats.candidates);
        CharClass cc = make_char_class(h, k);
        if (idx > 1) {
          if (!inertia_is_h(g, cc, n)) continue;
          if (!have_mackey) {
            md = mackey_data(g, h, n);
            have_mackey = true;
          }
          if (!mackey_ok(cc, md, g)) continue;
        }
        pool.insert_or_assign(key, Entry{cost, trace, cc});
      }
    }
    std::vector<const Entry*> order;
    for (const auto& [key, e] : pool) order.push_back(&e);
    std::stable_sort(order.begin(), order.end(), [](const Entry* a, const Entry* b) { return a->cost < b->cost; });
    std::vector<CoverItem> items;
    for (const auto* e : order) items.push_back({e->cost, e->trace});
    std::optional<std::pair<std::uint64_t, std::vector<std::size_t>>> cover;
    try {
      std::uint64_t left = budget.max_nodes > res.stats.nodes ? budget.max_nodes - res.stats.nodes : 0;
      cover = min_cover(socle, items, best, left, &res.stats.nodes);
    } catch (const ResourceError& e) {
      throw fail(e.what(), e.reached());
    }
    if (cover && cover->first < best) {
      best = cover->first;
      res.cert.classes.clear();
      for (auto j : cover->second) res.cert.classes.push_back(order[j]->cc);
    }
    if (idx * p * p >= best) break;
    try {
      level = walker.next(level, [](const Subgroup&) { return true; });
    } catch (const ResourceError& e) {
      throw fail(e.what(), e.reached());
    }
    res.stats.subgroups = walker.seen();
  }
  res.stats.subgroups = walker.seen();
  if (best == std::numeric_limits<std::uint64_t>::max()) throw fail("no faithful character set found", 0);
  res.c = best;
  res.cert.c_value = best;
  std::vector<Subgroup> ks;
  for (const auto& cc : res.cert.classes) ks.push_back(cc.K);
  if (!is_faithful(g, ks).faithful) throw std::logic_error("c certificate is not faithful");
  return res;
}

Fraction verify_norm(const PcGroup& g, const CharClass& cc, std::uint64_t max_order) {
  auto cv = char_values(g, cc, max_order);
  const std::uint64_t m = cv.m;
  Cyc total(m, 0);
  for (std::uint64_t r = 0; r < g.order(); ++r) {
    const Cyc& a = cv.values[r];
    const Cyc& b = cv.values[g.rank(g.inv(g.unrank(r)))];
    for (std::uint64_t i = 0; i < m; ++i) {
      if (!a[i]) continue;
      for (std::uint64_t j = 0; j < m; ++j)
        if (b[j]) total[(i + j) % m] += a[i] * b[j];
    }
  }
  canonicalize(total, m, g.p());
  for (std::uint64_t j = 1; j < m; ++j)
    if (total[j]) throw std::logic_error("norm is not rational");
  std::int64_t num = total[0];
  std::int64_t den = static_cast<std::int64_t>(g.order());
  std::int64_t d = std::gcd(num, den);
  return {num / d, den / d};
}

std::uint64_t galois_orbit_size(const PcGroup& g, const CharClass& cc, std::uint64_t max_order) {
  auto cv = char_values(g, cc, max_order);
  std::set<std::vector<Cyc>> seen;
  for (std::uint64_t s = 1; s < cv.m || s == 1; ++s) {
    if (cv.m > 1 && s % static_cast<std::uint64_t>(g.p()) == 0) continue;
    std::vector<Cyc> img;
    img.reserve(cv.values.size());
    for (const auto& v : cv.values) img.push_back(galois_apply(v, cv.m, s, g.p()));
    seen.insert(std::move(img));
    if (cv.m == 1) break;
  }
  return seen.size();
}

std::int64_t brute_force_m(const PcGroup& g, const std::vector<CharClass>& classes, std::uint64_t max_order) {
  std::vector<std::int64_t> xi(g.order(), 0);
  for (const auto& cc : classes) {
    auto cv = char_values(g, cc, max_order);
    const std::uint64_t m = cv.m;
    const std::uint64_t phi = m == 1 ? 1 : m - m / static_cast<std::uint64_t>(g.p());
    const std::uint64_t orbit = galois_orbit_size(g, cc, max_order);
    // Tr_{Q(ζ_m)/Q} counts each conjugate phi/orbit times.
    const std::int64_t mult = static_cast<std::int64_t>(phi / orbit);
    for (std::uint64_t r = 0; r < g.order(); ++r) {
      std::int64_t t = trace_of(cv.values[r], m, g.p());
      if (t % mult) throw std::logic_error("Galois sum is not integral");
      xi[r] += t / mult;
    }
  }
  return -*std::min_element(xi.begin(), xi.end());
}

CrossCheck cross_check_c_mu(const PcGroup& g, const SearchBudget& budget) {
  CrossCheck out;
  out.mu = minimal_degree(g, budget, true);
  out.c = minimal_c(g, budget, true);
  out.equal = out.mu.mu == out.c.c;
  return out;
}

std::string format_char_class(const PcGroup& g, const CharClass& cc) {
  std::ostringstream out;
  auto gens = [&](const Subgroup& s) {
    std::string r = "<";
    for (std::size_t i = 0; i < s.basis().size(); ++i) r += (i ? "," : "") + g.format(s.basis()[i]);
    return r + ">";
  };
  out << "H=" << gens(cc.H) << " K=" << gens(cc.K) << " conductor=" << cc.conductor
      << " degree=" << cc.induced_degree;
  return out.str();
}

}  // namespace permdeg
