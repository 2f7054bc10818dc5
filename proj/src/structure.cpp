#include "permdeg/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "permdeg/linalg.hpp"

namespace permdeg {

namespace {

int inv_mod(int a, int p) { return GfMatrix::inverse(((a % p) + p) % p, p); }

// Closure by sifting; new table entries feed back their p-th powers,
// commutators with the table and conjugates under `by`.
Subgroup closure_impl(const PcGroup& g, const std::vector<Elem>& gens, const std::vector<Elem>& by) {
  const int n = g.n();
  const int p = g.p();
  std::array<Elem, kMaxPcGens> table{};
  std::array<bool, kMaxPcGens> used{};
  std::vector<Elem> work(gens.rbegin(), gens.rend());
  while (!work.empty()) {
    Elem x = work.back();
    work.pop_back();
    int d = 0;
    for (; d < n; ++d) {
      int c = x.e[d];
      if (!c) continue;
      if (!used[d]) break;
      x = g.mul(g.pow(table[d], p - c), x);
    }
    if (d >= n) continue;
    x = g.pow(x, inv_mod(x.e[d], p));
    table[d] = x;
    used[d] = true;
    work.push_back(g.pow(x, p));
    for (int j = 0; j < n; ++j)
      if (used[j] && j != d) work.push_back(g.comm(x, table[j]));
    for (const auto& y : by) work.push_back(g.conj(x, y));
  }
  std::vector<Elem> pcgs;
  for (int d = 0; d < n; ++d)
    if (used[d]) pcgs.push_back(table[d]);
  return Subgroup::from_pcgs(g, std::move(pcgs));
}

// Subgroup of cur whose exponent vectors lie in the kernel of e -> sum e_j f_j.
Subgroup kernel_subgroup(const Subgroup& cur, const std::vector<std::vector<int>>& f) {
  const PcGroup& g = cur.group();
  const int p = g.p();
  const int m = cur.size();
  if (m == 0 || f.empty()) return cur;
  const int r = static_cast<int>(f[0].size());
  GfMatrix rows(p, m);
  bool any = false;
  for (int s = 0; s < r; ++s) {
    std::vector<int> row(m);
    for (int j = 0; j < m; ++j) {
      row[j] = f[j][s] % p;
      any = any || row[j];
    }
    rows.add(std::move(row));
  }
  if (!any) return cur;
  GfMatrix ker(p, m);
  for (auto& v : rows.kernel()) ker.add(std::move(v));
  std::vector<Elem> elems;
  for (const auto& v : ker.rows()) {
    Elem x = g.identity();
    for (int j = 0; j < m; ++j)
      if (v[j]) x = g.mul(x, g.pow(cur.basis()[j], v[j]));
    elems.push_back(x);
  }
  return Subgroup::from_pcgs(g, std::move(elems));
}

}  // namespace

Subgroup Subgroup::from_pcgs(const PcGroup& g, std::vector<Elem> pcgs) {
  const int p = g.p();
  Subgroup s;
  s.g_ = &g;
  for (auto& x : pcgs) {
    int d = g.depth(x);
    if (d >= g.n()) throw std::logic_error("identity in a pcgs");
    if (x.e[d] != 1) x = g.pow(x, inv_mod(x.e[d], p));
  }
  std::sort(pcgs.begin(), pcgs.end(), [&](const Elem& a, const Elem& b) { return g.depth(a) < g.depth(b); });
  for (std::size_t i = 0; i < pcgs.size(); ++i) {
    int d = g.depth(pcgs[i]);
    if (s.piv_[d] >= 0) throw std::logic_error("repeated depth in a pcgs");
    s.piv_[d] = static_cast<std::int8_t>(i);
  }
  for (std::size_t i = 0; i < pcgs.size(); ++i) {
    for (std::size_t j = i + 1; j < pcgs.size(); ++j) {
      int dj = g.depth(pcgs[j]);
      int c = pcgs[i].e[dj];
      if (c) pcgs[i] = g.mul(pcgs[i], g.pow(pcgs[j], p - c));
    }
  }
  s.basis_ = std::move(pcgs);
  return s;
}

std::uint64_t Subgroup::order() const {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) r *= static_cast<std::uint64_t>(g_->p());
  return r;
}

std::vector<int> Subgroup::depths() const {
  std::vector<int> out;
  for (const auto& b : basis_) out.push_back(g_->depth(b));
  return out;
}

Elem Subgroup::coset_rep(Elem x) const {
  const int p = g_->p();
  for (const auto& b : basis_) {
    int d = g_->depth(b);
    int c = x.e[d];
    if (c) x = g_->mul(g_->pow(b, p - c), x);
  }
  return x;
}

bool Subgroup::contains(const Elem& x) const { return g_->is_identity(coset_rep(x)); }

std::string Subgroup::key() const {
  std::string k;
  k.reserve(basis_.size() * kMaxPcGens);
  for (const auto& b : basis_) k.append(reinterpret_cast<const char*>(b.e.data()), g_->n());
  return k;
}

Subgroup trivial_subgroup(const PcGroup& g) { return Subgroup::from_pcgs(g, {}); }

Subgroup whole_group(const PcGroup& g) {
  std::vector<Elem> gens;
  for (int i = 0; i < g.n(); ++i) gens.push_back(g.gen(i));
  return Subgroup::from_pcgs(g, gens);
}

Subgroup closure(const PcGroup& g, const std::vector<Elem>& gens) { return closure_impl(g, gens, {}); }

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return closure_impl(a.group(), gens, {});
}

Subgroup join(const Subgroup& a, const std::vector<Elem>& extra) {
  std::vector<Elem> gens = a.basis();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return closure_impl(a.group(), gens, {});
}

Subgroup normal_closure(const std::vector<Elem>& s, const Subgroup& by) {
  return closure_impl(by.group(), s, by.basis());
}

Subgroup conjugate(const Subgroup& h, const Elem& x) {
  const PcGroup& g = h.group();
  std::vector<Elem> b;
  for (const auto& y : h.basis()) b.push_back(g.conj(y, x));
  return Subgroup::from_pcgs(g, std::move(b));
}

bool is_subgroup(const Subgroup& a, const Subgroup& b) {
  for (const auto& x : a.basis())
    if (!b.contains(x)) return false;
  return true;
}

bool is_normal(const Subgroup& n, const Subgroup& in) {
  const PcGroup& g = n.group();
  for (const auto& x : n.basis())
    for (const auto& y : in.basis())
      if (!n.contains(g.conj(x, y))) return false;
  return true;
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const PcGroup& g = a.group();
  std::vector<Elem> cs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) cs.push_back(g.comm(x, y));
  return normal_closure(cs, join(a, b));
}

Subgroup derived(const Subgroup& h) { return commutator_subgroup(h, h); }

Subgroup frattini(const Subgroup& h) {
  const PcGroup& g = h.group();
  std::vector<Elem> s;
  const auto& b = h.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    s.push_back(g.pow(b[i], g.p()));
    for (std::size_t j = 0; j < i; ++j) s.push_back(g.comm(b[i], b[j]));
  }
  return normal_closure(s, h);
}

std::vector<Subgroup> lower_central_series(const PcGroup& g) {
  Subgroup whole = whole_group(g);
  std::vector<Subgroup> out{whole};
  while (!out.back().is_trivial()) {
    Subgroup next = commutator_subgroup(out.back(), whole);
    if (next == out.back()) break;
    out.push_back(next);
  }
  return out;
}

int nilpotency_class(const PcGroup& g) { return static_cast<int>(lower_central_series(g).size()) - 1; }

std::vector<int> factor_coords(const Subgroup& h, const Subgroup& n, Elem x) {
  const PcGroup& g = h.group();
  std::vector<int> out;
  for (int d = 0; d < g.n(); ++d) {
    if (!h.has_pivot(d) || n.has_pivot(d)) continue;
    out.push_back(0);
  }
  std::size_t slot = 0;
  for (int d = 0; d < g.n(); ++d) {
    bool factor = h.has_pivot(d) && !n.has_pivot(d);
    int c = x.e[d];
    if (c) {
      if (n.has_pivot(d)) {
        x = g.mul(g.inv(g.pow(n.at_depth(d), c)), x);
      } else if (h.has_pivot(d)) {
        out[slot] = c;
        x = g.mul(g.inv(g.pow(h.at_depth(d), c)), x);
      } else {
        throw std::logic_error("factor_coords: element outside subgroup");
      }
    }
    if (factor) ++slot;
  }
  return out;
}

Subgroup layered_kernel(const Subgroup& a, const Subgroup& n,
                        const std::vector<std::function<Elem(const Elem&)>>& maps) {
  const PcGroup& g = a.group();
  Subgroup cur = a;
  for (int k = 0; k < g.n() && !cur.is_trivial(); ++k) {
    if (n.has_pivot(k)) continue;
    std::vector<std::vector<int>> f;
    for (const auto& c : cur.basis()) {
      std::vector<int> v;
      for (const auto& m : maps) v.push_back(n.coset_rep(m(c)).e[k]);
      f.push_back(std::move(v));
    }
    cur = kernel_subgroup(cur, f);
  }
  return cur;
}

Subgroup centralizer(const Subgroup& in, const std::vector<Elem>& s, const Subgroup& modulo) {
  const PcGroup& g = in.group();
  std::vector<std::function<Elem(const Elem&)>> maps;
  for (const auto& x : s) maps.push_back([&g, x](const Elem& c) { return g.comm(x, c); });
  return layered_kernel(in, modulo, maps);
}

Subgroup center(const Subgroup& h) { return centralizer(h, h.basis(), trivial_subgroup(h.group())); }

Subgroup center(const PcGroup& g) { return center(whole_group(g)); }

Subgroup omega1(const Subgroup& abelian) {
  const PcGroup& g = abelian.group();
  return layered_kernel(abelian, trivial_subgroup(g), {[&g](const Elem& x) { return g.pow(x, g.p()); }});
}

Subgroup socle_of_center(const PcGroup& g) { return omega1(center(g)); }

Subgroup intersect_normal(const Subgroup& h, const Subgroup& n) {
  return layered_kernel(h, n, {[](const Elem& x) { return x; }});
}

Subgroup intersection(const Subgroup& a, const Subgroup& b, std::size_t budget) {
  const PcGroup& g = a.group();
  if (is_normal(b, whole_group(g))) return intersect_normal(a, b);
  if (is_normal(a, whole_group(g))) return intersect_normal(b, a);
  auto act = [&](const Elem& x, const Elem& y) { return b.coset_rep(g.mul(x, y)); };
  return orbit_stabilizer<Elem, ElemHash>(a, g.identity(), act, budget).second;
}

Subgroup normalizer(const Subgroup& in, const Subgroup& h, std::size_t budget) {
  if (is_normal(h, in)) return in;
  auto act = [](const Subgroup& s, const Elem& y) { return conjugate(s, y); };
  return orbit_stabilizer<Subgroup, SubgroupHash>(in, h, act, budget).second;
}

Subgroup core(const Subgroup& h, std::size_t budget) {
  const PcGroup& g = h.group();
  Subgroup whole = whole_group(g);
  Subgroup c = h;
  bool changed = true;
  while (changed && !c.is_trivial()) {
    changed = false;
    for (int i = 0; i < g.n(); ++i) {
      Subgroup d = intersection(c, conjugate(c, g.gen(i)), budget);
      if (!(d == c)) {
        c = d;
        changed = true;
      }
    }
  }
  return c;
}

std::vector<std::uint64_t> abelian_invariants(const Subgroup& h, const Subgroup& modulo) {
  const PcGroup& g = h.group();
  if (!is_subgroup(modulo, h) || !is_normal(modulo, h)) throw InputError("modulus is not normal in the subgroup");
  for (const auto& x : h.basis())
    for (const auto& y : h.basis())
      if (!modulo.contains(g.comm(x, y))) throw InputError("quotient is not abelian");
  std::vector<int> s;
  std::vector<Elem> powers = h.basis();
  while (true) {
    int sz = join(modulo, powers).size() - modulo.size();
    s.push_back(sz);
    if (sz == 0) break;
    for (auto& x : powers) x = g.pow(x, g.p());
  }
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    int ci = s[i] - s[i + 1];
    int cn = i + 2 < s.size() ? s[i + 1] - s[i + 2] : 0;
    std::uint64_t q = 1;
    for (std::size_t k = 0; k <= i; ++k) q *= static_cast<std::uint64_t>(g.p());
    for (int t = 0; t < ci - cn; ++t) out.push_back(q);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<std::uint64_t> abelian_invariants(const Subgroup& h) {
  return abelian_invariants(h, trivial_subgroup(h.group()));
}

bool is_abelian(const Subgroup& h) {
  const PcGroup& g = h.group();
  for (const auto& x : h.basis())
    for (const auto& y : h.basis())
      if (!g.is_identity(g.comm(x, y))) return false;
  return true;
}

bool is_cyclic_quotient(const Subgroup& h, const Subgroup& modulo) {
  return h.size() - join(modulo, frattini(h)).size() <= 1;
}

int rank_d(const Subgroup& h) { return h.size() - frattini(h).size(); }

std::uint64_t exponent(const Subgroup& h) {
  const PcGroup& g = h.group();
  std::uint64_t best = 1;
  // Regular p-groups: the exponent is the largest order of a generator.
  if (nilpotency_class(g) < g.p()) {
    for (const auto& x : h.basis()) best = std::max(best, g.order_of(x));
    return best;
  }
  if (h.order() <= 2'000'000) {
    // Walk all normal words in the basis of h.
    const auto& b = h.basis();
    std::vector<int> e(b.size(), 0);
    while (true) {
      Elem x = g.identity();
      for (std::size_t j = 0; j < b.size(); ++j)
        if (e[j]) x = g.mul(x, g.pow(b[j], e[j]));
      best = std::max(best, g.order_of(x));
      std::size_t j = 0;
      while (j < e.size() && ++e[j] == g.p()) e[j++] = 0;
      if (j == e.size()) break;
    }
    return best;
  }
  throw ResourceError("exponent scan too large for an irregular group", h.order(), 0);
}

std::uint64_t exponent(const PcGroup& g) { return exponent(whole_group(g)); }

std::vector<Subgroup> maximal_subgroups(const Subgroup& h) { return maximal_subgroups(h, trivial_subgroup(h.group())); }

std::vector<Subgroup> maximal_subgroups(const Subgroup& h, const Subgroup& containing) {
  const PcGroup& g = h.group();
  const int p = g.p();
  Subgroup phi = containing.is_trivial() ? frattini(h) : join(frattini(h), containing);
  std::vector<std::vector<int>> fc;
  for (const auto& b : h.basis()) fc.push_back(factor_coords(h, phi, b));
  const int r = h.size() - phi.size();
  std::vector<Subgroup> out;
  std::vector<int> lam(r, 0);
  // Functionals with leading coefficient 1, in lexicographic order.
  for (int lead = 0; lead < r; ++lead) {
    std::vector<int> tail(r - lead - 1, 0);
    while (true) {
      std::fill(lam.begin(), lam.end(), 0);
      lam[lead] = 1;
      for (int t = 0; t < r - lead - 1; ++t) lam[lead + 1 + t] = tail[t];
      std::vector<std::vector<int>> f;
      for (const auto& v : fc) {
        int s = 0;
        for (int t = 0; t < r; ++t) s = (s + lam[t] * v[t]) % p;
        f.push_back({s});
      }
      out.push_back(kernel_subgroup(h, f));
      std::size_t j = 0;
      while (j < tail.size() && ++tail[j] == p) tail[j++] = 0;
      if (j == tail.size()) break;
    }
  }
  return out;
}

SubgroupClassWalker::SubgroupClassWalker(const PcGroup& g, std::uint64_t budget) : g_(g), budget_(budget) {}

ClassLevel SubgroupClassWalker::top() const { return ClassLevel{{whole_group(g_)}, {1}}; }

ClassLevel SubgroupClassWalker::next(const ClassLevel& cur, const std::function<bool(const Subgroup&)>& expand) {
  seen_.clear();
  Subgroup whole = whole_group(g_);
  std::vector<std::pair<Subgroup, std::uint64_t>> found;
  auto act = [](const Subgroup& s, const Elem& y) { return conjugate(s, y); };
  for (const auto& rep : cur.reps) {
    if (rep.is_trivial() || !expand(rep)) continue;
    for (auto& m : maximal_subgroups(rep)) {
      if (seen_.count(m.key())) continue;
      std::size_t left = budget_ > seen_count_ ? budget_ - seen_count_ : 0;
      auto orbit = orbit_stabilizer<Subgroup, SubgroupHash>(whole, m, act, std::max<std::size_t>(left, 1)).first;
      seen_count_ += orbit.size();
      if (seen_count_ > budget_) throw ResourceError("subgroup enumeration budget exceeded", seen_count_, 0);
      for (const auto& o : orbit) seen_.emplace(o.key(), found.size());
      found.push_back({*std::min_element(orbit.begin(), orbit.end()), orbit.size()});
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  ClassLevel out;
  for (auto& [s, n] : found) {
    out.reps.push_back(std::move(s));
    out.class_sizes.push_back(n);
  }
  return out;
}

std::vector<Subgroup> subgroups_up_to_conjugacy(const PcGroup& g, std::uint64_t min_order, std::uint64_t budget) {
  SubgroupClassWalker w(g, budget);
  ClassLevel level = w.top();
  std::vector<Subgroup> out;
  while (!level.reps.empty() && level.reps.front().order() >= min_order) {
    out.insert(out.end(), level.reps.begin(), level.reps.end());
    if (level.reps.front().order() / g.p() < min_order) break;
    level = w.next(level, [](const Subgroup&) { return true; });
  }
  return out;
}

std::vector<Elem> class_representatives(const Subgroup& n, const Subgroup& k, std::size_t budget) {
  const PcGroup& g = n.group();
  const int p = g.p();
  std::vector<Elem> fac;
  for (const auto& b : n.basis())
    if (!k.has_pivot(g.depth(b))) fac.push_back(b);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < fac.size(); ++i) total *= static_cast<std::uint64_t>(p);
  if (total > budget) throw ResourceError("class enumeration budget exceeded", total, 0);
  std::unordered_set<Elem, ElemHash> done;
  std::vector<Elem> reps;
  auto act = [&](const Elem& x, const Elem& y) { return k.coset_rep(g.conj(x, y)); };
  std::vector<int> e(fac.size(), 0);
  while (true) {
    Elem x = g.identity();
    for (std::size_t j = 0; j < fac.size(); ++j)
      if (e[j]) x = g.mul(x, g.pow(fac[j], e[j]));
    x = k.coset_rep(x);
    if (!done.count(x)) {
      auto orbit = orbit_stabilizer<Elem, ElemHash>(n, x, act, budget).first;
      for (const auto& o : orbit) done.insert(o);
      reps.push_back(*std::min_element(orbit.begin(), orbit.end()));
    }
    std::size_t j = 0;
    while (j < e.size() && ++e[j] == p) e[j++] = 0;
    if (j == e.size()) break;
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

// Burnside: the number of orbits is the average stabilizer order. Stabilizers
// are constant on cosets of the centre of n/k, so only those cosets are visited.
std::uint64_t class_count(const Subgroup& n, const Subgroup& k, std::size_t budget) {
  const PcGroup& g = n.group();
  const int p = g.p();
  Subgroup zk = centralizer(n, n.basis(), k);
  std::vector<Elem> fac;
  for (const auto& b : n.basis())
    if (!zk.has_pivot(g.depth(b))) fac.push_back(b);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < fac.size(); ++i) total *= static_cast<std::uint64_t>(p);
  if (total > budget) throw ResourceError("class enumeration budget exceeded", total, 0);
  unsigned __int128 sum = 0;
  std::vector<int> e(fac.size(), 0);
  while (true) {
    Elem x = g.identity();
    for (std::size_t j = 0; j < fac.size(); ++j)
      if (e[j]) x = g.mul(x, g.pow(fac[j], e[j]));
    sum += centralizer(n, {x}, k).order();
    std::size_t j = 0;
    while (j < e.size() && ++e[j] == p) e[j++] = 0;
    if (j == e.size()) break;
  }
  sum *= zk.order() / k.order();
  return static_cast<std::uint64_t>(sum / n.order());
}

}  // namespace permdeg
