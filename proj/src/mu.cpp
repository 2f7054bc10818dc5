#include "permdeg/mu.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "permdeg/linalg.hpp"

namespace permdeg {

RepSet make_repset(std::vector<Subgroup> parts) {
  RepSet r;
  for (const auto& h : parts) r.degree += h.index();
  r.parts = std::move(parts);
  return r;
}

PermRep coset_action(const PcGroup& g, const std::vector<Subgroup>& parts, std::uint64_t max_degree) {
  PermRep rep;
  for (const auto& h : parts) rep.degree += h.index();
  if (rep.degree > max_degree) throw ResourceError("coset action too large", rep.degree, max_degree);
  rep.images.assign(g.n(), std::vector<std::uint32_t>(rep.degree));
  std::uint32_t offset = 0;
  for (const auto& h : parts) {
    // Points are canonical coset representatives, in breadth-first order.
    std::vector<Elem> pts{h.coset_rep(g.identity())};
    std::unordered_map<Elem, std::uint32_t, ElemHash> where{{pts[0], 0}};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (int k = 0; k < g.n(); ++k) {
        Elem y = h.coset_rep(g.mul(pts[i], g.gen(k)));
        auto [it, fresh] = where.emplace(y, static_cast<std::uint32_t>(pts.size()));
        if (fresh) pts.push_back(y);
        rep.images[k][offset + i] = offset + it->second;
      }
    }
    if (pts.size() != h.index()) throw std::logic_error("coset enumeration miscounted");
    offset += static_cast<std::uint32_t>(pts.size());
  }
  auto bad = check_relations(g, rep);
  if (!bad.empty()) throw std::logic_error("coset action breaks relation " + bad.front());
  return rep;
}

std::vector<std::uint32_t> permutation_of(const PcGroup& g, const PermRep& rep, const Elem& x) {
  std::vector<std::uint32_t> perm(rep.degree);
  for (std::uint32_t i = 0; i < rep.degree; ++i) perm[i] = i;
  for (int k = 0; k < g.n(); ++k)
    for (int e = 0; e < x.e[k]; ++e)
      for (auto& v : perm) v = rep.images[k][v];
  return perm;
}

std::vector<std::string> check_relations(const PcGroup& g, const PermRep& rep) {
  std::vector<std::string> bad;
  auto apply_gen = [&](std::vector<std::uint32_t> perm, int k, int times) {
    for (int t = 0; t < times; ++t)
      for (auto& v : perm) v = rep.images[k][v];
    return perm;
  };
  std::vector<std::uint32_t> id(rep.degree);
  for (std::uint32_t i = 0; i < rep.degree; ++i) id[i] = i;
  for (int i = 0; i < g.n(); ++i) {
    if (apply_gen(id, i, g.p()) != permutation_of(g, rep, g.elem(g.power_rule(i))))
      bad.push_back("g" + std::to_string(i + 1) + "^p");
    for (int k = i + 1; k < g.n(); ++k) {
      // g_k g_i = g_i g_k [g_k, g_i]
      auto lhs = apply_gen(apply_gen(id, k, 1), i, 1);
      auto rhs = apply_gen(apply_gen(id, i, 1), k, 1);
      auto c = permutation_of(g, rep, g.elem(g.comm_rule(k, i)));
      for (auto& v : rhs) v = c[v];
      if (lhs != rhs) bad.push_back("[g" + std::to_string(k + 1) + ",g" + std::to_string(i + 1) + "]");
    }
  }
  return bad;
}

bool kernel_trivial(const PcGroup& g, const PermRep& rep) {
  Subgroup s = socle_of_center(g);
  const auto& b = s.basis();
  std::vector<int> e(b.size(), 0);
  std::vector<std::uint32_t> id(rep.degree);
  for (std::uint32_t i = 0; i < rep.degree; ++i) id[i] = i;
  while (true) {
    std::size_t j = 0;
    while (j < e.size() && ++e[j] == g.p()) e[j++] = 0;
    if (j == e.size()) break;
    Elem x = g.identity();
    for (std::size_t t = 0; t < b.size(); ++t)
      if (e[t]) x = g.mul(x, g.pow(b[t], e[t]));
    if (permutation_of(g, rep, x) == id) return false;
  }
  return true;
}

Faithfulness is_faithful(const PcGroup& g, const std::vector<Subgroup>& parts) {
  // Central elements of order p lie in a core exactly when they lie in the
  // subgroup, and a nontrivial normal subgroup always meets Ω(Z(G)).
  Subgroup cur = socle_of_center(g);
  for (const auto& h : parts) cur = intersect_normal(h, cur);
  Faithfulness f;
  f.faithful = cur.is_trivial();
  if (!f.faithful) f.witness = cur.basis().front();
  return f;
}

std::uint64_t mu_abelian(const std::vector<std::uint64_t>& invariants) {
  std::uint64_t s = 0;
  for (auto q : invariants) s += q;
  return invariants.empty() ? 1 : s;
}

std::uint64_t mu_direct_product(std::uint64_t mu_h, std::uint64_t mu_k) { return mu_h + mu_k; }

std::vector<Elem> abelian_basis(const Subgroup& a) {
  const PcGroup& g = a.group();
  if (!is_abelian(a)) throw InputError("abelian_basis needs an abelian subgroup");
  const int m = a.size();
  if (m == 0) return {};
  using i128 = __int128;
  const std::int64_t p = g.p();
  std::int64_t modulus = 1;
  for (int i = 0; i < m; ++i) modulus *= p;
  auto norm = [&](i128 v) { return static_cast<std::int64_t>(((v % modulus) + modulus) % modulus); };
  auto val = [&](std::int64_t v) {
    int k = 0;
    if (v == 0) return m;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    return k;
  };
  auto unit_inverse = [&](std::int64_t u) {
    // u is prime to p; Newton iteration for the inverse modulo p^m.
    i128 x = GfMatrix::inverse(static_cast<int>(u % p), static_cast<int>(p));
    for (int it = 0; it < 7; ++it) x = norm(x * (2 - norm(static_cast<i128>(u) * x)));
    return static_cast<std::int64_t>(x);
  };
  // Relation rows p e_i - c_i over Z / p^m, where b_i^p = prod b_j^{c_ij}.
  std::vector<std::vector<std::int64_t>> r(m, std::vector<std::int64_t>(m, 0));
  Subgroup triv = trivial_subgroup(g);
  for (int i = 0; i < m; ++i) {
    auto c = factor_coords(a, triv, g.pow(a.basis()[i], p));
    for (int j = 0; j < m; ++j) r[i][j] = norm(-static_cast<i128>(c[j]));
    r[i][i] = norm(r[i][i] + p);
  }
  // winv tracks the inverse of the column operations.
  std::vector<std::vector<std::int64_t>> winv(m, std::vector<std::int64_t>(m, 0));
  for (int i = 0; i < m; ++i) winv[i][i] = 1;
  std::vector<std::int64_t> diag(m, 0);
  for (int t = 0; t < m; ++t) {
    int bi = -1, bj = -1, bv = m + 1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < m; ++j) {
        int v = val(r[i][j]);
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
        }
      }
    if (bv >= m) break;
    std::swap(r[t], r[bi]);
    for (int i = 0; i < m; ++i) std::swap(r[i][t], r[i][bj]);
    std::swap(winv[t], winv[bj]);
    std::int64_t q = 1;
    for (int k = 0; k < bv; ++k) q *= p;
    std::int64_t u = unit_inverse(r[t][t] / q);
    for (int j = 0; j < m; ++j) r[t][j] = norm(static_cast<i128>(r[t][j]) * u);
    for (int i = t + 1; i < m; ++i) {
      std::int64_t f = r[i][t] / q;
      if (!f) continue;
      for (int j = 0; j < m; ++j) r[i][j] = norm(r[i][j] - static_cast<i128>(f) * r[t][j]);
    }
    for (int j = t + 1; j < m; ++j) {
      std::int64_t f = r[t][j] / q;
      if (!f) continue;
      // col_j -= f col_t, so row_t of winv gains f row_j.
      for (int i = 0; i < m; ++i) r[i][j] = norm(r[i][j] - static_cast<i128>(f) * r[i][t]);
      for (int k = 0; k < m; ++k) winv[t][k] = norm(winv[t][k] + static_cast<i128>(f) * winv[j][k]);
    }
    diag[t] = q;
  }
  std::vector<std::pair<std::uint64_t, Elem>> out;
  for (int t = 0; t < m; ++t) {
    std::uint64_t d = diag[t] ? static_cast<std::uint64_t>(diag[t]) : static_cast<std::uint64_t>(modulus);
    if (d == 1) continue;
    Elem z = g.identity();
    for (int k = 0; k < m; ++k)
      if (winv[t][k]) z = g.mul(z, g.pow(a.basis()[k], winv[t][k]));
    if (g.order_of(z) != d) throw std::logic_error("abelian_basis: generator order mismatch");
    out.push_back({d, z});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<Elem> gens;
  std::uint64_t prod = 1;
  for (auto& [d, z] : out) {
    gens.push_back(z);
    prod *= d;
  }
  if (prod != a.order()) throw std::logic_error("abelian_basis: orders do not multiply to |A|");
  return gens;
}

MuResult minimal_degree(const PcGroup& g, const SearchBudget& budget, bool force_search) {
  MuResult res;
  Subgroup whole = whole_group(g);
  if (whole.is_trivial()) {
    res.mu = 1;
    res.cert = make_repset({whole});
    res.by_formula = true;
    return res;
  }
  if (is_abelian(whole) && !force_search) {
    auto basis = abelian_basis(whole);
    std::vector<Subgroup> parts;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Elem> rest;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) rest.push_back(basis[j]);
      parts.push_back(closure(g, rest));
    }
    res.cert = make_repset(std::move(parts));
    res.mu = mu_abelian(abelian_invariants(whole));
    res.by_formula = true;
    if (res.cert.degree != res.mu) throw std::logic_error("abelian certificate degree mismatch");
    return res;
  }
  auto sel = min_faithful_selection(
      g, [](const Subgroup& k) -> std::optional<Subgroup> { return k; }, budget, &res.stats);
  std::vector<Subgroup> parts;
  for (auto& part : sel.parts) parts.push_back(part.k);
  res.cert = make_repset(std::move(parts));
  res.mu = sel.cost;
  return res;
}

std::string format_perm_rep(const PermRep& rep) {
  std::ostringstream out;
  out << "degree " << rep.degree << "\n";
  for (const auto& img : rep.images) {
    for (std::size_t i = 0; i < img.size(); ++i) out << (i ? " " : "") << img[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace permdeg
