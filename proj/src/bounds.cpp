#include "permdeg/bounds.hpp"

#include <algorithm>
#include <optional>

#include "permdeg/mu.hpp"
#include "permdeg/poly.hpp"

namespace permdeg {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int log_p(std::uint64_t x, int p) {
  int k = 0;
  while (x > 1) {
    x /= static_cast<std::uint64_t>(p);
    ++k;
  }
  return k;
}

// Splits `count` characters with square sum `squares` between degrees p and p^2.
std::map<std::uint64_t, std::uint64_t> split_nonlinear(std::uint64_t count, std::uint64_t squares, int p) {
  std::uint64_t p2 = ipow(p, 2), p4 = ipow(p, 4);
  std::map<std::uint64_t, std::uint64_t> out;
  if (squares < p2 * count || (squares - p2 * count) % (p4 - p2) != 0) throw std::logic_error("inconsistent class counts");
  std::uint64_t big = (squares - p2 * count) / (p4 - p2);
  if (big > count) throw std::logic_error("inconsistent class counts");
  if (count > big) out[static_cast<std::uint64_t>(p)] = count - big;
  if (big > 0) out[p2] = big;
  return out;
}

std::string values_text(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

std::vector<std::uint64_t> eval_all(const std::vector<const char*>& polys, int p) {
  std::vector<std::uint64_t> out;
  for (auto t : polys) out.push_back(PPoly::parse(t).at(static_cast<std::uint64_t>(p)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::map<std::uint64_t, std::uint64_t> character_degrees(const PcGroup& g) {
  Subgroup whole = whole_group(g);
  if (is_abelian(whole)) return {{1, g.order()}};
  const int p = g.p();
  if (center(g).index() > ipow(p, 5)) throw InputError("character degrees need |G:Z(G)| <= p^5");
  std::uint64_t k = class_count(whole, trivial_subgroup(g));
  std::uint64_t linear = derived(whole).index();
  auto out = split_nonlinear(k - linear, g.order() - linear, p);
  out[1] = linear;
  return out;
}

std::map<std::uint64_t, std::uint64_t> faithful_character_degrees(const PcGroup& g) {
  Subgroup whole = whole_group(g);
  Subgroup om = socle_of_center(g);
  if (om.is_trivial()) return {{1, 1}};
  const int p = g.p();
  if (center(g).index() > ipow(p, 5)) throw InputError("character degrees need |G:Z(G)| <= p^5");
  std::uint64_t k = class_count(whole, trivial_subgroup(g)) - class_count(whole, om);
  Subgroup gd = derived(whole);
  std::uint64_t linear = gd.index() - join(gd, om).index();
  std::uint64_t squares = g.order() - g.order() / om.order();
  auto out = split_nonlinear(k - linear, squares - linear, p);
  if (linear > 0) out[1] = linear;
  return out;
}

bool has_abelian_direct_factor(const PcGroup& g) {
  // A cyclic direct factor of order q exists iff some K with G/K cyclic of
  // order q satisfies Ω_q(Z) K = G; every abelian direct factor has one.
  Subgroup whole = whole_group(g);
  Subgroup z = center(g);
  auto zb = abelian_basis(z);
  std::map<std::uint64_t, Subgroup> omega;
  for (const auto& k : cyclic_quotient_kernels(whole)) {
    std::uint64_t q = k.index();
    if (q == 1) continue;
    auto it = omega.find(q);
    if (it == omega.end()) {
      std::vector<Elem> gens;
      for (const auto& b : zb) {
        std::uint64_t o = g.order_of(b);
        gens.push_back(g.pow(b, static_cast<std::int64_t>(o > q ? o / q : 1)));
      }
      it = omega.emplace(q, closure(g, gens)).first;
    }
    if (join(it->second, k).index() == 1) return true;
  }
  return false;
}

std::vector<std::uint64_t> order_p6_values(int p, int z) {
  switch (z) {
    case 4:
      return eval_all({"p^4+p", "p^3+p^2+p", "p^3+p^2", "p^3+2p", "3p^2", "2p^2+2p", "2p^2+p", "3p^2+p", "p^2+3p",
                       "p^5", "p^4+p^2", "2p^3", "p^3+2p^2"},
                      p);
    case 3:
      return eval_all({"p^5", "p^4+p^3", "p^4+p^2", "p^4+p", "p^4", "2p^3+p^2", "2p^3+p", "2p^3", "p^3+2p^2",
                       "p^3+p^2+p", "p^3+p^2", "p^3+2p", "p^3+p", "3p^2", "2p^2+p", "2p^2", "p^2+2p"},
                      p);
    case 2:
      return eval_all({"p^4", "2p^3", "p^3+p^2", "p^3+p", "p^3", "2p^2", "p^2+p"}, p);
    case 1:
      return eval_all({"p^4", "p^3", "p^2"}, p);
    default:
      return {};
  }
}

std::vector<std::uint64_t> vz_values(int p, int z) {
  if (z == 4) return order_p6_values(p, 4);
  if (z == 2) return eval_all({"2p^3", "p^3+p", "p^4", "p^3+p^2"}, p);
  return {};
}

std::vector<BoundCheck> bound_oracles(const PcGroup& g, std::uint64_t c, const QuasiCert* cert) {
  std::vector<BoundCheck> out;
  Subgroup whole = whole_group(g);
  if (is_abelian(whole)) return out;
  const int p = g.p();
  const std::uint64_t up = static_cast<std::uint64_t>(p);
  const int n = log_p(g.order(), p);
  Subgroup z = center(g);
  const int m = rank_d(z);
  const std::string cs = "c=" + std::to_string(c);

  std::optional<std::map<std::uint64_t, std::uint64_t>> cd;
  if (z.index() <= ipow(up, 5)) cd = character_degrees(g);
  std::uint64_t max_cd = cd ? cd->rbegin()->first : 0;
  std::uint64_t min_nl = 0;
  if (cd)
    for (const auto& [deg, cnt] : *cd)
      if (deg > 1 && cnt > 0) {
        min_nl = deg;
        break;
      }

  {
    BoundCheck b{"linear-free-divisibility", false, true, {}};
    Subgroup zd = intersect_normal(z, derived(whole));
    b.applicable = cd.has_value() && rank_d(zd) == m;
    if (b.applicable) {
      std::uint64_t need = min_nl * up;
      b.satisfied = c % need == 0;
      b.detail = cs + ", needs " + std::to_string(need) + " | c";
      if (cert)
        for (const auto& cc : cert->classes)
          if (cc.H.index() == 1) {
            b.satisfied = false;
            b.detail += "; certificate contains a linear class";
          }
    }
    out.push_back(b);
  }
  {
    BoundCheck b{"no-abelian-factor-p2-divisibility", false, true, {}};
    b.applicable = !has_abelian_direct_factor(g);
    if (b.applicable) {
      b.satisfied = c % (up * up) == 0;
      b.detail = cs + ", needs p^2 | c";
    }
    out.push_back(b);
  }
  const std::uint64_t ex = exponent(g);
  {
    BoundCheck b{"exponent-degree-range", false, true, {}};
    b.applicable = n == 6 && cd.has_value();
    if (b.applicable) {
      int bexp = log_p(ex, p);
      int e = log_p(max_cd, p);
      std::uint64_t lo = ipow(up, bexp) + static_cast<std::uint64_t>(m - 1) * up;
      std::uint64_t hi = static_cast<std::uint64_t>(m) * ipow(up, bexp + e);
      b.satisfied = lo <= c && c <= hi;
      b.detail = std::to_string(lo) + " <= " + cs + " <= " + std::to_string(hi);
    }
    out.push_back(b);
  }
  const bool cyclic_z = m == 1;
  std::optional<std::map<std::uint64_t, std::uint64_t>> faithful;
  if (cyclic_z && cd) faithful = faithful_character_degrees(g);
  {
    BoundCheck b{"cyclic-centre-bounds", false, true, {}};
    b.applicable = faithful.has_value();
    if (b.applicable) {
      std::uint64_t alpha = 0;
      for (const auto& [deg, cnt] : *faithful)
        if (deg > 1 && cnt > 0) {
          alpha = deg;
          break;
        }
      std::uint64_t lo = alpha * z.order(), hi = max_cd * ex;
      b.satisfied = alpha > 0 && lo <= c && c <= hi;
      b.detail = std::to_string(lo) + " <= " + cs + " <= " + std::to_string(hi);
    }
    out.push_back(b);
  }
  {
    // A degree-set fact rather than a bound on c; it cross-checks the degree solver.
    BoundCheck b{"top-degree-faithful", false, true, {}};
    b.applicable = faithful.has_value() && cd->size() == 3 && max_cd > up;
    if (b.applicable) {
      b.satisfied = faithful->size() == 1 && faithful->begin()->first == max_cd;
      b.detail = "faithful irreducibles have degree " + std::to_string(max_cd);
    }
    out.push_back(b);
  }
  const int zlog = log_p(z.order(), p);
  {
    BoundCheck b{"order-p6-value-set", false, true, {}};
    b.applicable = n == 6 && p >= 5;
    if (b.applicable) {
      auto vals = order_p6_values(p, zlog);
      b.satisfied = std::binary_search(vals.begin(), vals.end(), c);
      b.detail = cs + " in " + values_text(vals);
    }
    out.push_back(b);
  }
  {
    BoundCheck b{"vz-value-set", false, true, {}};
    bool vz = cd && cd->size() == 2 && max_cd * max_cd == z.index();
    b.applicable = n == 6 && vz && (zlog == 2 || zlog == 4);
    if (b.applicable) {
      auto vals = vz_values(p, zlog);
      b.satisfied = std::binary_search(vals.begin(), vals.end(), c);
      b.detail = cs + " in " + values_text(vals);
    }
    out.push_back(b);
  }
  return out;
}

}  // namespace permdeg
