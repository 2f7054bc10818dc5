#pragma once

// Brute-force group theory on a full multiplication table. Independent of the
// library's subgroup algorithms; only the collector is used to fill the table.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "permdeg/pcgroup.hpp"
#include "permdeg/structure.hpp"

namespace naive {

using Bits = std::vector<std::uint64_t>;

struct TableGroup {
  int p = 0;
  int n = 0;
  std::vector<std::uint32_t> mul;  // mul[a * order + b]
  std::vector<std::uint32_t> inv;
  std::uint32_t order = 0;

  explicit TableGroup(const permdeg::PcGroup& g) : p(g.p()), n(g.n()), order(static_cast<std::uint32_t>(g.order())) {
    mul.resize(static_cast<std::size_t>(order) * order);
    inv.resize(order);
    for (std::uint32_t a = 0; a < order; ++a) {
      auto x = g.unrank(a);
      for (std::uint32_t b = 0; b < order; ++b)
        mul[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint32_t>(g.rank(g.mul(x, g.unrank(b))));
    }
    for (std::uint32_t a = 0; a < order; ++a)
      for (std::uint32_t b = 0; b < order; ++b)
        if (mul[static_cast<std::size_t>(a) * order + b] == 0) inv[a] = b;
  }

  std::uint32_t m(std::uint32_t a, std::uint32_t b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
  std::uint32_t conj(std::uint32_t a, std::uint32_t by) const { return m(m(inv[by], a), by); }
  std::uint32_t pw(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 0;
    for (std::uint64_t i = 0; i < k; ++i) r = m(r, a);
    return r;
  }
  std::uint64_t elem_order(std::uint32_t a) const {
    std::uint64_t k = 1;
    for (std::uint32_t x = a; x != 0; x = m(x, a)) ++k;
    return k;
  }

  Bits empty() const { return Bits((order + 63) / 64, 0); }
  static bool has(const Bits& s, std::uint32_t x) { return (s[x / 64] >> (x % 64)) & 1; }
  static void set(Bits& s, std::uint32_t x) { s[x / 64] |= std::uint64_t{1} << (x % 64); }
  static std::uint64_t count(const Bits& s) {
    std::uint64_t c = 0;
    for (auto w : s) c += static_cast<std::uint64_t>(__builtin_popcountll(w));
    return c;
  }
  static Bits meet(const Bits& a, const Bits& b) {
    Bits r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] &= b[i];
    return r;
  }

  Bits generate(const std::vector<std::uint32_t>& gens) const {
    Bits s = empty();
    std::vector<std::uint32_t> q{0};
    set(s, 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (auto g : gens) {
        auto y = m(q[i], g);
        if (!has(s, y)) {
          set(s, y);
          q.push_back(y);
        }
      }
    return s;
  }

  std::vector<std::uint32_t> members(const Bits& s) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < order; ++x)
      if (has(s, x)) out.push_back(x);
    return out;
  }

  std::vector<std::vector<std::uint32_t>> classes() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<char> seen(order, 0);
    for (std::uint32_t x = 0; x < order; ++x) {
      if (seen[x]) continue;
      std::set<std::uint32_t> cls;
      for (std::uint32_t y = 0; y < order; ++y) cls.insert(conj(x, y));
      for (auto c : cls) seen[c] = 1;
      out.emplace_back(cls.begin(), cls.end());
    }
    return out;
  }

  // Every subgroup, grown one index-p step at a time from the trivial group.
  // ⟨H, x⟩ has order p|H| exactly when x normalizes H and x^p lies in H.
  std::vector<Bits> subgroups() const {
    std::set<Bits> found;
    std::vector<std::pair<Bits, std::vector<std::uint32_t>>> todo{{generate({}), {}}};
    found.insert(todo[0].first);
    for (std::size_t i = 0; i < todo.size(); ++i) {
      const Bits h = todo[i].first;
      const std::vector<std::uint32_t> hg = todo[i].second;
      Bits covered = h;
      for (std::uint32_t x = 0; x < order; ++x) {
        if (has(covered, x) || !has(h, pw(x, static_cast<std::uint64_t>(p)))) continue;
        bool normalizes = true;
        for (auto y : hg) normalizes = normalizes && has(h, conj(y, x));
        if (!normalizes) continue;
        auto kg = hg;
        kg.push_back(x);
        Bits k = generate(kg);
        for (std::size_t w = 0; w < k.size(); ++w) covered[w] |= k[w];
        if (found.insert(k).second) todo.push_back({k, kg});
      }
    }
    std::vector<Bits> out;
    for (auto& t : todo) out.push_back(std::move(t.first));
    return out;
  }

  Bits center() const {
    Bits z = empty();
    for (std::uint32_t x = 0; x < order; ++x) {
      bool c = true;
      for (std::uint32_t y = 0; y < order && c; ++y) c = m(x, y) == m(y, x);
      if (c) set(z, x);
    }
    return z;
  }

  // d(Z(G)) from the number of central elements of order dividing p.
  int center_rank() const {
    auto z = members(center());
    std::uint64_t c = 0;
    for (auto x : z) c += pw(x, static_cast<std::uint64_t>(p)) == 0;
    int d = 0;
    while (c > 1) {
      c /= static_cast<std::uint64_t>(p);
      ++d;
    }
    return d;
  }
};

// Core of h: the union of the conjugacy classes it contains.
inline Bits core_of(const TableGroup& t, const Bits& h, const std::vector<std::vector<std::uint32_t>>& classes) {
  Bits c = t.empty();
  for (const auto& cls : classes) {
    bool inside = true;
    for (auto x : cls) inside = inside && TableGroup::has(h, x);
    if (inside)
      for (auto x : cls) TableGroup::set(c, x);
  }
  return c;
}

// Exhaustive minimum of sum |G:H_i| over part sets of size at most max_parts
// whose cores meet trivially. The objective depends only on the cores and
// the indices, so the search runs over (core, least index) pairs.
inline std::uint64_t exhaustive_min_degree(const TableGroup& t, int max_parts) {
  auto classes = t.classes();
  std::map<Bits, std::uint64_t> best_index;
  for (const auto& h : t.subgroups()) {
    std::uint64_t idx = t.order / TableGroup::count(h);
    Bits c = core_of(t, h, classes);
    auto it = best_index.find(c);
    if (it == best_index.end() || idx < it->second) best_index[c] = idx;
  }
  std::vector<std::pair<Bits, std::uint64_t>> items(best_index.begin(), best_index.end());
  // Dijkstra over (intersection so far, parts used).
  using State = std::pair<Bits, int>;
  std::map<State, std::uint64_t> dist;
  using Q = std::pair<std::uint64_t, State>;
  std::priority_queue<Q, std::vector<Q>, std::greater<Q>> pq;
  Bits all = t.empty();
  for (std::uint32_t x = 0; x < t.order; ++x) TableGroup::set(all, x);
  pq.push({0, {all, 0}});
  dist[{all, 0}] = 0;
  while (!pq.empty()) {
    auto [cost, st] = pq.top();
    pq.pop();
    if (dist[st] < cost) continue;
    if (TableGroup::count(st.first) == 1) return cost;
    if (st.second == max_parts) continue;
    for (const auto& [c, idx] : items) {
      State nx{TableGroup::meet(st.first, c), st.second + 1};
      auto it = dist.find(nx);
      if (it == dist.end() || cost + idx < it->second) {
        dist[nx] = cost + idx;
        pq.push({cost + idx, nx});
      }
    }
  }
  return 0;
}

// Table bits of a library subgroup.
inline Bits bits_of(const TableGroup& t, const permdeg::PcGroup& g, const permdeg::Subgroup& s) {
  Bits b = t.empty();
  // Enumerate s from its basis: every element is a product of basis powers.
  std::vector<permdeg::Elem> elems{g.identity()};
  for (auto it = s.basis().rbegin(); it != s.basis().rend(); ++it) {
    std::vector<permdeg::Elem> next;
    for (const auto& e : elems) {
      permdeg::Elem x = e;
      for (int k = 0; k < g.p(); ++k) {
        next.push_back(x);
        x = g.mul(*it, x);
      }
    }
    elems = std::move(next);
  }
  for (const auto& e : elems) TableGroup::set(b, static_cast<std::uint32_t>(g.rank(e)));
  return b;
}

}  // namespace naive
