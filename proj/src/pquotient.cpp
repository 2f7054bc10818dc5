#include <algorithm>
#include <random>
#include <stdexcept>

#include "permdeg/errors.hpp"
#include "permdeg/linalg.hpp"
#include "permdeg/pcpres.hpp"

namespace permdeg {

namespace {

constexpr int kWide = 48;
using WVec = ExpVec<kWide>;
using WCol = Collector<kWide>;

struct Slot {
  enum Kind { Power, Comm, Image };
  Kind kind;
  int a;  // generator (power), k (comm) or input index (image)
  int b;  // i for comm
  bool operator==(const Slot&) const = default;
};

template <int N, class Gen>
ExpVec<N> eval_generic(const Collector<N>& col, const Word& w, const Bindings& bnd, const Gen& gen) {
  switch (w.kind) {
    case Word::Kind::One: return ExpVec<N>{};
    case Word::Kind::Gen: return gen(w.gen);
    case Word::Kind::Prod: {
      ExpVec<N> r{};
      for (const auto& part : w.parts) r = col.mul(r, eval_generic(col, part, bnd, gen));
      return r;
    }
    case Word::Kind::Pow:
      return col.pow(eval_generic(col, w.parts[0], bnd, gen), eval_expr(w.exponent, bnd));
    case Word::Kind::Comm:
      return col.comm(eval_generic(col, w.parts[0], bnd, gen), eval_generic(col, w.parts[1], bnd, gen));
  }
  return ExpVec<N>{};
}

// Overlap words of a pc presentation: each pair must collect to the same
// normal form. x is generator-index based.
template <int N>
std::vector<std::pair<ExpVec<N>, ExpVec<N>>> overlaps(const Collector<N>& col, int n) {
  int p = col.p();
  auto g = [](int i) {
    ExpVec<N> v{};
    v[i] = 1;
    return v;
  };
  auto gp = [&](int i, int e) { return col.pow(g(i), e); };
  std::vector<std::pair<ExpVec<N>, ExpVec<N>>> out;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i)
        out.push_back({col.mul(col.mul(g(k), g(j)), g(i)), col.mul(g(k), col.mul(g(j), g(i)))});
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      out.push_back({col.mul(col.mul(gp(j, p - 1), g(j)), g(i)),
                     col.mul(gp(j, p - 1), col.mul(g(j), g(i)))});
      out.push_back({col.mul(g(j), col.mul(gp(i, p - 1), g(i))),
                     col.mul(col.mul(g(j), g(i)), gp(i, p - 1))});
    }
    out.push_back({col.mul(col.mul(gp(j, p - 1), g(j)), g(j)), col.mul(g(j), col.mul(gp(j, p - 1), g(j)))});
  }
  return out;
}

}  // namespace

Elem eval_word(const PcGroup& g, const Word& w, const Bindings& b) {
  auto gen = [&](const std::string& s) -> Elem {
    auto x = g.named(s);
    if (!x) throw InputError("unknown generator '" + s + "'");
    return *x;
  };
  switch (w.kind) {
    case Word::Kind::One: return g.identity();
    case Word::Kind::Gen: return gen(w.gen);
    case Word::Kind::Prod: {
      Elem r = g.identity();
      for (const auto& part : w.parts) r = g.mul(r, eval_word(g, part, b));
      return r;
    }
    case Word::Kind::Pow: return g.pow(eval_word(g, w.parts[0], b), eval_expr(w.exponent, b));
    case Word::Kind::Comm: return g.comm(eval_word(g, w.parts[0], b), eval_word(g, w.parts[1], b));
  }
  return g.identity();
}

std::vector<std::string> consistency_check(const PcGroup& g) {
  std::vector<Vec> power(g.n());
  std::vector<std::vector<Vec>> comm(g.n(), std::vector<Vec>(g.n()));
  for (int i = 0; i < g.n(); ++i) {
    power[i] = g.power_rule(i);
    for (int k = i + 1; k < g.n(); ++k) comm[k][i] = g.comm_rule(k, i);
  }
  // Full collector without the central shortcut so the trailing generators
  // are tested too.
  Collector<kMaxPcGens> col(g.n(), g.p(), g.n(), power, comm);
  std::vector<std::string> out;
  for (const auto& [l, r] : overlaps(col, g.n())) {
    if (l != r) out.push_back(g.format(g.elem(l)) + " != " + g.format(g.elem(r)));
  }
  return out;
}

std::shared_ptr<PcGroup> refine(const Presentation& pres, const Bindings& b, const RefineOptions& opt) {
  const int p = b.p;
  if (opt.max_gens < 1 || opt.max_gens > kMaxPcGens)
    throw InputError("max_gens must lie in 1.." + std::to_string(kMaxPcGens));
  const int ng = static_cast<int>(pres.generators.size());
  std::vector<Word> relators;
  for (const auto& r : pres.all_relations()) relators.push_back(Word{Word::Kind::Prod, {}, {r.lhs, Word{Word::Kind::Pow, {}, {r.rhs}, Expr::number(-1)}}, {}});

  // Current quotient P.
  int n = 0;
  std::vector<WVec> power;
  std::vector<std::vector<WVec>> comm;
  std::vector<WVec> image(ng);
  std::vector<Slot> defs;
  std::mt19937_64 rng(0x5eed);

  while (true) {
    std::vector<Slot> slots;
    for (int x = 0; x < ng; ++x) {
      Slot s{Slot::Image, x, 0};
      if (std::find(defs.begin(), defs.end(), s) == defs.end()) slots.push_back(s);
    }
    for (int i = 0; i < n; ++i) {
      Slot s{Slot::Power, i, 0};
      if (std::find(defs.begin(), defs.end(), s) == defs.end()) slots.push_back(s);
    }
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < k; ++i) {
        Slot s{Slot::Comm, k, i};
        if (std::find(defs.begin(), defs.end(), s) == defs.end()) slots.push_back(s);
      }
    }
    const int m = static_cast<int>(slots.size());
    if (n + m > kWide) throw InputError(pres.name + ": too many tails in the p-quotient");

    std::vector<WVec> tpower(n + m);
    std::vector<std::vector<WVec>> tcomm(n + m, std::vector<WVec>(n + m));
    std::vector<WVec> timage = image;
    for (int i = 0; i < n; ++i) {
      tpower[i] = power[i];
      for (int k = i + 1; k < n; ++k) tcomm[k][i] = comm[k][i];
    }
    for (int t = 0; t < m; ++t) {
      const Slot& s = slots[t];
      if (s.kind == Slot::Image) timage[s.a][n + t] = 1;
      if (s.kind == Slot::Power) tpower[s.a][n + t] = 1;
      if (s.kind == Slot::Comm) tcomm[s.a][s.b][n + t] = 1;
    }
    WCol col(n + m, p, n, tpower, tcomm);

    GfMatrix rel(p, m);
    auto add_diff = [&](const WVec& l, const WVec& r, const char* what) {
      for (int i = 0; i < n; ++i)
        if (l[i] != r[i]) throw std::logic_error(std::string("p-quotient: ") + what + " differs below the tails");
      std::vector<int> row(m);
      for (int t = 0; t < m; ++t) row[t] = ((l[n + t] - r[n + t]) % p + p) % p;
      rel.add(std::move(row));
    };
    for (const auto& [l, r] : overlaps(col, n)) add_diff(l, r, "overlap");
    if (n > 0) {
      std::uniform_int_distribution<int> d(0, p - 1);
      auto rnd = [&] {
        WVec v{};
        for (int i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>(d(rng));
        return v;
      };
      for (int s = 0; s < 32; ++s) {
        WVec x = rnd(), y = rnd(), z = rnd();
        add_diff(col.mul(col.mul(x, y), z), col.mul(x, col.mul(y, z)), "associativity");
      }
    }
    auto gen = [&](const std::string& s) {
      for (int x = 0; x < ng; ++x)
        if (pres.generators[x] == s) return timage[x];
      throw InputError("unknown generator '" + s + "'");
    };
    for (const auto& w : relators) add_diff(eval_generic(col, w, b, gen), WVec{}, "relator");

    // Free tails become new generators; the rest are expressed through them.
    std::vector<char> is_piv(m, 0);
    for (int c : rel.pivots()) is_piv[c] = 1;
    std::vector<int> fresh(m, -1);
    int added = 0;
    for (int t = 0; t < m; ++t)
      if (!is_piv[t]) fresh[t] = n + added++;
    if (added == 0) break;
    if (n + added > opt.max_gens) {
      throw InputError(pres.name + ": p-quotient exceeds order p^" + std::to_string(opt.max_gens));
    }
    std::vector<WVec> subst(m);
    for (int t = 0; t < m; ++t)
      if (fresh[t] >= 0) subst[t][fresh[t]] = 1;
    for (std::size_t r = 0; r < rel.pivots().size(); ++r) {
      int t = rel.pivots()[r];
      for (int f = 0; f < m; ++f) {
        int c = rel.rows()[r][f];
        if (f != t && c) subst[t][fresh[f]] = static_cast<std::uint8_t>((p - c) % p);
      }
    }
    auto apply = [&](WVec v) {
      WVec out{};
      for (int i = 0; i < n; ++i) out[i] = v[i];
      for (int t = 0; t < m; ++t) {
        if (!v[n + t]) continue;
        for (int j = n; j < n + added; ++j)
          out[j] = static_cast<std::uint8_t>((out[j] + v[n + t] * subst[t][j]) % p);
      }
      return out;
    };
    int nn = n + added;
    std::vector<WVec> npower(nn);
    std::vector<std::vector<WVec>> ncomm(nn, std::vector<WVec>(nn));
    for (int i = 0; i < n; ++i) {
      npower[i] = apply(tpower[i]);
      for (int k = i + 1; k < n; ++k) ncomm[k][i] = apply(tcomm[k][i]);
    }
    for (int x = 0; x < ng; ++x) image[x] = apply(timage[x]);
    for (int t = 0; t < m; ++t)
      if (fresh[t] >= 0) defs.push_back(slots[t]);
    n = nn;
    power = std::move(npower);
    comm = std::move(ncomm);
  }

  auto narrow = [&](const WVec& v) {
    Vec out{};
    for (int i = 0; i < n; ++i) out[i] = v[i];
    return out;
  };
  std::vector<Vec> fp(n);
  std::vector<std::vector<Vec>> fc(n, std::vector<Vec>(n));
  for (int i = 0; i < n; ++i) {
    fp[i] = narrow(power[i]);
    for (int k = i + 1; k < n; ++k) fc[k][i] = narrow(comm[k][i]);
  }
  auto g = std::make_shared<PcGroup>(p, n, fp, fc);
  g->name = pres.name;
  std::vector<std::pair<std::string, Elem>> names;
  for (int x = 0; x < ng; ++x) names.push_back({pres.generators[x], g->elem(narrow(image[x]))});
  g->set_names(std::move(names));
  if (opt.check_order && pres.order) {
    std::int64_t want = eval_expr(*pres.order, b);
    if (static_cast<std::uint64_t>(want) != g->order()) {
      throw InputError(pres.name + ": relations define a group of order " + std::to_string(g->order()) +
                       ", declared " + std::to_string(want));
    }
  }
  return g;
}

}  // namespace permdeg
