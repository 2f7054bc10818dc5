#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "naive.hpp"
#include "permdeg/structure.hpp"

using namespace permdeg;

namespace {

bool same(const Subgroup& h, const naive::Set& s) {
  auto mine = naive::of(h);
  return mine == s && naive::count(mine) == h.order();
}

// A few small groups given directly as pc presentations.
const char* kSmall[] = {
    "group E2 prime p\ngens x y\norder p^2\nx^p = y^p = [x,y] = 1\n",
    "group E3 prime p\ngens x y z\norder p^3\nomitted commutators trivial\nx^p = y^p = z^p = 1\n",
    "group Heis prime p\ngens x y\norder p^3\nx^p = y^p = [x,y]^p = [x,y,x] = [x,y,y] = 1\n",
    "group M3 prime p\ngens x y\norder p^3\nx^(p^2) = y^p = 1\n[x,y] = x^p\n",
    "group C9C9 prime p\ngens x y\norder p^4\nx^(p^2) = y^(p^2) = [x,y] = 1\n",
    "group Max4 prime p\ngens x y\norder p^4\nx^p = y^p = [x,y,y] = [x,y,x,x] = [x,y,x,y] = [x,y,x]^p = 1\n",
    "group Heis4 prime p\ngens x y z\norder p^4\nomitted commutators trivial\nx^p = y^p = z^(p^2) = 1\n[x,y] = z^p\n",
};

std::vector<Subgroup> random_subgroups(const PcGroup& g, int count, std::uint64_t seed) {
  std::vector<Subgroup> out;
  for (int i = 0; i < count; ++i) {
    // One arbitrary element and sometimes a second one from the bottom half
    // of the pc series, so the brute-force checks stay small.
    std::vector<Elem> gens;
    for (int k = 0; k < 1 + i % 2; ++k) {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      std::uint64_t bound = k == 0 ? g.order() : g.order() / 125;
      gens.push_back(g.unrank((seed >> 17) % bound));
    }
    out.push_back(closure(g, gens));
  }
  return out;
}

}  // namespace

TEST_CASE("canonical subgroup form") {
  auto g = fixtures::load("phi3/G_3_3.pres", 5);
  auto a = closure(*g, {*g->named("a3"), *g->named("a2")});
  auto b = closure(*g, {g->mul(*g->named("a3"), *g->named("a2")), *g->named("a2")});
  CHECK(a == b);
  CHECK(a.key() == b.key());
  CHECK(a.order() == 25);
  CHECK(a.contains(g->pow(*g->named("a2"), 3)));
  CHECK(!a.contains(*g->named("a4")));
  auto x = g->unrank(12345);
  auto r = a.coset_rep(x);
  CHECK(a.coset_rep(g->mul(*g->named("a3"), x)) == r);
}

TEST_CASE("catalog groups at p = 5 against brute force") {
  for (const auto& c : fixtures::sample_cases()) {
    auto g = fixtures::load(c.file, 5, c.params);
    CAPTURE(c.file);
    CHECK(same(center(*g), naive::center(*g)));
    CHECK(same(derived(whole_group(*g)), naive::derived(*g)));
    CHECK(same(frattini(whole_group(*g)), naive::frattini(*g)));
    CHECK(exponent(*g) == naive::exponent(*g));
  }
}

TEST_CASE("centres of the named groups") {
  auto g33 = fixtures::load("phi3/G_3_3.pres", 5);
  CHECK(abelian_invariants(center(*g33)) == std::vector<std::uint64_t>{125});
  auto g428 = fixtures::load("phi4/G_4_28.pres", 5);
  CHECK(abelian_invariants(center(*g428)) == std::vector<std::uint64_t>{5, 5, 5});
  auto big = fixtures::load("phi3/G_3_3.pres", 97);
  CHECK(abelian_invariants(center(*big)) == std::vector<std::uint64_t>{97ULL * 97 * 97});
  CHECK(socle_of_center(*big).order() == 97);
  CHECK(core(closure(*g33, {*g33->named("a3"), *g33->named("a2")})).is_trivial());
}

TEST_CASE("normalizer, intersection and core against brute force") {
  for (const char* file : {"phi3/G_3_3.pres", "phi8/G_8_7.pres"}) {
    auto g = fixtures::load(file, 5);
    CAPTURE(file);
    auto subs = random_subgroups(*g, 4, 99);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      auto hs = naive::of(subs[i]);
      CHECK(same(normalizer(whole_group(*g), subs[i]), naive::normalizer(*g, hs, subs[i].basis())));
      CHECK(same(core(subs[i]), naive::core(*g, hs)));
      const auto& other = subs[(i + 1) % subs.size()];
      CHECK(same(intersection(subs[i], other), naive::intersect(hs, naive::of(other))));
      CHECK(same(join(subs[i], other), naive::generate(*g, [&] {
                   auto v = subs[i].basis();
                   v.insert(v.end(), other.basis().begin(), other.basis().end());
                   return v;
                 }())));
    }
  }
}

TEST_CASE("maximal subgroups") {
  for (const auto& c : fixtures::catalog_cases()) {
    auto g = fixtures::load(c.file, 5, c.params);
    auto whole = whole_group(*g);
    auto phi = frattini(whole);
    int d = rank_d(whole);
    auto ms = maximal_subgroups(whole);
    std::uint64_t expect = 0;
    for (int i = 0, q = 1; i < d; ++i, q *= 5) expect += q;
    CHECK(ms.size() == expect);
    std::sort(ms.begin(), ms.end());
    CHECK(std::adjacent_find(ms.begin(), ms.end()) == ms.end());
    for (const auto& m : ms) {
      CHECK(m.index() == 5);
      CHECK(is_subgroup(phi, m));
      CHECK(is_normal(m, whole));
    }
  }
}

TEST_CASE("lower central series and class") {
  for (const auto& c : fixtures::sample_cases()) {
    auto g = fixtures::load(c.file, 5, c.params);
    auto series = lower_central_series(*g);
    naive::Set cur = naive::of(series[0]);
    for (std::size_t i = 1; i < series.size(); ++i) {
      std::vector<Elem> cs;
      for (const auto& x : naive::members(*g, cur))
        for (int j = 0; j < g->n(); ++j) cs.push_back(g->comm(x, g->gen(j)));
      cur = naive::generate(*g, cs);
      CHECK(same(series[i], cur));
    }
    CHECK(series.back().is_trivial());
    CHECK(nilpotency_class(*g) == static_cast<int>(series.size()) - 1);
  }
}

TEST_CASE("conjugacy class counts") {
  for (const char* file : {"phi3/G_3_3.pres", "phi4/G_4_28.pres", "phi12/G_12_14.pres"}) {
    auto g = fixtures::load(file, 5);
    CAPTURE(file);
    CHECK(class_count(whole_group(*g), trivial_subgroup(*g)) == naive::class_count(*g));
  }
  for (int p : {3, 5}) {
    for (const char* text : kSmall) {
      auto g = fixtures::build(text, p);
      CHECK(class_count(whole_group(*g), trivial_subgroup(*g)) == naive::class_count(*g));
    }
  }
  // Classes of G/Z for G_(3,3) match the group of order p^3 it maps onto.
  auto g = fixtures::load("phi3/G_3_3.pres", 5);
  auto q = class_count(whole_group(*g), center(*g));
  CHECK(q == 5 * 5 + 5 - 1);
}

TEST_CASE("subgroup classes of small groups") {
  for (int p : {3, 5}) {
    for (const char* text : kSmall) {
      auto g = fixtures::build(text, p);
      CAPTURE(g->name);
      CAPTURE(p);
      if (p == 5 && g->order() > 125) continue;
      auto reps = subgroups_up_to_conjugacy(*g, 1);
      CHECK(reps.size() == naive::subgroup_class_count(*g));
    }
  }
  auto e2 = fixtures::build(kSmall[0], 7);
  CHECK(subgroups_up_to_conjugacy(*e2, 1).size() == 7 + 3);
}

TEST_CASE("abelian invariants and omega") {
  auto g = fixtures::build(kSmall[4], 3);
  auto w = whole_group(*g);
  CHECK(abelian_invariants(w) == std::vector<std::uint64_t>{9, 9});
  CHECK(omega1(w).order() == 9);
  CHECK(is_abelian(w));
  CHECK(!is_cyclic_quotient(w, trivial_subgroup(*g)));
  auto m3 = fixtures::build(kSmall[3], 5);
  CHECK(abelian_invariants(whole_group(*m3), derived(whole_group(*m3))) == std::vector<std::uint64_t>{5, 5});
  CHECK_THROWS_AS(abelian_invariants(whole_group(*m3)), InputError);
}

TEST_CASE("layered kernels at a large prime") {
  for (const auto& c : fixtures::catalog_cases()) {
    if (!c.any_prime) continue;
    auto g = fixtures::load(c.file, 97, c.params);
    CAPTURE(c.file);
    auto z = center(*g);
    for (const auto& x : z.basis())
      for (int i = 0; i < g->n(); ++i) CHECK(g->comm(x, g->gen(i)) == g->identity());
    auto omega = omega1(z);
    for (const auto& x : omega.basis()) CHECK(g->is_identity(g->pow(x, 97)));
    CHECK(is_normal(derived(whole_group(*g)), whole_group(*g)));
  }
}
