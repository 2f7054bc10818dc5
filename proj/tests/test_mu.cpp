#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "naive_table.hpp"
#include "permdeg/mu.hpp"

using namespace permdeg;

namespace {

Subgroup sub(const PcGroup& g, std::initializer_list<const char*> names) {
  std::vector<Elem> gens;
  for (auto n : names) gens.push_back(*g.named(n));
  return closure(g, gens);
}

const char* kG323Factor =
    "group H prime p\ngens a1 a2 a3 a4 b1 b2\norder p^5\nomitted commutators trivial\n"
    "[a3,a4] = a2\n[a2,a4] = a1 = b1\na3^p = b2\na4^p = b1\na2^p = b1^p = b2^p = 1\n";

}  // namespace

TEST_CASE("coset actions") {
  auto g = fixtures::load("phi3/G_3_3.pres", 5);
  auto reg = coset_action(*g, {trivial_subgroup(*g)});
  CHECK(reg.degree == g->order());
  CHECK(check_relations(*g, reg).empty());
  CHECK(kernel_trivial(*g, reg));

  auto one = coset_action(*g, {whole_group(*g)});
  CHECK(one.degree == 1);
  CHECK(!kernel_trivial(*g, one));

  auto s = coset_action(*g, {sub(*g, {"a3", "a2"})});
  CHECK(s.degree == 625);
  CHECK(check_relations(*g, s).empty());
  CHECK(kernel_trivial(*g, s));

  // Every point moves under some generator, and the images are permutations.
  for (const auto& img : s.images) {
    auto sorted = img;
    std::sort(sorted.begin(), sorted.end());
    for (std::uint32_t i = 0; i < sorted.size(); ++i) REQUIRE(sorted[i] == i);
  }
}

TEST_CASE("faithfulness of part sets") {
  auto g = fixtures::load("phi11/G_11_2.pres", 5);
  std::vector<Subgroup> parts = {sub(*g, {"a5", "a4", "a3", "a1"}), sub(*g, {"a6", "a4", "a1"}),
                                 sub(*g, {"a5", "a3", "a2"})};
  CHECK(is_faithful(*g, parts).faithful);
  CHECK(make_repset(parts).degree == 2 * 25 + 125);
  CHECK(kernel_trivial(*g, coset_action(*g, parts)));

  auto f = is_faithful(*g, {parts[0], parts[1]});
  REQUIRE(!f.faithful);
  REQUIRE(f.witness);
  CHECK(!g->is_identity(*f.witness));
  CHECK(core(parts[0]).contains(*f.witness));
  CHECK(core(parts[1]).contains(*f.witness));

  CHECK(!is_faithful(*g, {center(*g)}).faithful);

  auto h = fixtures::build(kG323Factor, 5);
  CHECK(is_faithful(*h, {sub(*h, {"a4", "a2"}), sub(*h, {"a3", "a2"})}).faithful);

  auto g323 = fixtures::load("phi3/G_3_23.pres", 5);
  std::vector<Subgroup> rep = {sub(*g323, {"a4", "a2", "b3"}), sub(*g323, {"a3", "a2", "b3"}),
                               sub(*g323, {"a1", "a2", "a3", "a4", "b1", "b2"})};
  CHECK(is_faithful(*g323, rep).faithful);
  CHECK(make_repset(rep).degree == 55);
}

TEST_CASE("abelian formula") {
  CHECK(mu_abelian({}) == 1);
  CHECK(mu_abelian({25, 5}) == 30);
  CHECK(mu_abelian({7, 7, 7}) == 21);
  CHECK(mu_direct_product(25, 5) == 30);

  for (int p : {3, 5, 7}) {
    for (const auto& sg : fixtures::small_groups()) {
      auto g = fixtures::build(sg.text, p);
      Subgroup w = whole_group(*g);
      if (!is_abelian(w)) continue;
      auto basis = abelian_basis(w);
      auto inv = abelian_invariants(w);
      REQUIRE(basis.size() == inv.size());
      for (std::size_t i = 0; i < basis.size(); ++i) CHECK(g->order_of(basis[i]) == inv[i]);
      CHECK(closure(*g, basis) == w);
      auto r = minimal_degree(*g);
      CHECK(r.by_formula);
      CHECK(r.mu == mu_abelian(inv));
      CHECK(is_faithful(*g, r.cert.parts).faithful);
    }
  }

  // C_p × C_p^2 × C_p^3 behind a change of basis, so pc generators have order > p.
  const char* mixed = R"(group A prime p
gens x1 x2 x3
omitted commutators trivial
x3^(p^3) = 1
x2^p*x3^p = 1
x1^(p^2)*x2^(2*p^2)*x3^(3*p^3) = 1
)";
  for (int p : {3, 5}) {
    auto g = fixtures::build(mixed, p);
    auto basis = abelian_basis(whole_group(*g));
    REQUIRE(basis.size() == 3);
    CHECK(g->order_of(basis[0]) == static_cast<std::uint64_t>(p * p * p));
    CHECK(minimal_degree(*g).mu == static_cast<std::uint64_t>(p * p * p + p * p + p));
    CHECK(minimal_degree(*g, {}, true).mu == static_cast<std::uint64_t>(p * p * p + p * p + p));
  }
}

TEST_CASE("minimal degrees of named groups at p = 5") {
  auto heis = fixtures::build(fixtures::small_groups()[3].text, 5);
  CHECK(minimal_degree(*heis).mu == 25);

  auto g33 = fixtures::load("phi3/G_3_3.pres", 5);
  auto r33 = minimal_degree(*g33);
  CHECK(r33.mu == 625);
  CHECK(is_faithful(*g33, r33.cert.parts).faithful);

  auto g323 = fixtures::load("phi3/G_3_23.pres", 5);
  auto r323 = minimal_degree(*g323);
  CHECK(r323.mu == 55);
  CHECK(r323.cert.degree == 55);
  CHECK(is_faithful(*g323, r323.cert.parts).faithful);
  CHECK(static_cast<int>(r323.cert.parts.size()) == rank_d(center(*g323)));
}

TEST_CASE("search agrees with exhaustive enumeration") {
  for (int p : {3, 5}) {
    for (const auto& sg : fixtures::small_groups()) {
      auto g = fixtures::build(sg.text, p);
      naive::TableGroup t(*g);
      int d = t.center_rank();
      auto expect = naive::exhaustive_min_degree(t, d);
      auto r = minimal_degree(*g, {}, true);
      INFO(sg.name << " p=" << p);
      CHECK(r.mu == expect);
      CHECK(r.cert.degree == r.mu);
      CHECK(is_faithful(*g, r.cert.parts).faithful);
      CHECK(static_cast<int>(r.cert.parts.size()) == d);
      CHECK(rank_d(center(*g)) == d);
      if (is_abelian(whole_group(*g))) CHECK(minimal_degree(*g).mu == expect);
    }
  }
}

TEST_CASE("budget overrun reports the incumbent") {
  auto g = fixtures::load("phi3/G_3_3.pres", 5);
  SearchBudget tight;
  tight.max_subgroups = 50;
  try {
    minimal_degree(*g, tight);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(e.best_bound() >= 625);
    CHECK(e.best_bound() <= g->order());
  }
}

TEST_CASE("permutation export") {
  auto g = fixtures::build(fixtures::small_groups()[0].text, 3);
  auto rep = coset_action(*g, {trivial_subgroup(*g)});
  auto text = format_perm_rep(rep);
  CHECK(text.rfind("degree 27\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + g->n());
}
