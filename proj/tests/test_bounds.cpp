#include "doctest.h"
#include "fixtures.hpp"
#include "naive_table.hpp"
#include "permdeg/bounds.hpp"
#include "permdeg/poly.hpp"

using namespace permdeg;

namespace {

// Nontrivial central cyclic C and normal N with C ∩ N = 1 and |C||N| = |G|.
bool naive_abelian_factor(const naive::TableGroup& t) {
  auto subs = t.subgroups();
  std::vector<naive::Bits> normal;
  for (const auto& s : subs) {
    bool ok = true;
    auto mem = t.members(s);
    for (std::uint32_t y = 0; y < t.order && ok; ++y)
      for (auto x : mem)
        if (!naive::TableGroup::has(s, t.conj(x, y))) {
          ok = false;
          break;
        }
    if (ok) normal.push_back(s);
  }
  auto z = t.center();
  for (std::uint32_t c = 1; c < t.order; ++c) {
    if (!naive::TableGroup::has(z, c)) continue;
    auto cs = t.generate({c});
    std::uint64_t oc = naive::TableGroup::count(cs);
    for (const auto& n : normal) {
      if (oc * naive::TableGroup::count(n) != t.order) continue;
      bool meet = false;
      for (auto x : t.members(cs)) meet = meet || (x != 0 && naive::TableGroup::has(n, x));
      if (!meet) return true;
    }
  }
  return false;
}

std::uint64_t table_derived_index(const naive::TableGroup& t) {
  std::vector<std::uint32_t> comms;
  for (std::uint32_t a = 0; a < t.order; ++a)
    for (std::uint32_t b = 0; b < t.order; ++b) comms.push_back(t.m(t.m(t.inv[a], t.inv[b]), t.m(a, b)));
  return t.order / naive::TableGroup::count(t.generate(comms));
}

const BoundCheck& find(const std::vector<BoundCheck>& v, const std::string& name) {
  for (const auto& b : v)
    if (b.name == name) return b;
  throw std::runtime_error("no oracle " + name);
}

}  // namespace

TEST_CASE("polynomials in p") {
  auto a = PPoly::parse("2p^2+p");
  CHECK(a.at(5) == 55);
  CHECK(a.at(7) == 105);
  CHECK(a.str() == "2p^2+p");
  CHECK(PPoly::parse("p^3 + 2p^2").at(5) == 175);
  CHECK(PPoly::parse("p + p").str() == "2p");
  CHECK(PPoly::parse("3").at(11) == 3);
  CHECK(PPoly::parse("2*p^4+1").at(3) == 163);
  CHECK(PPoly::parse(PPoly::parse("p^4+p^3+7").str()) == PPoly::parse("p^4+p^3+7"));
  CHECK_THROWS_AS(PPoly::parse(""), InputError);
  CHECK_THROWS_AS(PPoly::parse("p^"), InputError);
  CHECK_THROWS_AS(PPoly::parse("2q"), InputError);
  CHECK_THROWS_AS(PPoly::parse("p-1"), InputError);
}

TEST_CASE("character degrees from class counts") {
  for (int p : {3, 5}) {
    for (const auto& sg : fixtures::small_groups()) {
      auto g = fixtures::build(sg.text, p);
      naive::TableGroup t(*g);
      INFO(sg.name << " p=" << p);
      auto cd = character_degrees(*g);
      std::uint64_t k = 0, sq = 0;
      for (auto [d, n] : cd) {
        k += n;
        sq += d * d * n;
      }
      CHECK(k == t.classes().size());
      CHECK(sq == g->order());
      CHECK(cd[1] == table_derived_index(t));
    }
    std::uint64_t up = static_cast<std::uint64_t>(p);
    auto heis = fixtures::build(fixtures::small_groups()[3].text, p);
    CHECK(character_degrees(*heis) == std::map<std::uint64_t, std::uint64_t>{{1, up * up}, {up, up - 1}});
    CHECK(faithful_character_degrees(*heis) == std::map<std::uint64_t, std::uint64_t>{{up, up - 1}});
    auto hc = fixtures::build(fixtures::small_groups()[8].text, p);
    CHECK(character_degrees(*hc) == std::map<std::uint64_t, std::uint64_t>{{1, up * up * up}, {up, up * (up - 1)}});
  }
}

TEST_CASE("abelian direct factors") {
  for (int p : {3, 5}) {
    for (const auto& sg : fixtures::small_groups()) {
      auto g = fixtures::build(sg.text, p);
      naive::TableGroup t(*g);
      INFO(sg.name << " p=" << p);
      CHECK(has_abelian_direct_factor(*g) == naive_abelian_factor(t));
    }
  }
  CHECK(has_abelian_direct_factor(*fixtures::load("phi3/G_3_23.pres", 5)));
  CHECK(!has_abelian_direct_factor(*fixtures::load("phi3/G_3_3.pres", 5)));
  CHECK(!has_abelian_direct_factor(*fixtures::load("phi4/G_4_28.pres", 5)));
}

TEST_CASE("value sets") {
  CHECK(order_p6_values(5, 4).size() == 13);
  CHECK(order_p6_values(5, 3).size() == 17);
  CHECK(order_p6_values(5, 2).size() == 7);
  CHECK(order_p6_values(5, 1) == std::vector<std::uint64_t>{25, 125, 625});
  CHECK(vz_values(7, 2) == std::vector<std::uint64_t>{350, 392, 686, 2401});
  CHECK(order_p6_values(5, 5).empty());
}

TEST_CASE("oracles on small groups") {
  auto heis = fixtures::build(fixtures::small_groups()[3].text, 5);
  auto r = bound_oracles(*heis, 25);
  const auto& cyc = find(r, "cyclic-centre-bounds");
  CHECK(cyc.applicable);
  CHECK(cyc.satisfied);
  CHECK(cyc.detail == "25 <= c=25 <= 25");
  CHECK(find(r, "no-abelian-factor-p2-divisibility").applicable);
  CHECK(!find(r, "order-p6-value-set").applicable);
  CHECK(!find(bound_oracles(*heis, 30), "cyclic-centre-bounds").satisfied);

  auto ab = fixtures::build(fixtures::small_groups()[1].text, 5);
  CHECK(bound_oracles(*ab, 30).empty());

  auto hc = fixtures::build(fixtures::small_groups()[8].text, 5);
  CHECK(!find(bound_oracles(*hc, 30), "no-abelian-factor-p2-divisibility").applicable);
}

TEST_CASE("oracles hold on computed order p^6 values") {
  struct Known {
    const char* file;
    std::map<std::string, std::string> params;
    std::uint64_t c5;
  };
  // Exact values at p = 5 from the search; see test_quasiperm for the search itself.
  std::vector<Known> known = {
      {"phi3/G_3_3.pres", {}, 625},           {"phi3/G_3_23.pres", {}, 55},
      {"phi4/G_4_28.pres", {}, 175},          {"phi11/G_11_2.pres", {}, 175},
      {"phi12/G_12_14.pres", {}, 150},        {"phi17/G_17_26r.pres", {{"r", "1"}}, 250},
      {"phi18/G_18_12r.pres", {{"r", "1"}}, 250}, {"phi3/G_3_10r.pres", {{"r", "1"}}, 650},
      {"phi3/G_3_24r.pres", {{"r", "1"}}, 155},   {"phi4/G_4_9r.pres", {{"r", "1"}}, 750},
      {"phi4/G_4_32.pres", {}, 275},          {"phi7/G_7_14.pres", {}, 150},
      {"phi8/G_8_7.pres", {}, 250},
  };
  for (const auto& k : known) {
    auto g = fixtures::load(k.file, 5, k.params);
    INFO(k.file);
    auto r = bound_oracles(*g, k.c5);
    int applicable = 0;
    for (const auto& b : r) {
      INFO(b.name << ": " << b.detail);
      CHECK(b.satisfied);
      applicable += b.applicable;
    }
    CHECK(find(r, "order-p6-value-set").applicable);
    CHECK(applicable >= 2);
    // c + 1 is never in the value set.
    bool some_fail = false;
    for (const auto& b : bound_oracles(*g, k.c5 + 1)) some_fail = some_fail || !b.satisfied;
    CHECK(some_fail);
  }
}
