#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "permdeg/pcpres.hpp"

namespace fixtures {

inline std::string catalog_path(const std::string& rel) { return std::string(PERMDEG_CATALOG_DIR) + "/" + rel; }

inline std::shared_ptr<permdeg::PcGroup> load(const std::string& rel, int p,
                                              const std::map<std::string, std::string>& params = {}) {
  auto pres = permdeg::load_presentation(catalog_path(rel));
  return permdeg::refine(pres, permdeg::bind(pres, p, params));
}

inline std::shared_ptr<permdeg::PcGroup> build(const std::string& text, int p,
                                               const std::map<std::string, std::string>& params = {}) {
  auto pres = permdeg::parse_presentation(text);
  return permdeg::refine(pres, permdeg::bind(pres, p, params));
}

struct CatalogCase {
  std::string file;
  std::map<std::string, std::string> params;
  bool any_prime = true;  // false: defined at p = 5 only
};

inline const std::vector<CatalogCase>& catalog_cases() {
  static const std::vector<CatalogCase> cases = {
      {"phi3/G_3_3.pres", {}},         {"phi3/G_3_23.pres", {}},
      {"phi3/G_3_10r.pres", {{"r", "1"}}}, {"phi3/G_3_10r.pres", {{"r", "nu"}}},
      {"phi3/G_3_24r.pres", {{"r", "1"}}}, {"phi3/G_3_24r.pres", {{"r", "nu"}}},
      {"phi4/G_4_9r.pres", {{"r", "1"}}},  {"phi4/G_4_9r.pres", {{"r", "nu"}}},
      {"phi4/G_4_28.pres", {}},        {"phi4/G_4_32.pres", {}},
      {"phi7/G_7_14.pres", {}},        {"phi8/G_8_7.pres", {}},
      {"phi11/G_11_2.pres", {}},       {"phi12/G_12_14.pres", {}},
      {"phi17/G_17_26r.pres", {{"r", "1"}}}, {"phi17/G_17_26r.pres", {{"r", "nu"}}},
      {"phi18/G_18_12r.pres", {{"r", "1"}}},
      {"phi38/Phi38_1r.pres", {{"r", "0"}}, false}, {"phi38/Phi38_1r.pres", {{"r", "3"}}, false},
      {"phi38/Phi38_2r.pres", {{"r", "2"}}, false}, {"phi38/Phi38_3.pres", {}, false},
  };
  return cases;
}

// One group per family, for brute-force checks that scan every element.
inline std::vector<CatalogCase> sample_cases() {
  std::vector<CatalogCase> out;
  for (const auto& c : catalog_cases()) {
    bool dup = false;
    for (const auto& o : out) dup = dup || o.file == c.file;
    if (!dup && (c.file.find("phi3/") == std::string::npos || c.file == "phi3/G_3_3.pres")) out.push_back(c);
  }
  return out;
}

struct SmallGroup {
  std::string name;
  std::string text;
  int log_order;
};

// Every group of order p^3 and a fixed set of order p^4, as pc presentations.
inline const std::vector<SmallGroup>& small_groups() {
  static const std::vector<SmallGroup> groups = {
      {"C_p3", "group C_p3 prime p\ngens x\norder p^3\nx^(p^3) = 1\n", 3},
      {"C_p2xC_p", "group C_p2xC_p prime p\ngens x y\norder p^3\nx^(p^2) = y^p = [x,y] = 1\n", 3},
      {"C_p^3", "group E3 prime p\ngens x y z\norder p^3\nomitted commutators trivial\nx^p = y^p = z^p = 1\n", 3},
      {"Heis", "group Heis prime p\ngens x y\norder p^3\nx^p = y^p = [x,y]^p = [x,y,x] = [x,y,y] = 1\n", 3},
      {"M_p3", "group M3 prime p\ngens x y\norder p^3\nx^(p^2) = y^p = 1\n[x,y] = x^p\n", 3},
      {"C_p2xC_p2", "group C9C9 prime p\ngens x y\norder p^4\nx^(p^2) = y^(p^2) = [x,y] = 1\n", 4},
      {"Max4",
       "group Max4 prime p\ngens x y\norder p^4\nx^p = y^p = [x,y,y] = [x,y,x,x] = [x,y,x,y] = [x,y,x]^p = 1\n", 4},
      {"Heis4", "group Heis4 prime p\ngens x y z\norder p^4\nomitted commutators trivial\nx^p = y^p = z^(p^2) = 1\n[x,y] = z^p\n",
       4},
      {"HeisxC_p",
       "group HeisxC_p prime p\ngens x y w\norder p^4\nx^p = y^p = w^p = [x,y]^p = [x,y,x] = [x,y,y] = 1\n"
       "[x,w] = [y,w] = 1\n",
       4},
      {"M_p4", "group M4 prime p\ngens x y\norder p^4\nx^(p^3) = y^p = 1\n[x,y] = x^(p^2)\n", 4},
      {"C_p2:C_p2", "group SD prime p\ngens x y\norder p^4\nx^(p^2) = y^(p^2) = 1\n[x,y] = x^p\n", 4},
      {"C_p3xC_p", "group C_p3xC_p prime p\ngens x y\norder p^4\nx^(p^3) = y^p = [x,y] = 1\n", 4},
  };
  return groups;
}

}  // namespace fixtures
