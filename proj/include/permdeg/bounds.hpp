#pragma once

// Published bounds on c(G), evaluated as predicates against a computed value.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permdeg/quasiperm.hpp"

namespace permdeg {

// Degree -> number of irreducible characters, solved from class counts.
// Requires |G:Z(G)| <= p^5, so that no degree exceeds p^2; throws InputError otherwise.
std::map<std::uint64_t, std::uint64_t> character_degrees(const PcGroup& g);
// The same restricted to characters whose kernel misses Ω1(Z(G)); when Z(G)
// is cyclic these are exactly the faithful irreducibles.
std::map<std::uint64_t, std::uint64_t> faithful_character_degrees(const PcGroup& g);

// G = A × N with A abelian and nontrivial.
bool has_abelian_direct_factor(const PcGroup& g);

struct BoundCheck {
  std::string name;
  bool applicable = false;
  bool satisfied = true;
  std::string detail;
};

// Every bound whose hypothesis holds for g, checked against c. When cert is
// given, structural claims about optimal certificates are checked on it too.
std::vector<BoundCheck> bound_oracles(const PcGroup& g, std::uint64_t c, const QuasiCert* cert = nullptr);

// Allowed c values for non-abelian groups of order p^6 with |Z(G)| = p^z.
std::vector<std::uint64_t> order_p6_values(int p, int z);
// Allowed c values for VZ groups of order p^6 with |Z(G)| = p^z (z = 2 or 4).
std::vector<std::uint64_t> vz_values(int p, int z);

}  // namespace permdeg
