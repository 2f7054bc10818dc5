#pragma once

// Minimal faithful quasi-permutation degree c(G) through monomial characters.
// A Galois class of irreducible characters λ↑G is named by (H, K): λ is a
// faithful linear character of the cyclic group H/K.

#include <cstdint>
#include <string>
#include <vector>

#include "permdeg/mu.hpp"
#include "permdeg/search.hpp"
#include "permdeg/structure.hpp"

namespace permdeg {

struct CharClass {
  Subgroup H;
  Subgroup K;
  Elem gen;  // generates H/K; λ(gen) is a primitive conductor-th root of unity
  std::uint64_t conductor = 1;
  std::uint64_t induced_degree = 1;

  // |G:H| φ(p^a)
  std::uint64_t d_value() const;
  // |G:K|
  std::uint64_t cost() const { return induced_degree * conductor; }
};

// Throws InputError unless K ≤ H, H' ≤ K and H/K is cyclic.
CharClass make_char_class(const Subgroup& h, const Subgroup& k);

// Every K ≤ h with h/K cyclic, h itself first.
std::vector<Subgroup> cyclic_quotient_kernels(const Subgroup& h);

// Stabilizer of the class in N_G(H).
Subgroup inertia_group(const PcGroup& g, const CharClass& cc);
// Mackey: no x outside H makes λ and λ^x agree on H ∩ H^x.
bool induced_irreducible(const PcGroup& g, const CharClass& cc);
// Core_G(K).
Subgroup induced_kernel(const PcGroup& g, const CharClass& cc);

struct QuasiCert {
  std::vector<CharClass> classes;
  std::uint64_t c_value = 0;
};

struct CResult {
  std::uint64_t c = 0;
  QuasiCert cert;
  SearchStats stats;
  bool by_formula = false;
};

// Exact c(G); abelian groups use the invariant factor formula unless
// force_search is set. Throws ResourceError with the incumbent on overrun.
CResult minimal_c(const PcGroup& g, const SearchBudget& budget = {}, bool force_search = false);

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Exact ⟨χ, χ⟩ for χ = λ↑G by summing over all elements. Needs |G| ≤ max_order.
Fraction verify_norm(const PcGroup& g, const CharClass& cc, std::uint64_t max_order = 100'000);

// Brute-force m(ξ) = |min_x ξ(x)| for ξ the sum of the Galois classes.
std::int64_t brute_force_m(const PcGroup& g, const std::vector<CharClass>& classes,
                           std::uint64_t max_order = 100'000);

// Size of the Galois orbit of λ↑G, computed from its values. Small groups only.
std::uint64_t galois_orbit_size(const PcGroup& g, const CharClass& cc, std::uint64_t max_order = 100'000);

struct CrossCheck {
  CResult c;
  MuResult mu;
  bool equal = false;
};

CrossCheck cross_check_c_mu(const PcGroup& g, const SearchBudget& budget = {});

std::string format_char_class(const PcGroup& g, const CharClass& cc);

}  // namespace permdeg
