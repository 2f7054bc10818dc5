#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permdeg/search.hpp"
#include "permdeg/structure.hpp"

namespace permdeg {

// Point stabilizers of the transitive constituents.
struct RepSet {
  std::vector<Subgroup> parts;
  std::uint64_t degree = 0;
};

RepSet make_repset(std::vector<Subgroup> parts);

struct PermRep {
  std::uint64_t degree = 0;
  // images[i][x] is the image of point x under pc generator i.
  std::vector<std::vector<std::uint32_t>> images;
};

// Action on the disjoint union of the right coset spaces. Throws
// ResourceError above max_degree points and std::logic_error if the
// generator images fail a pc relation.
PermRep coset_action(const PcGroup& g, const std::vector<Subgroup>& parts,
                     std::uint64_t max_degree = 4'000'000);

// Permutation of an arbitrary element under rep.
std::vector<std::uint32_t> permutation_of(const PcGroup& g, const PermRep& rep, const Elem& x);

// Empty when every power and commutator rule holds in rep.
std::vector<std::string> check_relations(const PcGroup& g, const PermRep& rep);

// Checks that no nontrivial element of Ω(Z(G)) acts trivially.
bool kernel_trivial(const PcGroup& g, const PermRep& rep);

struct Faithfulness {
  bool faithful = false;
  std::optional<Elem> witness;  // nontrivial element in every core
};

Faithfulness is_faithful(const PcGroup& g, const std::vector<Subgroup>& parts);

// Sum of the invariant factors; 1 for the trivial group.
std::uint64_t mu_abelian(const std::vector<std::uint64_t>& invariants);
std::uint64_t mu_direct_product(std::uint64_t mu_h, std::uint64_t mu_k);

// Independent generators of an abelian subgroup, with orders descending.
std::vector<Elem> abelian_basis(const Subgroup& a);

struct MuResult {
  std::uint64_t mu = 0;
  RepSet cert;
  SearchStats stats;
  bool by_formula = false;
};

// Exact minimum; abelian groups use the invariant factor formula unless
// force_search is set.
MuResult minimal_degree(const PcGroup& g, const SearchBudget& budget = {}, bool force_search = false);

// "degree n" followed by one line of 0-based images per pc generator.
std::string format_perm_rep(const PermRep& rep);

}  // namespace permdeg
