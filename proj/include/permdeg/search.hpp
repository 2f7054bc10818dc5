#pragma once

// Minimum-cost faithful selections of subgroups. A selection of subgroups
// K_1..K_m is faithful when the traces K_i ∩ Ω(Z(G)) meet trivially; the cost
// of K is |G:K|. Both minimal degree searches reduce to this.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "permdeg/structure.hpp"

namespace permdeg {

struct SearchBudget {
  std::uint64_t max_nodes = 20'000'000;     // cover search nodes
  std::uint64_t max_subgroups = 3'000'000;  // subgroups visited, conjugates included
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t subgroups = 0;
  std::uint64_t candidates = 0;
};

struct SelectedPart {
  Subgroup k;
  Subgroup companion;  // returned by the acceptance test
};

struct Selection {
  std::uint64_t cost = 0;
  std::vector<SelectedPart> parts;
};

// Returns a companion subgroup when K may be used as a part.
using AcceptFn = std::function<std::optional<Subgroup>(const Subgroup& k)>;

// Exact minimum over all subgroups of g, walking conjugacy classes from the
// top and stopping once indices reach the incumbent. Throws ResourceError when
// either budget runs out; best_bound() then holds the incumbent (|G| if none).
Selection min_faithful_selection(const PcGroup& g, const AcceptFn& accept, const SearchBudget& budget,
                                 SearchStats* stats = nullptr);

// Cover step on its own: choose entries whose traces meet trivially inside
// socle, minimizing total cost. Entries with cost >= upper are ignored.
struct CoverItem {
  std::uint64_t cost;
  Subgroup trace;
};
std::optional<std::pair<std::uint64_t, std::vector<std::size_t>>> min_cover(const Subgroup& socle,
                                                                           const std::vector<CoverItem>& items,
                                                                           std::uint64_t upper,
                                                                           std::uint64_t max_nodes,
                                                                           std::uint64_t* nodes);

}  // namespace permdeg
