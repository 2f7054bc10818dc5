#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "permdeg/errors.hpp"
#include "permdeg/pcgroup.hpp"

namespace permdeg {

// Subgroup in canonical form: basis elements with strictly increasing depth,
// leading exponent 1 and zero exponent at every other pivot.
class Subgroup {
 public:
  Subgroup() = default;
  // Takes elements with distinct depths that form an induced pcgs.
  static Subgroup from_pcgs(const PcGroup& g, std::vector<Elem> pcgs);

  const PcGroup& group() const { return *g_; }
  const std::vector<Elem>& basis() const { return basis_; }
  int size() const { return static_cast<int>(basis_.size()); }
  std::uint64_t order() const;
  std::uint64_t index() const { return g_->order() / order(); }
  bool has_pivot(int d) const { return piv_[d] >= 0; }
  const Elem& at_depth(int d) const { return basis_[piv_[d]]; }
  std::vector<int> depths() const;

  bool contains(const Elem& x) const;
  bool is_trivial() const { return basis_.empty(); }
  // Unique element of the right coset (this) x with zero exponents at the pivots.
  Elem coset_rep(Elem x) const;
  // Bytes of the canonical basis; equal iff the subgroups are equal.
  std::string key() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.basis_ == b.basis_; }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.basis_.size() != b.basis_.size()) return a.basis_.size() > b.basis_.size();
    return a.basis_ < b.basis_;
  }

 private:
  const PcGroup* g_ = nullptr;
  std::vector<Elem> basis_;
  std::array<std::int8_t, kMaxPcGens> piv_{-1, -1, -1, -1, -1, -1, -1, -1};
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const { return std::hash<std::string>()(s.key()); }
};

Subgroup trivial_subgroup(const PcGroup& g);
Subgroup whole_group(const PcGroup& g);
Subgroup closure(const PcGroup& g, const std::vector<Elem>& gens);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const std::vector<Elem>& extra);
// Smallest subgroup containing s and normalized by every element of `by`.
Subgroup normal_closure(const std::vector<Elem>& s, const Subgroup& by);
Subgroup conjugate(const Subgroup& h, const Elem& x);
bool is_subgroup(const Subgroup& a, const Subgroup& b);
bool is_normal(const Subgroup& n, const Subgroup& in);

// [A, B].
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup derived(const Subgroup& h);
Subgroup frattini(const Subgroup& h);
std::vector<Subgroup> lower_central_series(const PcGroup& g);
int nilpotency_class(const PcGroup& g);

// Exponents of x modulo n in the factor pcgs of h/n (n normal in h).
std::vector<int> factor_coords(const Subgroup& h, const Subgroup& n, Elem x);

// Largest subgroup of a on which every map lands in n. Each map, restricted
// to the part of a sent into G_k n, must induce a homomorphism to
// G_k n / G_{k+1} n; homomorphisms and commutator maps [s, .] qualify.
Subgroup layered_kernel(const Subgroup& a, const Subgroup& n,
                        const std::vector<std::function<Elem(const Elem&)>>& maps);

// {c in in : [s, c] in modulo for all s}; modulo must be normalized by in and s.
Subgroup centralizer(const Subgroup& in, const std::vector<Elem>& s, const Subgroup& modulo);
Subgroup center(const PcGroup& g);
Subgroup center(const Subgroup& h);
// Elements of order dividing p in an abelian subgroup.
Subgroup omega1(const Subgroup& abelian);
Subgroup socle_of_center(const PcGroup& g);
// h intersected with a normal subgroup of G.
Subgroup intersect_normal(const Subgroup& h, const Subgroup& n);

// Orbit-stabilizer computations keep at most this many orbit points.
inline constexpr std::size_t kDefaultOrbitBudget = 2'000'000;

Subgroup intersection(const Subgroup& a, const Subgroup& b, std::size_t budget = kDefaultOrbitBudget);
Subgroup normalizer(const Subgroup& in, const Subgroup& h, std::size_t budget = kDefaultOrbitBudget);
Subgroup core(const Subgroup& h, std::size_t budget = kDefaultOrbitBudget);

// Invariant factors of h/modulo as p-powers, descending; the quotient must be abelian.
std::vector<std::uint64_t> abelian_invariants(const Subgroup& h, const Subgroup& modulo);
std::vector<std::uint64_t> abelian_invariants(const Subgroup& h);
bool is_abelian(const Subgroup& h);
bool is_cyclic_quotient(const Subgroup& h, const Subgroup& modulo);
int rank_d(const Subgroup& h);
std::uint64_t exponent(const PcGroup& g);
std::uint64_t exponent(const Subgroup& h);

std::vector<Subgroup> maximal_subgroups(const Subgroup& h);
// Maximal subgroups of h that contain `containing` (normal in h).
std::vector<Subgroup> maximal_subgroups(const Subgroup& h, const Subgroup& containing);

// Orbit of start under the subgroup `acting`, with the stabilizer. Act must
// be a right action: act(act(w, x), y) == act(w, x*y).
template <class Point, class Hash, class Act>
std::pair<std::vector<Point>, Subgroup> orbit_stabilizer(const Subgroup& acting, const Point& start, Act act,
                                                         std::size_t budget) {
  const PcGroup& g = acting.group();
  std::vector<Point> orbit{start};
  std::vector<Elem> trans{g.identity()};
  std::unordered_map<Point, std::size_t, Hash> where{{start, 0}};
  std::vector<Elem> stab;
  const auto& b = acting.basis();
  for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i) {
    Point y = act(start, b[i]);
    auto it = where.find(y);
    if (it != where.end()) {
      stab.push_back(g.mul(b[i], g.inv(trans[it->second])));
      continue;
    }
    std::size_t old = orbit.size();
    if (old * static_cast<std::size_t>(g.p()) > budget) {
      throw ResourceError("orbit budget exceeded", old * g.p(), 0);
    }
    for (int k = 1; k < g.p(); ++k) {
      for (std::size_t j = 0; j < old; ++j) {
        std::size_t src = (k - 1) * old + j;
        Point q = act(orbit[src], b[i]);
        where.emplace(q, orbit.size());
        orbit.push_back(std::move(q));
        trans.push_back(g.mul(trans[src], b[i]));
      }
    }
  }
  return {std::move(orbit), closure(g, stab)};
}

// Conjugacy classes of subgroups, explored level by level from the top.
// expand(rep) decides whether the maximal subgroups of a class are visited.
struct ClassLevel {
  std::vector<Subgroup> reps;
  std::vector<std::uint64_t> class_sizes;
};

class SubgroupClassWalker {
 public:
  SubgroupClassWalker(const PcGroup& g, std::uint64_t budget);
  // Next level from the expanded classes of the current one.
  ClassLevel next(const ClassLevel& cur, const std::function<bool(const Subgroup&)>& expand);
  ClassLevel top() const;
  std::uint64_t seen() const { return seen_count_; }

 private:
  const PcGroup& g_;
  std::uint64_t budget_;
  std::uint64_t seen_count_ = 0;
  std::unordered_map<std::string, std::size_t> seen_;
};

std::vector<Subgroup> subgroups_up_to_conjugacy(const PcGroup& g, std::uint64_t min_order,
                                                std::uint64_t budget = 5'000'000);

// Conjugacy classes of elements of n/k (k normal in n), as coset representatives.
std::vector<Elem> class_representatives(const Subgroup& n, const Subgroup& k,
                                        std::size_t budget = kDefaultOrbitBudget);
std::uint64_t class_count(const Subgroup& n, const Subgroup& k, std::size_t budget = kDefaultOrbitBudget);

}  // namespace permdeg
