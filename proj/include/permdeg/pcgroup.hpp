#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permdeg/collector.hpp"

namespace permdeg {

inline constexpr int kMaxPcGens = 8;
using Vec = ExpVec<kMaxPcGens>;

// Normal word a_1^{e_1} ... a_n^{e_n}; gid tags the owning group and takes no
// part in comparisons.
struct Elem {
  Vec e{};
  std::uint32_t gid = 0;

  friend bool operator==(const Elem& a, const Elem& b) { return a.e == b.e; }
  friend auto operator<=>(const Elem& a, const Elem& b) { return a.e <=> b.e; }
};

struct ElemHash {
  std::size_t operator()(const Elem& x) const {
    std::uint64_t h = 0;
    for (auto c : x.e) h = h * 131 + c;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Finite p-group given by a consistent pc presentation with relative orders p.
class PcGroup {
 public:
  PcGroup(int p, int n, std::vector<Vec> power, std::vector<std::vector<Vec>> comm);

  int p() const { return p_; }
  int n() const { return n_; }
  std::uint64_t order() const;
  std::uint32_t id() const { return id_; }

  Elem identity() const { return Elem{Vec{}, id_}; }
  Elem gen(int i) const;
  Elem elem(const Vec& v) const;

  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, std::int64_t k) const;
  // b^-1 a b
  Elem conj(const Elem& a, const Elem& b) const;
  // a^-1 b^-1 a b
  Elem comm(const Elem& a, const Elem& b) const;
  std::uint64_t order_of(const Elem& a) const;
  // Collected form of g_{i1}^{e1} g_{i2}^{e2} ...; indices are 0-based and
  // negative exponents give inverses.
  Elem normal_form(const std::vector<std::pair<int, std::int64_t>>& word) const;
  bool is_identity(const Elem& a) const { return a.e == Vec{}; }

  // Leading index, or n when trivial.
  int depth(const Elem& a) const;

  // Mixed radix rank in [0, |G|) and back.
  std::uint64_t rank(const Elem& a) const;
  Elem unrank(std::uint64_t r) const;

  const Vec& power_rule(int i) const { return power_[i]; }
  const Vec& comm_rule(int k, int i) const { return comm_[k][i]; }

  // Images of the generators of the source presentation.
  void set_names(std::vector<std::pair<std::string, Elem>> names) { names_ = std::move(names); }
  const std::vector<std::pair<std::string, Elem>>& names() const { return names_; }
  std::optional<Elem> named(const std::string& s) const;

  std::string name;

  std::string format(const Elem& a) const;

 private:
  void check(const Elem& a) const;

  int p_;
  int n_;
  std::uint32_t id_;
  std::vector<Vec> power_;
  std::vector<std::vector<Vec>> comm_;
  Collector<kMaxPcGens> col_;
  std::vector<std::pair<std::string, Elem>> names_;
};

}  // namespace permdeg
