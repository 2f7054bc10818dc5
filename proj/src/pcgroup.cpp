#include "permdeg/pcgroup.hpp"

#include <atomic>

#include "permdeg/errors.hpp"

namespace permdeg {

namespace {

std::atomic<std::uint32_t> next_group_id{1};

bool is_central_trivial(int k, int n, const std::vector<Vec>& power,
                        const std::vector<std::vector<Vec>>& comm) {
  if (power[k] != Vec{}) return false;
  for (int i = 0; i < k; ++i)
    if (comm[k][i] != Vec{}) return false;
  for (int j = k + 1; j < n; ++j)
    if (comm[j][k] != Vec{}) return false;
  return true;
}

}  // namespace

PcGroup::PcGroup(int p, int n, std::vector<Vec> power, std::vector<std::vector<Vec>> comm)
    : p_(p), n_(n), id_(next_group_id++), power_(std::move(power)), comm_(std::move(comm)) {
  if (n_ < 0 || n_ > kMaxPcGens) throw InputError("pc presentation length out of range");
  if (p_ < 3 || p_ > 127 || p_ % 2 == 0) throw InputError("prime out of range");
  power_.resize(n_);
  comm_.resize(n_);
  for (auto& row : comm_) row.resize(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k <= i; ++k)
      if (power_[i][k]) throw InputError("power rule must lie after its generator");
    for (int j = i + 1; j < n_; ++j)
      for (int k = 0; k <= j; ++k)
        if (comm_[j][i][k]) throw InputError("commutator rule must lie after its generators");
  }
  int cf = n_;
  while (cf > 0 && is_central_trivial(cf - 1, n_, power_, comm_)) --cf;
  col_ = Collector<kMaxPcGens>(n_, p_, cf, power_, comm_);
}

std::uint64_t PcGroup::order() const {
  std::uint64_t r = 1;
  for (int i = 0; i < n_; ++i) r *= static_cast<std::uint64_t>(p_);
  return r;
}

void PcGroup::check(const Elem& a) const {
  if (a.gid != id_) throw InputError("element belongs to a different group");
}

Elem PcGroup::gen(int i) const {
  if (i < 0 || i >= n_) throw InputError("generator index out of range");
  Elem r{Vec{}, id_};
  r.e[i] = 1;
  return r;
}

Elem PcGroup::elem(const Vec& v) const {
  for (int i = 0; i < kMaxPcGens; ++i) {
    if (v[i] >= p_ || (i >= n_ && v[i])) throw InputError("exponent vector out of range");
  }
  return Elem{v, id_};
}

Elem PcGroup::mul(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  return Elem{col_.mul(a.e, b.e), id_};
}

Elem PcGroup::inv(const Elem& a) const {
  check(a);
  return Elem{col_.inv(a.e), id_};
}

Elem PcGroup::pow(const Elem& a, std::int64_t k) const {
  check(a);
  return Elem{col_.pow(a.e, k), id_};
}

Elem PcGroup::conj(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  return Elem{col_.mul(col_.inv(b.e), col_.mul(a.e, b.e)), id_};
}

Elem PcGroup::comm(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  return Elem{col_.comm(a.e, b.e), id_};
}

std::uint64_t PcGroup::order_of(const Elem& a) const {
  check(a);
  Vec x = a.e;
  std::uint64_t o = 1;
  while (x != Vec{}) {
    x = col_.pow(x, p_);
    o *= static_cast<std::uint64_t>(p_);
  }
  return o;
}

int PcGroup::depth(const Elem& a) const {
  for (int i = 0; i < n_; ++i)
    if (a.e[i]) return i;
  return n_;
}

std::uint64_t PcGroup::rank(const Elem& a) const {
  std::uint64_t r = 0;
  for (int i = 0; i < n_; ++i) r = r * static_cast<std::uint64_t>(p_) + a.e[i];
  return r;
}

Elem PcGroup::unrank(std::uint64_t r) const {
  Elem x = identity();
  for (int i = n_ - 1; i >= 0; --i) {
    x.e[i] = static_cast<std::uint8_t>(r % static_cast<std::uint64_t>(p_));
    r /= static_cast<std::uint64_t>(p_);
  }
  return x;
}

std::optional<Elem> PcGroup::named(const std::string& s) const {
  for (const auto& [k, v] : names_)
    if (k == s) return v;
  return std::nullopt;
}

Elem PcGroup::normal_form(const std::vector<std::pair<int, std::int64_t>>& word) const {
  Elem r = identity();
  for (const auto& [i, e] : word) {
    if (i < 0 || i >= n_) throw InputError("generator index out of range");
    r = mul(r, pow(gen(i), e));
  }
  return r;
}

std::string PcGroup::format(const Elem& a) const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (!a.e[i]) continue;
    if (!out.empty()) out += '*';
    out += "g" + std::to_string(i + 1);
    if (a.e[i] != 1) out += "^" + std::to_string(a.e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace permdeg
