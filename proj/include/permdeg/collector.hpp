#pragma once

// Collection from the left for consistent power-commutator presentations of
// finite p-groups with every relative order equal to p.
//
// Rules: a_i^p = w_i and [a_k, a_i] = c_ki for k > i, where w_i only involves
// generators after i and c_ki only generators after k. Generators from
// central_from on are assumed central with trivial p-th power; they are just
// added coordinatewise.

#include <array>
#include <cstdint>
#include <vector>

namespace permdeg {

template <int N>
using ExpVec = std::array<std::uint8_t, N>;

template <int N>
class Collector {
 public:
  using Vec = ExpVec<N>;

  Collector() = default;

  // power[i] = w_i, comm[k][i] = c_ki (only k > i is read).
  Collector(int n, int p, int central_from, std::vector<Vec> power,
            std::vector<std::vector<Vec>> comm)
      : n_(n), p_(p), cf_(central_from), power_(std::move(power)) {
    if (cf_ > n_) cf_ = n_;
    conj_.assign(static_cast<std::size_t>(cf_) * cf_ * (p_ > 1 ? p_ - 1 : 1) * p_, Vec{});
    // Tables for a_i only need tables for generators after i.
    for (int i = cf_ - 1; i >= 0; --i) {
      std::vector<Vec> cur(cf_);
      for (int k = i + 1; k < cf_; ++k) {
        cur[k] = comm[k][i];
        cur[k][k] = 1;
      }
      for (int e = 1; e < p_; ++e) {
        if (e > 1) {
          for (int k = i + 1; k < cf_; ++k) cur[k] = conj_suffix(cur[k], i, 1);
        }
        for (int k = i + 1; k < cf_; ++k) {
          Vec acc{};
          for (int f = 1; f < p_; ++f) {
            acc = mul(acc, cur[k]);
            at(i, e, k, f) = acc;
          }
        }
      }
    }
  }

  int n() const { return n_; }
  int p() const { return p_; }
  int central_from() const { return cf_; }
  const Vec& power_rule(int i) const { return power_[i]; }

  // x * a_i^e with 0 < e < p.
  Vec mul_gen_pow(const Vec& x, int i, int e) const {
    if (i >= cf_) {
      Vec r = x;
      r[i] = static_cast<std::uint8_t>((r[i] + e) % p_);
      return r;
    }
    Vec tail{};
    bool any = false;
    for (int k = i + 1; k < n_; ++k) {
      if (x[k]) {
        any = true;
        break;
      }
    }
    if (any) {
      tail = conj_suffix_from(x, i, e);
    }
    int ne = x[i] + e;
    if (ne >= p_) {
      tail = mul(power_[i], tail);
      ne -= p_;
    }
    Vec r = tail;
    for (int k = 0; k < i; ++k) r[k] = x[k];
    r[i] = static_cast<std::uint8_t>(ne);
    return r;
  }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec r = x;
    bool x_trivial = true;
    for (int k = 0; k < n_; ++k) {
      if (x[k]) {
        x_trivial = false;
        break;
      }
    }
    if (x_trivial) return y;
    for (int i = 0; i < n_; ++i) {
      if (!y[i]) continue;
      if (i >= cf_) {
        for (int k = i; k < n_; ++k) r[k] = static_cast<std::uint8_t>((r[k] + y[k]) % p_);
        break;
      }
      r = mul_gen_pow(r, i, y[i]);
    }
    return r;
  }

  Vec inv(const Vec& x) const {
    Vec cur = x;
    Vec y{};
    for (int i = 0; i < n_; ++i) {
      if (!cur[i]) continue;
      int f = p_ - cur[i];
      cur = mul_gen_pow(cur, i, f);
      y = mul_gen_pow(y, i, f);
    }
    return y;
  }

  Vec pow(const Vec& x, std::int64_t k) const {
    Vec base = k < 0 ? inv(x) : x;
    std::uint64_t m = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    Vec r{};
    while (m) {
      if (m & 1) r = mul(r, base);
      m >>= 1;
      if (m) base = mul(base, base);
    }
    return r;
  }

  Vec comm(const Vec& a, const Vec& b) const { return mul(inv(mul(b, a)), mul(a, b)); }

 private:
  Vec& at(int i, int e, int k, int f) {
    return conj_[((static_cast<std::size_t>(i) * cf_ + k) * (p_ - 1) + (e - 1)) * p_ + f];
  }
  const Vec& at(int i, int e, int k, int f) const {
    return conj_[((static_cast<std::size_t>(i) * cf_ + k) * (p_ - 1) + (e - 1)) * p_ + f];
  }

  // (a_i^e)^-1 * z * a_i^e for z supported after i.
  Vec conj_suffix(const Vec& z, int i, int e) const { return conj_suffix_from(z, i, e); }

  // Same, reading only the coordinates of x after i.
  Vec conj_suffix_from(const Vec& x, int i, int e) const {
    Vec acc{};
    bool first = true;
    for (int k = i + 1; k < cf_; ++k) {
      if (!x[k]) continue;
      const Vec& t = at(i, e, k, x[k]);
      if (first) {
        acc = t;
        first = false;
      } else {
        acc = mul(acc, t);
      }
    }
    for (int k = cf_ > i + 1 ? cf_ : i + 1; k < n_; ++k) {
      if (x[k]) acc[k] = static_cast<std::uint8_t>((acc[k] + x[k]) % p_);
    }
    return acc;
  }

  int n_ = 0;
  int p_ = 2;
  int cf_ = 0;
  std::vector<Vec> power_;
  std::vector<Vec> conj_;
};

}  // namespace permdeg
