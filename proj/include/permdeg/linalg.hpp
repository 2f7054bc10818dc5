#pragma once

#include <cstdint>
#include <vector>

namespace permdeg {

// Dense GF(p) row reduction. Entries are kept in [0, p).
class GfMatrix {
 public:
  GfMatrix(int p, int cols) : p_(p), cols_(cols) {}

  int p() const { return p_; }
  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  static int inverse(int a, int p) {
    int r = 1;
    int e = p - 2;
    long long b = a % p;
    while (e) {
      if (e & 1) r = static_cast<int>(r * b % p);
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }

  // Reduces v against the current rows; returns true when v was independent.
  // Rows stay in reduced echelon form sorted by pivot.
  bool add(std::vector<int> v) {
    reduce(v);
    int piv = -1;
    for (int c = 0; c < cols_; ++c) {
      if (v[c]) {
        piv = c;
        break;
      }
    }
    if (piv < 0) return false;
    int s = inverse(v[piv], p_);
    for (auto& x : v) x = x * s % p_;
    for (auto& row : rows_) {
      int f = row[piv];
      if (!f) continue;
      for (int c = 0; c < cols_; ++c) row[c] = ((row[c] - f * v[c]) % p_ + p_) % p_;
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
    return true;
  }

  void reduce(std::vector<int>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      int f = v[pivots_[r]];
      if (!f) continue;
      const auto& row = rows_[r];
      for (int c = 0; c < cols_; ++c) v[c] = ((v[c] - f * row[c]) % p_ + p_) % p_;
    }
  }

  bool contains(std::vector<int> v) const {
    reduce(v);
    for (int x : v)
      if (x) return false;
    return true;
  }

  // Basis of the solution space of rows * x = 0.
  std::vector<std::vector<int>> kernel() const {
    std::vector<char> is_piv(cols_, 0);
    for (int c : pivots_) is_piv[c] = 1;
    std::vector<std::vector<int>> out;
    for (int f = 0; f < cols_; ++f) {
      if (is_piv[f]) continue;
      std::vector<int> x(cols_, 0);
      x[f] = 1;
      for (std::size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = (p_ - rows_[r][f]) % p_;
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  int p_;
  int cols_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> pivots_;
};

}  // namespace permdeg
