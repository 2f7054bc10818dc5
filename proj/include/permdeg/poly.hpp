#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace permdeg {

// Polynomial in p with non-negative integer coefficients, written like
// "2p^2+p", "p^4+p^3" or "3".
class PPoly {
 public:
  PPoly() = default;
  explicit PPoly(std::vector<std::uint64_t> coef);
  // Throws InputError on malformed text.
  static PPoly parse(const std::string& text);

  std::uint64_t at(std::uint64_t p) const;
  const std::vector<std::uint64_t>& coef() const { return coef_; }
  std::string str() const;

  friend bool operator==(const PPoly&, const PPoly&) = default;

 private:
  std::vector<std::uint64_t> coef_;  // coef_[k] multiplies p^k
};

}  // namespace permdeg
