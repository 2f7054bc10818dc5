#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permdeg {

// Malformed presentation, bad parameter, inconsistent relations.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search ran out of its node budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t reached, std::uint64_t best_bound)
      : std::runtime_error(what), reached_(reached), best_bound_(best_bound) {}
  std::uint64_t reached() const { return reached_; }
  std::uint64_t best_bound() const { return best_bound_; }

 private:
  std::uint64_t reached_;
  std::uint64_t best_bound_;
};

}  // namespace permdeg
