#include "permdeg/poly.hpp"

#include <cctype>

#include "permdeg/errors.hpp"

namespace permdeg {

PPoly::PPoly(std::vector<std::uint64_t> coef) : coef_(std::move(coef)) {
  while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

PPoly PPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InputError("empty polynomial");
  std::vector<std::uint64_t> coef;
  std::size_t i = 0;
  auto number = [&](std::uint64_t& out) {
    std::size_t start = i;
    out = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out = out * 10 + (s[i++] - '0');
    return i > start;
  };
  while (true) {
    std::uint64_t c = 1;
    bool has_c = number(c);
    if (!has_c) c = 1;
    std::size_t k = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_c) throw InputError("bad polynomial: " + text);
      ++i;
    }
    if (i < s.size() && s[i] == 'p') {
      ++i;
      k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::uint64_t e = 0;
        if (!number(e)) throw InputError("bad exponent in polynomial: " + text);
        k = e;
      }
    } else if (!has_c) {
      throw InputError("bad polynomial: " + text);
    }
    if (coef.size() <= k) coef.resize(k + 1, 0);
    coef[k] += c;
    if (i == s.size()) break;
    if (s[i] != '+') throw InputError("bad polynomial: " + text);
    ++i;
  }
  return PPoly(std::move(coef));
}

std::uint64_t PPoly::at(std::uint64_t p) const {
  std::uint64_t v = 0;
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) v = v * p + *it;
  return v;
}

std::string PPoly::str() const {
  if (coef_.empty()) return "0";
  std::string out;
  for (std::size_t k = coef_.size(); k-- > 0;) {
    if (coef_[k] == 0) continue;
    if (!out.empty()) out += '+';
    if (coef_[k] != 1 || k == 0) out += std::to_string(coef_[k]);
    if (k >= 1) out += 'p';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

}  // namespace permdeg
