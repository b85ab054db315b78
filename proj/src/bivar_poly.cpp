#include "tgrw/bivar_poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace tgrw {

BivarPoly BivarPoly::constant(std::int64_t c) { return monomial(0, 0, c); }

BivarPoly BivarPoly::monomial(int i, int j, std::int64_t c) {
  BivarPoly p;
  p.add_term({i, j}, c);
  return p;
}

std::int64_t BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

void BivarPoly::add_term(const Exponent& e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

BivarPoly BivarPoly::pow(unsigned n) const {
  BivarPoly result = constant(1);
  BivarPoly base = *this;
  while (n) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return result;
}

std::int64_t BivarPoly::evaluate(std::int64_t x, std::int64_t y) const {
  std::int64_t total = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t term = c;
    for (int k = 0; k < e.first; ++k) term *= x;
    for (int k = 0; k < e.second; ++k) term *= y;
    total += term;
  }
  return total;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, std::int64_t>> order(terms_.begin(), terms_.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : order) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    if (mag != 1 || (e.first == 0 && e.second == 0)) factors.push_back(std::to_string(mag));
    auto var = [&](const char* name, int d) {
      if (d == 1) factors.emplace_back(name);
      else if (d > 1) factors.push_back(std::string(name) + "^" + std::to_string(d));
    };
    var("x", e.first);
    var("y", e.second);
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace tgrw
