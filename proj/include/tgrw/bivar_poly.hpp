#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace tgrw {

/// Exact polynomial in Z[x, y]; zero coefficients are never stored.
class BivarPoly {
 public:
  using Exponent = std::pair<int, int>;  // (deg x, deg y)

  BivarPoly() = default;
  static BivarPoly constant(std::int64_t c);
  static BivarPoly monomial(int i, int j, std::int64_t c = 1);
  static BivarPoly x() { return monomial(1, 0); }
  static BivarPoly y() { return monomial(0, 1); }

  const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
  std::int64_t coeff(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }

  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator-=(const BivarPoly& other);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly operator-() const;
  BivarPoly pow(unsigned n) const;

  std::int64_t evaluate(std::int64_t x, std::int64_t y) const;

  /// e.g. "x^3 + 3*x^2 + 4*x*y + y"; terms by decreasing total degree.
  std::string to_string() const;

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

 private:
  void add_term(const Exponent& e, std::int64_t c);
  std::map<Exponent, std::int64_t> terms_;
};

}  // namespace tgrw
