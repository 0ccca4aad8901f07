#pragma once

#include <hexstrip/big_count.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace hexstrip {

/// Polynomial in the colour variables a and b with exact integer
/// coefficients. Zero coefficients are never stored, so two polynomials are
/// equal iff their term maps are equal.
class BivarPoly {
 public:
  /// (exponent of a, exponent of b)
  using Exponents = std::pair<int, int>;
  /// Iteration runs in descending a-exponent, then descending b-exponent.
  using Terms = std::map<Exponents, BigCount, std::greater<>>;

  BivarPoly() = default;
  /// coeff * a^a_exp * b^b_exp
  static BivarPoly monomial(const BigCount& coeff, int a_exp, int b_exp);
  static BivarPoly constant(const BigCount& coeff) { return monomial(coeff, 0, 0); }
  static BivarPoly a() { return monomial(1, 1, 0); }
  static BivarPoly b() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a^i b^j (zero if absent).
  BigCount coefficient(int a_exp, int b_exp) const;

  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator-=(const BivarPoly& other);
  BivarPoly& operator*=(const BivarPoly& other);
  /// Adds coeff * a^i b^j.
  void add_term(const BigCount& coeff, int a_exp, int b_exp);

  friend BivarPoly operator+(BivarPoly x, const BivarPoly& y) { return x += y; }
  friend BivarPoly operator-(BivarPoly x, const BivarPoly& y) { return x -= y; }
  friend BivarPoly operator*(const BivarPoly& x, const BivarPoly& y);
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  /// Product of the polynomial with coeff * a^i b^j.
  BivarPoly shifted(const BigCount& coeff, int a_exp, int b_exp) const;

  BigCount evaluate(const BigCount& a, const BigCount& b) const;

  /// "a^4 + 5*a^2*b + 2*b^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace hexstrip
