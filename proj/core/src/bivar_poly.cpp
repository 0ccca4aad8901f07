#include <hexstrip/bivar_poly.hpp>

#include <string>

namespace hexstrip {

BivarPoly BivarPoly::monomial(const BigCount& coeff, int a_exp, int b_exp) {
  BivarPoly p;
  p.add_term(coeff, a_exp, b_exp);
  return p;
}

BigCount BivarPoly::coefficient(int a_exp, int b_exp) const {
  auto it = terms_.find({a_exp, b_exp});
  return it == terms_.end() ? BigCount(0) : it->second;
}

void BivarPoly::add_term(const BigCount& coeff, int a_exp, int b_exp) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace({a_exp, b_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  for (const auto& [exps, coeff] : other.terms_) add_term(coeff, exps.first, exps.second);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
  for (const auto& [exps, coeff] : other.terms_) add_term(-coeff, exps.first, exps.second);
  return *this;
}

BivarPoly operator*(const BivarPoly& x, const BivarPoly& y) {
  BivarPoly product;
  BigCount scratch;
  for (const auto& [xe, xc] : x.terms_) {
    for (const auto& [ye, yc] : y.terms_) {
      scratch = xc * yc;
      product.add_term(scratch, xe.first + ye.first, xe.second + ye.second);
    }
  }
  return product;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& other) { return *this = *this * other; }

BivarPoly BivarPoly::shifted(const BigCount& coeff, int a_exp, int b_exp) const {
  BivarPoly result;
  if (coeff == 0) return result;
  for (const auto& [exps, c] : terms_) {
    result.terms_.emplace_hint(result.terms_.end(), Exponents{exps.first + a_exp, exps.second + b_exp}, c * coeff);
  }
  return result;
}

BigCount BivarPoly::evaluate(const BigCount& a, const BigCount& b) const {
  BigCount total = 0;
  BigCount a_pow, b_pow;
  for (const auto& [exps, coeff] : terms_) {
    mpz_pow_ui(a_pow.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(exps.first));
    mpz_pow_ui(b_pow.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exps.second));
    total += coeff * a_pow * b_pow;
  }
  return total;
}

namespace {

std::string power(char variable, int exponent) {
  if (exponent == 1) return std::string(1, variable);
  return std::string(1, variable) + "^" + std::to_string(exponent);
}

}  // namespace

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    BigCount magnitude = abs(coeff);
    if (first) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;

    std::string factors;
    if (exps.first != 0) factors = power('a', exps.first);
    if (exps.second != 0) factors += (factors.empty() ? "" : "*") + power('b', exps.second);

    if (factors.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.get_str() + "*" + factors;
    }
  }
  return out;
}

}  // namespace hexstrip
