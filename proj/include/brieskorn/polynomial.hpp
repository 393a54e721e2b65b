#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace brieskorn {

// Dense univariate polynomial with exact integer coefficients, constant
// term first.  The zero polynomial is the empty coefficient vector and has
// degree -1; otherwise the leading coefficient is nonzero.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<mpz_class> coefficients);

  static IntegerPolynomial zero() { return {}; }
  static IntegerPolynomial one();
  static IntegerPolynomial constant(mpz_class c);
  static IntegerPolynomial monomial(mpz_class c, std::size_t degree);
  // t^n - 1
  static IntegerPolynomial power_minus_one(std::uint64_t n);

  bool is_zero() const { return coeff_.empty(); }
  long degree() const { return static_cast<long>(coeff_.size()) - 1; }
  const mpz_class& coefficient(std::size_t i) const;
  const std::vector<mpz_class>& coefficients() const { return coeff_; }
  const mpz_class& leading() const;
  bool is_monic() const;

  IntegerPolynomial operator+(const IntegerPolynomial& rhs) const;
  IntegerPolynomial operator-(const IntegerPolynomial& rhs) const;
  IntegerPolynomial operator*(const IntegerPolynomial& rhs) const;
  IntegerPolynomial& operator*=(const IntegerPolynomial& rhs);
  bool operator==(const IntegerPolynomial& rhs) const = default;

  // Exact division; throws internal_error if the remainder is nonzero or a
  // coefficient division fails.
  IntegerPolynomial divide_exact(const IntegerPolynomial& divisor) const;

  // p(t^k) for k >= 1.
  IntegerPolynomial substitute_power(std::uint64_t k) const;

  mpz_class evaluate(const mpz_class& x) const;

  // t^deg * p(1/t) == p(t)
  bool is_palindromic() const;

  std::string to_string(const char* var = "t") const;

 private:
  void normalize();
  std::vector<mpz_class> coeff_;
};

}  // namespace brieskorn
