#include "brieskorn/polynomial.hpp"

#include <sstream>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {
const mpz_class kZero = 0;
}

IntegerPolynomial::IntegerPolynomial(std::vector<mpz_class> coefficients)
    : coeff_(std::move(coefficients)) {
  normalize();
}

void IntegerPolynomial::normalize() {
  while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

IntegerPolynomial IntegerPolynomial::one() { return constant(1); }

IntegerPolynomial IntegerPolynomial::constant(mpz_class c) {
  IntegerPolynomial p;
  if (c != 0) p.coeff_.push_back(std::move(c));
  return p;
}

IntegerPolynomial IntegerPolynomial::monomial(mpz_class c, std::size_t degree) {
  IntegerPolynomial p;
  if (c != 0) {
    p.coeff_.assign(degree + 1, kZero);
    p.coeff_[degree] = std::move(c);
  }
  return p;
}

IntegerPolynomial IntegerPolynomial::power_minus_one(std::uint64_t n) {
  if (n == 0) return zero();
  IntegerPolynomial p;
  p.coeff_.assign(n + 1, kZero);
  p.coeff_[0] = -1;
  p.coeff_[n] = 1;
  return p;
}

const mpz_class& IntegerPolynomial::coefficient(std::size_t i) const {
  return i < coeff_.size() ? coeff_[i] : kZero;
}

const mpz_class& IntegerPolynomial::leading() const {
  if (coeff_.empty()) return kZero;
  return coeff_.back();
}

bool IntegerPolynomial::is_monic() const {
  return !coeff_.empty() && coeff_.back() == 1;
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& rhs) const {
  std::vector<mpz_class> out(std::max(coeff_.size(), rhs.coeff_.size()), kZero);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = coefficient(i) + rhs.coefficient(i);
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator-(const IntegerPolynomial& rhs) const {
  std::vector<mpz_class> out(std::max(coeff_.size(), rhs.coeff_.size()), kZero);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = coefficient(i) - rhs.coefficient(i);
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return zero();
  std::vector<mpz_class> out(coeff_.size() + rhs.coeff_.size() - 1, kZero);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeff_.size(); ++j) {
      if (rhs.coeff_[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), coeff_[i].get_mpz_t(),
                 rhs.coeff_[j].get_mpz_t());
    }
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial& IntegerPolynomial::operator*=(const IntegerPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntegerPolynomial IntegerPolynomial::divide_exact(const IntegerPolynomial& divisor) const {
  if (divisor.is_zero()) throw internal_error("polynomial division by zero");
  if (is_zero()) return zero();
  if (degree() < divisor.degree())
    throw internal_error("polynomial division is not exact (degree)");

  std::vector<mpz_class> rem = coeff_;
  std::vector<mpz_class> quot(coeff_.size() - divisor.coeff_.size() + 1, kZero);
  const mpz_class& lead = divisor.leading();
  for (std::size_t i = quot.size(); i-- > 0;) {
    mpz_class& top = rem[i + divisor.coeff_.size() - 1];
    if (top == 0) continue;
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw internal_error("polynomial division is not exact (leading)");
    quot[i] = q;
    for (std::size_t j = 0; j < divisor.coeff_.size(); ++j)
      rem[i + j] -= q * divisor.coeff_[j];
  }
  for (const mpz_class& c : rem)
    if (c != 0) throw internal_error("polynomial division is not exact (remainder)");
  return IntegerPolynomial(std::move(quot));
}

IntegerPolynomial IntegerPolynomial::substitute_power(std::uint64_t k) const {
  if (k == 0) throw input_error("substitute_power: k must be >= 1");
  if (is_zero() || k == 1) return *this;
  std::vector<mpz_class> out((coeff_.size() - 1) * k + 1, kZero);
  for (std::size_t i = 0; i < coeff_.size(); ++i) out[i * k] = coeff_[i];
  return IntegerPolynomial(std::move(out));
}

mpz_class IntegerPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (std::size_t i = coeff_.size(); i-- > 0;) acc = acc * x + coeff_[i];
  return acc;
}

bool IntegerPolynomial::is_palindromic() const {
  for (std::size_t i = 0, j = coeff_.size(); i < j; ++i)
    if (coeff_[i] != coeff_[coeff_.size() - 1 - i]) return false;
  return true;
}

std::string IntegerPolynomial::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeff_.size(); i-- > 0;) {
    const mpz_class& c = coeff_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace brieskorn
