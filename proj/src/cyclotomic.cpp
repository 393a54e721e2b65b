#include "brieskorn/cyclotomic.hpp"

#include <map>

#include "brieskorn/errors.hpp"
#include "brieskorn/numtheory.hpp"

namespace brieskorn {

IntegerPolynomial cyclotomic_polynomial(std::uint64_t d) {
  if (d == 0) throw input_error("cyclotomic_polynomial: d must be >= 1");
  // Phi_e = (t^e - 1) / prod of Phi_f over proper divisors f of e, built
  // up the divisor lattice of d.
  std::map<std::uint64_t, IntegerPolynomial> memo;
  for (std::uint64_t e : divisors(d)) {
    IntegerPolynomial p = IntegerPolynomial::power_minus_one(e);
    for (std::uint64_t f : divisors(e)) {
      if (f == e) continue;
      p = p.divide_exact(memo.at(f));
    }
    memo.emplace(e, std::move(p));
  }
  return memo.at(d);
}

// Closed forms for Phi_d(1) and Phi_d(-1); for d >= 3 the polynomial has no
// real roots and is monic, so both values are positive.
mpz_class cyclotomic_value_at_one(std::uint64_t d) {
  if (d == 0) throw input_error("cyclotomic value: d must be >= 1");
  if (d == 1) return 0;
  auto f = factorize(d);
  if (f.size() == 1) return mpz_class(static_cast<unsigned long>(f[0].first));
  return 1;
}

mpz_class cyclotomic_value_at_minus_one(std::uint64_t d) {
  if (d == 0) throw input_error("cyclotomic value: d must be >= 1");
  if (d == 1) return -2;
  if (d == 2) return 0;
  if (d % 2 == 1) return 1;
  unsigned two_exp = 0;
  std::uint64_t odd = d;
  while (odd % 2 == 0) {
    odd /= 2;
    ++two_exp;
  }
  if (odd == 1) return 2;  // d = 2^k, k >= 2
  if (two_exp == 1) {
    auto f = factorize(odd);
    if (f.size() == 1) return mpz_class(static_cast<unsigned long>(f[0].first));
  }
  return 1;
}

mpz_class CyclotomicFactorization::degree() const {
  mpz_class deg = 0;
  for (const auto& [d, m] : multiplicity)
    deg += m * mpz_class(static_cast<unsigned long>(totient(d)));
  return deg;
}

IntegerPolynomial CyclotomicFactorization::expand(std::uint64_t max_degree) const {
  if (degree() > mpz_class(static_cast<unsigned long>(max_degree)))
    throw budget_error("cyclotomic product expansion exceeds the degree budget");
  IntegerPolynomial acc = IntegerPolynomial::one();
  for (const auto& [d, m] : multiplicity) {
    if (m < 0) throw internal_error("negative cyclotomic multiplicity");
    const IntegerPolynomial phi = cyclotomic_polynomial(d);
    for (mpz_class k = 0; k < m; ++k) acc *= phi;
  }
  return acc;
}

namespace {

mpz_class factored_value(const std::map<std::uint64_t, mpz_class>& mult,
                         bool at_minus_one, std::uint64_t max_bits) {
  mpz_class acc = 1;
  std::uint64_t bits = 0;
  for (const auto& [d, m] : mult) {
    mpz_class base = at_minus_one ? cyclotomic_value_at_minus_one(d)
                                  : cyclotomic_value_at_one(d);
    if (base == 0) return 0;
    mpz_class mag = abs(base);
    if (mag == 1) {
      if (sgn(base) < 0 && mpz_odd_p(m.get_mpz_t())) acc = -acc;
      continue;
    }
    if (!fits_uint64(m))
      throw budget_error("factored polynomial value too large to represent");
    const std::uint64_t e = to_uint64(m);
    const std::uint64_t base_bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
    if (e > max_bits || bits + e * base_bits > max_bits)
      throw budget_error("factored polynomial value too large to represent");
    bits += e * base_bits;
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    acc *= pw;
  }
  return acc;
}

std::uint32_t factored_mod8(const std::map<std::uint64_t, mpz_class>& mult,
                            bool at_minus_one) {
  const mpz_class eight = 8;
  mpz_class acc = 1;
  for (const auto& [d, m] : mult) {
    mpz_class base = at_minus_one ? cyclotomic_value_at_minus_one(d)
                                  : cyclotomic_value_at_one(d);
    mpz_class b;
    mpz_mod(b.get_mpz_t(), base.get_mpz_t(), eight.get_mpz_t());
    mpz_class pw;
    mpz_powm(pw.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t(), eight.get_mpz_t());
    acc = (acc * pw) % eight;
  }
  return static_cast<std::uint32_t>(acc.get_ui());
}

}  // namespace

mpz_class CyclotomicFactorization::value_at_one(std::uint64_t max_bits) const {
  return factored_value(multiplicity, false, max_bits);
}

mpz_class CyclotomicFactorization::value_at_minus_one(std::uint64_t max_bits) const {
  return factored_value(multiplicity, true, max_bits);
}

std::uint32_t CyclotomicFactorization::mod8_at_one() const {
  return factored_mod8(multiplicity, false);
}

std::uint32_t CyclotomicFactorization::mod8_at_minus_one() const {
  return factored_mod8(multiplicity, true);
}

bool CyclotomicFactorization::value_at_one_is_unit() const {
  for (const auto& [d, m] : multiplicity) {
    if (m == 0) continue;
    if (abs(cyclotomic_value_at_one(d)) != 1) return false;
  }
  return true;
}

}  // namespace brieskorn
