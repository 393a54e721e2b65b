#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>

#include "brieskorn/polynomial.hpp"

namespace brieskorn {

// The d-th cyclotomic polynomial, computed exactly.
IntegerPolynomial cyclotomic_polynomial(std::uint64_t d);

// Phi_d evaluated at +1 / -1 via closed forms (cross-checked in tests
// against the expanded polynomials).
mpz_class cyclotomic_value_at_one(std::uint64_t d);
mpz_class cyclotomic_value_at_minus_one(std::uint64_t d);

// A monic product of cyclotomic polynomials prod_d Phi_d^{m_d}, kept in
// factored form so that degree and evaluations stay cheap even when the
// expanded polynomial would be enormous.
struct CyclotomicFactorization {
  std::map<std::uint64_t, mpz_class> multiplicity;  // d -> m_d >= 1

  mpz_class degree() const;  // sum m_d * phi(d)

  // Expands the product; throws budget_error when the degree exceeds
  // max_degree.
  IntegerPolynomial expand(std::uint64_t max_degree) const;

  // Exact values of the product at +1 / -1.  Throws budget_error when the
  // result would need more than ~max_bits bits.
  mpz_class value_at_one(std::uint64_t max_bits = 1u << 20) const;
  mpz_class value_at_minus_one(std::uint64_t max_bits = 1u << 20) const;

  // Residues mod 8 (in [0,8)), computable for any multiplicities.
  std::uint32_t mod8_at_one() const;
  std::uint32_t mod8_at_minus_one() const;

  // |value_at_one| == 1, decided without forming large numbers.
  bool value_at_one_is_unit() const;
};

}  // namespace brieskorn
