#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace brieskorn {

// Prime factorization of n >= 1 as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// All positive divisors of n >= 1, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Moebius function: 0 on non-squarefree n, else (-1)^(#prime factors).
int moebius(std::uint64_t n);

// Euler totient.
std::uint64_t totient(std::uint64_t n);

mpz_class lcm_of(const std::vector<std::int64_t>& values);

bool fits_uint64(const mpz_class& z);
std::uint64_t to_uint64(const mpz_class& z);  // requires fits_uint64(z)

}  // namespace brieskorn
