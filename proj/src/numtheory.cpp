#include "brieskorn/numtheory.hpp"

#include <algorithm>

#include "brieskorn/errors.hpp"

namespace brieskorn {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw input_error("factorize: n must be >= 1");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int moebius(std::uint64_t n) {
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    phi -= phi / p;
  }
  return phi;
}

mpz_class lcm_of(const std::vector<std::int64_t>& values) {
  mpz_class acc = 1;
  for (std::int64_t v : values) {
    mpz_class z = static_cast<long>(v);
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), z.get_mpz_t());
  }
  return acc;
}

bool fits_uint64(const mpz_class& z) {
  return sgn(z) >= 0 && mpz_fits_ulong_p(z.get_mpz_t()) != 0;
}

std::uint64_t to_uint64(const mpz_class& z) {
  if (!fits_uint64(z)) throw internal_error("to_uint64: value out of range");
  return static_cast<std::uint64_t>(mpz_get_ui(z.get_mpz_t()));
}

}  // namespace brieskorn
