#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

#include "brieskorn/exponents.hpp"

namespace brieskorn {

// Controls for the tuple-space enumeration behind spectra and signatures.
// Both engines are exact and must agree bit-for-bit; kAuto picks the
// cheaper feasible one.
struct EnumerationOptions {
  enum class Path { kAuto, kDirect, kConvolution };

  std::uint64_t budget = 10'000'000;  // max tuples (direct) / table length (convolution)
  unsigned workers = 1;               // parallel workers for the direct path
  Path path = Path::kAuto;

  // Defaults overridden by BRIESKORN_BUDGET / BRIESKORN_WORKERS when set.
  static EnumerationOptions from_environment();
};

// Distribution of the integer weights N = sum_j k_j * (L / a_j) over all
// tuples with 0 < k_j < a_j, reduced mod 2L (L = lcm of the exponents).
// N / L is the fractional weight sum of the tuple, so residues mod L give
// eigenvalue rotation numbers and the position relative to L splits the
// weight sums mod 2 into (0,1) / (1,2) / integers.
struct SumDistribution {
  std::uint64_t modulus = 0;                   // 2L
  std::map<std::uint64_t, mpz_class> counts;   // residue -> count, zeros omitted

  mpz_class total() const;
};

SumDistribution sum_distribution(const Exponents& a,
                                 const EnumerationOptions& opts = {});

// Rotation number c/d of a unit-circle eigenvalue e^{2*pi*i*c/d}, reduced,
// with 0 <= c < d.  Ordered by value.
struct Rotation {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  bool operator<(const Rotation& rhs) const {
    return static_cast<unsigned __int128>(num) * rhs.den <
           static_cast<unsigned __int128>(rhs.num) * den;
  }
  bool operator==(const Rotation& rhs) const = default;

  std::string to_string() const;
};

// Exact multiset of monodromy eigenvalues as rotation numbers with
// multiplicities.  total always equals the Milnor number.
struct MonodromySpectrum {
  std::map<Rotation, mpz_class> entries;
  mpz_class total = 0;
};

MonodromySpectrum monodromy_spectrum(const Exponents& a,
                                     const EnumerationOptions& opts = {});

MonodromySpectrum spectrum_from_distribution(const SumDistribution& dist);

}  // namespace brieskorn
