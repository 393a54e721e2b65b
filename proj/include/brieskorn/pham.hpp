#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "brieskorn/cyclotomic.hpp"
#include "brieskorn/exponents.hpp"
#include "brieskorn/polynomial.hpp"
#include "brieskorn/spectrum.hpp"

namespace brieskorn {

// Number of middle-dimensional spheres in the bouquet: prod (a_i - 1).
mpz_class milnor_number(const Exponents& a);

// Guaranteed connectivity of the link: n - 2.
std::int64_t link_connectivity(const Exponents& a);

// Self-intersection of the vanishing cycle of a quadratic degeneration in
// complex dimension n: 2, -2 or 0 by n mod 4.
int picard_lefschetz_self_intersection(std::int64_t n);

// Graph criterion for the link being a homotopy sphere (n >= 3): build the
// graph on the exponents with edges where gcd > 1, then ask for either two
// isolated vertices, or one isolated vertex plus an odd component of size
// >= 3 whose pairwise gcds are all exactly 2.
bool is_homotopy_sphere(const Exponents& a);

// The characteristic polynomial of the monodromy as a cyclotomic product;
// multiplicities are recovered from eigenvalue-order counts by Moebius
// inversion and cross-checked against the spectrum orbit by orbit.
CyclotomicFactorization characteristic_factorization(
    const Exponents& a, const EnumerationOptions& opts = {});
CyclotomicFactorization factorization_from_spectrum(const MonodromySpectrum& spec);

// Expanded form; degree equals the Milnor number (budget-guarded).
IntegerPolynomial characteristic_polynomial(const Exponents& a,
                                            const EnumerationOptions& opts = {});

// Signature of the middle intersection form via the fractional weight sums:
// tuples with sum mod 2 in (0,1) count +1, in (1,2) count -1, integers 0.
struct SignatureParts {
  mpz_class positive = 0;
  mpz_class negative = 0;
  mpz_class zero = 0;

  mpz_class value() const { return positive - negative; }
};

SignatureParts signature_parts(const Exponents& a,
                               const EnumerationOptions& opts = {});
mpz_class signature(const Exponents& a, const EnumerationOptions& opts = {});

struct SphereClass {
  enum class Kind {
    kNotHomotopySphere,
    kStandardSphere,
    kKervaireSphere,
    kBPClass,
    kUnknownOddDim,  // placeholder for "not classified"
  };

  Kind kind = Kind::kUnknownOddDim;
  std::optional<mpz_class> bp_multiple;      // signature / 8 (even n)
  std::optional<std::uint32_t> bp_mod28;     // n == 4 only
  std::optional<std::uint32_t> arf_residue;  // Delta(-1) mod 8 (odd n)
  std::string detail;

  static const char* kind_name(Kind k);
};

// Classifies a homotopy-sphere link within the group of boundaries of
// parallelizable manifolds.  Requires n >= 3; returns kNotHomotopySphere
// when the graph criterion fails.
SphereClass sphere_class(const Exponents& a, const EnumerationOptions& opts = {});

// Three exponents: homology sphere exactly when pairwise coprime.
bool is_homology_3_sphere(const Exponents& a);

struct GeometryType {
  enum class Kind { kSpherical, kNilpotent, kSLTwoTilde };

  Kind kind;
  mpq_class reciprocal_sum;

  static const char* kind_name(Kind k);
};

// Trichotomy for three exponents by the exact reciprocal sum vs 1.
GeometryType geometry_type(const Exponents& a);

// signature / 8 for a homology 3-sphere link (three pairwise-coprime
// exponents).
mpz_class casson_invariant(const Exponents& a, const EnumerationOptions& opts = {});

}  // namespace brieskorn
