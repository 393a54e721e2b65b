#include "brieskorn/alexander.hpp"

#include <numeric>

#include "brieskorn/errors.hpp"

namespace brieskorn {

IntegerPolynomial alexander_torus_knot(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw input_error("alexander_torus_knot: p, q must be >= 1");
  if (std::gcd(p, q) != 1)
    throw input_error("alexander_torus_knot: p and q must be coprime");
  const __int128 prod = static_cast<__int128>(p) * q;
  if (prod > (std::int64_t{1} << 32))
    throw budget_error("alexander_torus_knot: degree p*q too large");
  const auto up = static_cast<std::uint64_t>(p);
  const auto uq = static_cast<std::uint64_t>(q);
  const IntegerPolynomial numerator =
      IntegerPolynomial::power_minus_one(up * uq) * IntegerPolynomial::power_minus_one(1);
  return numerator.divide_exact(IntegerPolynomial::power_minus_one(up))
      .divide_exact(IntegerPolynomial::power_minus_one(uq));
}

IntegerPolynomial alexander_iterated(const CablePresentation& cable) {
  IntegerPolynomial acc = IntegerPolynomial::one();
  for (const CableStage& stage : cable.stages) {
    if (std::gcd(stage.winding, stage.slope) != 1)
      throw internal_error("cable stage with non-coprime winding and slope");
    acc = acc.substitute_power(static_cast<std::uint64_t>(stage.winding)) *
          alexander_torus_knot(stage.winding, stage.slope);
  }
  return acc;
}

IntegerPolynomial alexander_for_pairs(const CharacteristicPairs& cp) {
  const IntegerPolynomial delta = alexander_iterated(cable_presentation(cp));
  const mpz_class mu = branch_milnor_number(cp);
  if (mpz_class(delta.degree()) != mu)
    throw internal_error("iterated Alexander degree disagrees with the branch Milnor number");
  return delta;
}

}  // namespace brieskorn
