#pragma once

#include <cstdint>

#include "brieskorn/polynomial.hpp"
#include "brieskorn/puiseux.hpp"

namespace brieskorn {

// Alexander polynomial of the (p, q) torus knot,
// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), by exact division.
// Requires p, q >= 1 and gcd(p, q) = 1; p or q equal to 1 gives 1.
IntegerPolynomial alexander_torus_knot(std::int64_t p, std::int64_t q);

// Alexander polynomial of an iterated torus knot: each stage multiplies the
// companion polynomial at t^p by the torus-knot polynomial of the stage.
IntegerPolynomial alexander_iterated(const CablePresentation& cable);

// Convenience: pairs -> cable -> polynomial, with the degree checked
// against the branch Milnor number from the pairs.
IntegerPolynomial alexander_for_pairs(const CharacteristicPairs& cp);

}  // namespace brieskorn
