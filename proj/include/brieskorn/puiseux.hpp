#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace brieskorn {

// One term c * x^(num/den) of a fractional-power series for a plane-curve
// branch y(x).  Exponent numerator/denominator are kept as declared (not
// reduced): the denominators as written pin the parameterization x = t^m.
struct PuiseuxTerm {
  std::int64_t exp_num = 0;
  std::int64_t exp_den = 1;
  mpq_class coefficient;
};

// Truncated branch y = sum c_i x^{e_i}, exponents positive and strictly
// increasing, coefficients nonzero.
class PuiseuxBranch {
 public:
  explicit PuiseuxBranch(std::vector<PuiseuxTerm> terms);

  const std::vector<PuiseuxTerm>& terms() const { return terms_; }

  // m = lcm of the declared exponent denominators; the branch is
  // parameterized as x = t^m, y = sum c_i t^{e_i * m}.
  std::uint64_t ramification() const { return ramification_; }

 private:
  std::vector<PuiseuxTerm> terms_;
  std::uint64_t ramification_ = 1;
};

// Coprime pair (p, q) with p >= 2; the k-th pair contributes the essential
// exponent q_k / (p_1 ... p_k).
struct CharacteristicPair {
  std::int64_t p = 0;
  std::int64_t q = 0;
  bool operator==(const CharacteristicPair&) const = default;
};

class CharacteristicPairs {
 public:
  CharacteristicPairs() = default;  // empty: smooth branch, unknot
  explicit CharacteristicPairs(std::vector<CharacteristicPair> pairs);

  const std::vector<CharacteristicPair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }

 private:
  std::vector<CharacteristicPair> pairs_;
};

// Extracts the characteristic pairs by the gcd-drop rule on the exponent
// numerators over the common denominator m.  Throws input_error when the
// running gcd does not reach 1, i.e. the given terms do not yet pin the
// knot type.
CharacteristicPairs characteristic_pairs(const PuiseuxBranch& branch);

// One cabling stage: `winding` strands running `slope` times around the
// meridian, with slopes measured against the Seifert framing of the
// previous stage.  For plane branches the slopes are exactly the generators
// of the value semigroup.
struct CableStage {
  std::int64_t winding = 0;
  std::int64_t slope = 0;
  bool operator==(const CableStage&) const = default;
};

struct CablePresentation {
  std::vector<CableStage> stages;  // empty: unknot

  bool is_unknot() const { return stages.empty(); }
};

CablePresentation cable_presentation(const CharacteristicPairs& cp);

// Milnor number of the branch from its characteristic pairs alone, via the
// value semigroup (conductor formula, certified by a gap sieve).
mpz_class branch_milnor_number(const CharacteristicPairs& cp);

// Integer-coefficient polynomial in x, y as a term list.
class BivariatePolynomial {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;  // (deg_x, deg_y)

  void add_term(std::uint32_t dx, std::uint32_t dy, mpz_class c);
  const std::map<Key, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class constant_term() const;

  // Sums of signed monomials, e.g. "y^2 - x^3" or "3x^2*y - 4".
  static BivariatePolynomial parse_expression(const std::string& text);
  // One "coeff deg_x deg_y" triple per line; '#' starts a comment.
  static BivariatePolynomial parse_term_list(const std::string& text);

  std::string to_string() const;

 private:
  std::map<Key, mpz_class> terms_;
};

struct IntersectionOptions {
  std::uint64_t initial_bound = 256;
  std::uint64_t hard_cap = std::uint64_t{1} << 20;
};

// Order in t of f(x(t), y(t)) along the parameterized branch; semantically
// the linking number of the two knots.  Truncated exact power-series
// arithmetic, doubling the bound on demand; throws input_error when f
// vanishes identically on the branch (same branch) or the order exceeds
// the cap.
mpz_class intersection_multiplicity(const PuiseuxBranch& branch,
                                    const BivariatePolynomial& f,
                                    const IntersectionOptions& opts = {});

}  // namespace brieskorn
