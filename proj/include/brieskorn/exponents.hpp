#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "brieskorn/errors.hpp"
#include "brieskorn/numtheory.hpp"

namespace brieskorn {

// Exponent tuple (a_0, ..., a_n) of a weighted-homogeneous sum of pure
// powers; the associated link has real dimension 2n - 1.  Every entry must
// be >= 2 (an exponent of 1 is a smooth factor and is rejected).
class Exponents {
 public:
  explicit Exponents(std::vector<std::int64_t> a) : a_(std::move(a)) {
    if (a_.size() < 2) throw input_error("exponents: need at least two entries");
    for (std::int64_t v : a_)
      if (v < 2) throw input_error("exponents: every entry must be >= 2");
  }

  const std::vector<std::int64_t>& values() const { return a_; }
  std::size_t count() const { return a_.size(); }
  std::int64_t n() const { return static_cast<std::int64_t>(a_.size()) - 1; }
  std::int64_t link_dimension() const { return 2 * n() - 1; }
  mpz_class lcm() const { return lcm_of(a_); }

 private:
  std::vector<std::int64_t> a_;
};

}  // namespace brieskorn
