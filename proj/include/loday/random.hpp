// Seeded generators for randomized identity checks. Coefficients are
// small integers and polynomial degrees stay low so exact arithmetic
// stays fast; identities over exact scalars fail loudly anyway.
#ifndef LODAY_RANDOM_HPP
#define LODAY_RANDOM_HPP

#include "loday/exterior.hpp"
#include "loday/poly.hpp"

#include <cstdint>
#include <random>

namespace loday {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int intIn(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }

  Rational rational() { return Rational(intIn(-3, 3)); }

  // Random polynomial of total degree <= maxDeg with coefficients in -3..3.
  Poly poly(const Ring& ring, int maxDeg = 2);

  Section section(int rank, const Ring& ring, int maxDeg = 2);
  MultiSection multiSection(int rank, int degree, const Ring& ring, int maxDeg = 2);

private:
  std::mt19937_64 gen_;
};

}  // namespace loday

#endif
