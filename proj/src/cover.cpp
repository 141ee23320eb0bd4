#include "negsq/cover.hpp"

#include <string>

#include "negsq/errors.hpp"

namespace negsq {

PrimePower::PrimePower(std::int64_t q) : q_(q), p_(0), r_(0) {
  if (q < 2) throw InvalidPrimePower("q must be a prime power >= 2, got " + std::to_string(q));
  std::int64_t p = 0;
  for (std::int64_t d = 2; d <= q / d; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself is prime
  std::int64_t rest = q;
  int r = 0;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1)
    throw InvalidPrimePower("q must be a prime power, got " + std::to_string(q));
  p_ = p;
  r_ = r;
}

Integer cover_b2(const PrimePower& q, const Integer& b2X, const Integer& genusB) {
  if (b2X < 0) throw ValidationError("b2(X) must be non-negative");
  if (genusB < 0) throw ValidationError("branch genus must be non-negative");
  return q.value() * b2X + 2 * (q.value() - 1) * genusB;
}

Integer cover_sigma(const PrimePower& q, const Integer& sigmaX, const Integer& squareB) {
  const Integer qv = q.value();
  const Rational value =
      Rational(qv * sigmaX) - make_rational(qv * qv - 1, 3 * qv) * Rational(squareB);
  if (!is_integral(value))
    throw NonIntegerSignature("signature of the " + std::to_string(q.q()) +
                              "-fold branched cover would be " + to_string(value) +
                              ": no cover exists for B^2=" + squareB.str() +
                              ", sigma(X)=" + sigmaX.str());
  return numerator_of(value);
}

bool cover_spin(const PrimePower& q, bool spinX, bool branchOverQCharacteristic) {
  return q.is_even() ? branchOverQCharacteristic : spinX;
}

CoverInvariants branched_cover(const PrimePower& q, const Integer& b2X, const Integer& sigmaX,
                               bool spinX, const Integer& genusB, const Integer& squareB,
                               bool branchOverQCharacteristic) {
  return CoverInvariants{q, cover_b2(q, b2X, genusB), cover_sigma(q, sigmaX, squareB),
                         cover_spin(q, spinX, branchOverQCharacteristic)};
}

bool betti_signature_check(const Integer& b2, const Integer& sigma) {
  return b2 >= abs_of(sigma);
}

bool furuta_check(const Integer& b2, const Integer& sigma) {
  return 4 * b2 >= 5 * abs_of(sigma) + 8;
}

}  // namespace negsq
