#pragma once

#include <cstdint>

#include "negsq/numeric.hpp"

namespace negsq {

/// q = p^r with p prime, r >= 1. Validated on construction.
class PrimePower {
 public:
  /// Throws InvalidPrimePower unless q is a prime power >= 2.
  explicit PrimePower(std::int64_t q);

  std::int64_t q() const { return q_; }
  std::int64_t p() const { return p_; }
  int r() const { return r_; }
  bool is_even() const { return p_ == 2; }
  Integer value() const { return Integer(q_); }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  std::int64_t q_;
  std::int64_t p_;
  int r_;
};

/// Invariants of the q-fold cyclic cover Y -> X branched over a surface B.
struct CoverInvariants {
  PrimePower q;
  Integer b2;
  Integer sigma;
  bool spin;
};

// b2(Y) = q b2(X) + 2(q-1) g_B.
Integer cover_b2(const PrimePower& q, const Integer& b2X, const Integer& genusB);

// sigma(Y) = q sigma(X) - (q^2-1)/(3q) B^2. Throws NonIntegerSignature when
// the right-hand side is not an integer.
Integer cover_sigma(const PrimePower& q, const Integer& sigmaX, const Integer& squareB);

// Y is spin iff ((q-1)/q)[B] is characteristic: for odd q that means X spin,
// for even q that (1/q)[B] is characteristic.
bool cover_spin(const PrimePower& q, bool spinX, bool branchOverQCharacteristic);

CoverInvariants branched_cover(const PrimePower& q, const Integer& b2X, const Integer& sigmaX,
                               bool spinX, const Integer& genusB, const Integer& squareB,
                               bool branchOverQCharacteristic);

// b2 >= |sigma|.
bool betti_signature_check(const Integer& b2, const Integer& sigma);

// 4 b2 >= 5 |sigma| + 8, i.e. b2 >= (5/4)|sigma| + 2 for spin Y with b2 > 0.
bool furuta_check(const Integer& b2, const Integer& sigma);

}  // namespace negsq
