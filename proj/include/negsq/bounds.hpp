#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negsq/cover.hpp"
#include "negsq/numeric.hpp"

namespace negsq {

enum class Theorem {
  GsigQ2,            // G-signature, q = 2
  GsigQOdd,          // G-signature, q an odd prime power
  GsigUniform,       // G-signature, uniform in odd q
  FurutaDiv,         // 5/4 theorem on the q-fold cover over A
  FurutaDivUniform,  // same, uniform in odd q for spin X
  FurutaChar,        // 5/4 theorem on the double cover over 2A, A characteristic
  Conjectural,       // conditional on the divisible-by-2 conjecture
};

std::string_view theorem_tag(Theorem t);

struct Hypothesis {
  std::string name;
  bool satisfied;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

/// Upper bound on N = -A^2 produced by one theorem. The value is present iff
/// every hypothesis holds. A negative value means the theorem excludes every
/// surface with A^2 < 0.
class BoundOutcome {
 public:
  BoundOutcome(Theorem theorem, std::vector<Hypothesis> hypotheses, Rational value);

  Theorem theorem() const { return theorem_; }
  const std::vector<Hypothesis>& hypotheses() const { return hypotheses_; }
  bool applicable() const { return value_.has_value(); }
  const std::optional<Rational>& value() const { return value_; }
  /// Throws std::logic_error when the outcome is inapplicable.
  const Rational& require_value() const;

 private:
  Theorem theorem_;
  std::vector<Hypothesis> hypotheses_;
  std::optional<Rational> value_;
};

/// Constant c(X) and genus slope kappa of the conjectured inequality
/// M <= c(X) + kappa g_B for classes divisible by 2.
struct ConjectureParams {
  Rational c;
  Rational kappa;
};

// Closed-form bounds for A divisible by a prime power q. The G-signature
// bounds exist only for q = 2 and odd q; other even q throw UnsupportedEvenPower.
BoundOutcome gsig_bound(const PrimePower& q, const Integer& b2, const Integer& sigma,
                        const Integer& genus);
BoundOutcome gsig_uniform_odd_bound(const Integer& b2, const Integer& sigma,
                                    const Integer& genus);

/// Raw genus lower bound from the G-signature theorem, before clamping at 0.
Rational rohlin_genus_lb(const PrimePower& q, const Integer& b2, const Integer& sigma,
                         const Integer& squareA);

BoundOutcome furuta_div_bound(const PrimePower& q, const Integer& b2, const Integer& sigma,
                              const Integer& genus, bool spinX, bool cOverQCharacteristic);
BoundOutcome furuta_div_uniform(const Integer& b2, const Integer& sigma, const Integer& genus,
                                bool spinX);

// A characteristic.
BoundOutcome char_bound(const Integer& b2, const Integer& sigma, const Integer& genus);
/// Lower bound on A^2 for a characteristic sphere with A^2 < 0.
Integer sphere_char_lower_bound(const Integer& b2, const Integer& sigma);
/// N = -sigma (mod 16), required of characteristic spheres.
bool km_congruence(const Integer& sigma, const Integer& n);

/// Genus of a surface representing d[A], built from d parallel copies of A:
/// d(d-1)N/2 + 1 - d + d g_A.
Integer multiple_genus(const Integer& d, const Integer& n, const Integer& genusA);

/// (c + kappa(2g - 1)) / (4 - kappa). Throws KappaOutOfRange if kappa >= 4.
BoundOutcome conjectural_bound(const ConjectureParams& params, const Integer& genusA);
/// The instance of the conjecture supplied by the 5/4 theorem when (1/2)[B] is
/// characteristic: kappa = 16/5.
ConjectureParams furuta_conjecture_params(const Integer& b2, const Integer& sigma);
/// 2d/(d-1), the slope ceiling for the divisible-by-d variant.
Rational conjecture_kappa_limit(const Integer& d);

}  // namespace negsq
