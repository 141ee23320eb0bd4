#include "negsq/bounds.hpp"

#include <stdexcept>

#include "negsq/errors.hpp"

namespace negsq {

namespace {

void require_genus(const Integer& g) {
  if (g < 0) throw ValidationError("genus must be non-negative, got " + g.str());
}

void require_gsig_q(const PrimePower& q) {
  if (q.is_even() && q.q() != 2)
    throw UnsupportedEvenPower("G-signature bounds are available for q = 2 and odd prime "
                               "powers only, got q = " +
                               std::to_string(q.q()));
}

Rational rat(long long num, long long den = 1) { return make_rational(num, den); }

}  // namespace

std::string_view theorem_tag(Theorem t) {
  switch (t) {
    case Theorem::GsigQ2: return "GSIG_Q2";
    case Theorem::GsigQOdd: return "GSIG_QODD";
    case Theorem::GsigUniform: return "GSIG_UNIFORM";
    case Theorem::FurutaDiv: return "FURUTA_DIV";
    case Theorem::FurutaDivUniform: return "FURUTA_DIV_UNIFORM";
    case Theorem::FurutaChar: return "FURUTA_CHAR";
    case Theorem::Conjectural: return "CONJECTURAL";
  }
  return "UNKNOWN";
}

BoundOutcome::BoundOutcome(Theorem theorem, std::vector<Hypothesis> hypotheses, Rational value)
    : theorem_(theorem), hypotheses_(std::move(hypotheses)) {
  bool all = true;
  for (const auto& h : hypotheses_) all = all && h.satisfied;
  if (all) value_ = std::move(value);
}

const Rational& BoundOutcome::require_value() const {
  if (!value_)
    throw std::logic_error("bound " + std::string(theorem_tag(theorem_)) + " is not applicable");
  return *value_;
}

BoundOutcome gsig_bound(const PrimePower& q, const Integer& b2, const Integer& sigma,
                        const Integer& genus) {
  require_gsig_q(q);
  require_genus(genus);
  if (q.q() == 2) {
    return BoundOutcome(Theorem::GsigQ2, {{"[A] divisible by q = 2", true}},
                        Rational(2 * (b2 - sigma) + 4 * genus));
  }
  const Integer q2 = q.value() * q.value();
  const Rational coefficient = make_rational(2 * q2, q2 - 1);
  return BoundOutcome(Theorem::GsigQOdd,
                      {{"[A] divisible by odd prime power q = " + std::to_string(q.q()), true}},
                      coefficient * Rational(b2 - sigma) + 2 * coefficient * Rational(genus));
}

BoundOutcome gsig_uniform_odd_bound(const Integer& b2, const Integer& sigma,
                                    const Integer& genus) {
  require_genus(genus);
  return BoundOutcome(Theorem::GsigUniform,
                      {{"[A] divisible by some odd prime power q >= 3", true}},
                      rat(9, 4) * Rational(b2 - sigma) + rat(9, 2) * Rational(genus));
}

Rational rohlin_genus_lb(const PrimePower& q, const Integer& b2, const Integer& sigma,
                         const Integer& squareA) {
  require_gsig_q(q);
  const Integer q2 = q.value() * q.value();
  // For q = 2 the coefficient (q^2-1)/(4q^2) is replaced by 1/4.
  const Rational coefficient = q.q() == 2 ? rat(1, 4) : make_rational(q2 - 1, 4 * q2);
  const Rational inner = make_rational(sigma, 2) - coefficient * Rational(squareA);
  return abs_of(inner) - make_rational(b2, 2);
}

BoundOutcome furuta_div_bound(const PrimePower& q, const Integer& b2, const Integer& sigma,
                              const Integer& genus, bool spinX, bool cOverQCharacteristic) {
  require_genus(genus);
  std::vector<Hypothesis> hyps;
  if (q.is_even())
    hyps.push_back({"(1/q)[A] characteristic (q = " + std::to_string(q.q()) + " even)",
                    cOverQCharacteristic});
  else
    hyps.push_back({"X spin (q = " + std::to_string(q.q()) + " odd)", spinX});

  const Integer qv = q.value();
  const Integer q2 = qv * qv;
  const Rational lead = make_rational(3 * q2, q2 - 1);
  const Rational inner = rat(4, 5) * Rational(b2) - Rational(sigma) - make_rational(8, 5 * qv);
  const Rational slope = rat(24, 5) * make_rational(qv, qv + 1);
  return BoundOutcome(Theorem::FurutaDiv, std::move(hyps),
                      lead * inner + slope * Rational(genus));
}

BoundOutcome furuta_div_uniform(const Integer& b2, const Integer& sigma, const Integer& genus,
                                bool spinX) {
  require_genus(genus);
  return BoundOutcome(Theorem::FurutaDivUniform,
                      {{"X spin", spinX}, {"[A] divisible by some odd prime power q >= 3", true}},
                      rat(27, 40) * Rational(4 * b2 - 5 * sigma) + rat(24, 5) * Rational(genus));
}

BoundOutcome char_bound(const Integer& b2, const Integer& sigma, const Integer& genus) {
  require_genus(genus);
  return BoundOutcome(Theorem::FurutaChar, {{"[A] characteristic", true}},
                      Rational(4 * b2 - 5 * sigma - 8 + 8 * genus));
}

Integer sphere_char_lower_bound(const Integer& b2, const Integer& sigma) {
  return -(4 * b2 - 5 * sigma - 8);
}

bool km_congruence(const Integer& sigma, const Integer& n) {
  if (n < 1) throw ValidationError("N must be positive, got " + n.str());
  return mod_floor(n + sigma, 16) == 0;
}

Integer multiple_genus(const Integer& d, const Integer& n, const Integer& genusA) {
  if (d < 2) throw ValidationError("multiple d must be at least 2, got " + d.str());
  if (n < 1) throw ValidationError("N must be positive, got " + n.str());
  require_genus(genusA);
  // d(d-1) is even, so the halving is exact.
  return d * (d - 1) * n / 2 + 1 - d + d * genusA;
}

BoundOutcome conjectural_bound(const ConjectureParams& params, const Integer& genusA) {
  require_genus(genusA);
  if (params.kappa >= 4)
    throw KappaOutOfRange("kappa must be less than 4, got " + to_string(params.kappa));
  return BoundOutcome(
      Theorem::Conjectural,
      {{"conditional on Conjecture 1 (assumed, unproven)", true},
       {"kappa = " + to_string(params.kappa) + " < 4", true}},
      (params.c + params.kappa * Rational(2 * genusA - 1)) / (4 - params.kappa));
}

ConjectureParams furuta_conjecture_params(const Integer& b2, const Integer& sigma) {
  return ConjectureParams{rat(16, 5) * Rational(b2) - 4 * Rational(sigma) - rat(16, 5),
                          rat(16, 5)};
}

Rational conjecture_kappa_limit(const Integer& d) {
  if (d < 2) throw ValidationError("multiple d must be at least 2, got " + d.str());
  return make_rational(2 * d, d - 1);
}

}  // namespace negsq
