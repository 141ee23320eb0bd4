#include "negsq/admissible.hpp"

#include <algorithm>
#include <functional>
#include <future>

#include "negsq/errors.hpp"

namespace negsq {

namespace {

const PrimePower kTwo{2};

bool has_gsig(const PrimePower& q) { return !q.is_even() || q.q() == 2; }

// Runs `keep` over every value in `values`, preserving order.
std::vector<Integer> filter_parallel(const std::vector<Integer>& values,
                                     const std::function<bool(const Integer&)>& keep,
                                     std::size_t workers) {
  workers = std::max<std::size_t>(1, std::min(workers, values.size()));
  auto run = [&](std::size_t begin, std::size_t end) {
    std::vector<Integer> out;
    for (std::size_t i = begin; i < end; ++i)
      if (keep(values[i])) out.push_back(values[i]);
    return out;
  };
  if (workers == 1) return run(0, values.size());

  const std::size_t chunk = (values.size() + workers - 1) / workers;
  std::vector<std::future<std::vector<Integer>>> parts;
  for (std::size_t begin = 0; begin < values.size(); begin += chunk)
    parts.push_back(std::async(std::launch::async, run, begin,
                               std::min(values.size(), begin + chunk)));
  std::vector<Integer> merged;
  for (auto& part : parts) {
    auto chunk_result = part.get();
    merged.insert(merged.end(), chunk_result.begin(), chunk_result.end());
  }
  return merged;
}

Integer ceiling_of(const std::vector<BoundOutcome>& outcomes) {
  std::optional<Rational> best;
  for (const auto& o : outcomes)
    if (o.applicable() && (!best || *o.value() < *best)) best = *o.value();
  if (!best) throw ValidationError("no closed-form bound applies to this scenario");
  const Integer ceiling = floor_of(*best);
  if (ceiling > kMaxScan)
    throw ValidationError("scan range up to " + ceiling.str() + " exceeds the limit of " +
                          std::to_string(kMaxScan));
  return ceiling;
}

AdmissibleReport enumerate_characteristic(const Scenario& s, const CharacteristicKind& kind,
                                          const EnumerationOptions& options) {
  const Integer& b2 = s.model.b2();
  const Integer& sigma = s.model.sigma();
  AdmissibleReport report;
  report.perBound = scenario_bounds(s);
  report.ceiling = ceiling_of(report.perBound);
  report.filtersApplied.push_back(options.useAbs
                                      ? "5/4 inequality on the double cover branched over 2A"
                                      : "linearized 5/4 inequality on the double cover "
                                        "branched over 2A (absolute value dropped)");
  if (kind.sphereFilter)
    report.filtersApplied.push_back("sphere congruence N = -sigma (mod 16)");

  std::vector<Integer> range;
  for (Integer n = 1; n <= report.ceiling; ++n) range.push_back(n);
  report.candidates = filter_parallel(
      range,
      [&](const Integer& n) {
        if (!pipeline_check_char(b2, sigma, s.genus, n, options.useAbs)) return false;
        return !kind.sphereFilter || km_congruence(sigma, n);
      },
      options.workers);
  return report;
}

AdmissibleReport enumerate_divisible(const Scenario& s, const DivisibleKind& kind,
                                     const EnumerationOptions& options) {
  const PrimePower& q = kind.q;
  const Integer& b2 = s.model.b2();
  const Integer& sigma = s.model.sigma();
  const bool spinX = s.model.spin();

  AdmissibleReport report;
  report.perBound = scenario_bounds(s);
  report.ceiling = ceiling_of(report.perBound);

  const bool spinY = cover_spin(q, spinX, kind.cOverQCharacteristic);
  const std::string qs = std::to_string(q.q());
  report.filtersApplied.push_back("divisibility: " + qs + "^2 divides N");
  report.filtersApplied.push_back(spinY ? "5/4 inequality on the " + qs + "-fold branched cover"
                                        : "b2 >= |sigma| on the " + qs + "-fold branched cover");
  if (has_gsig(q))
    report.filtersApplied.push_back("G-signature genus bound for q = " + qs);

  // A class divisible by p^r is divisible by every p^s, s < r. For the smaller
  // covers (1/p^s)[A] is an even multiple of (1/q)[A] when p = 2, so Y is spin
  // exactly when X is.
  std::vector<PrimePower> extra;
  if (s.model.has_form()) {
    std::int64_t qs_value = 1;
    for (int k = 1; k < q.r(); ++k) {
      qs_value *= q.p();
      extra.emplace_back(qs_value);
      report.filtersApplied.push_back("multi-q intersection: q' = " + std::to_string(qs_value));
    }
  }

  const Integer step = q.value() * q.value();
  std::vector<Integer> range;
  for (Integer n = step; n <= report.ceiling; n += step) range.push_back(n);
  report.candidates = filter_parallel(
      range,
      [&](const Integer& n) {
        if (!pipeline_check_div(q, b2, sigma, s.genus, n, spinY)) return false;
        for (const auto& smaller : extra)
          if (!pipeline_check_div(smaller, b2, sigma, s.genus, n, spinX)) return false;
        return true;
      },
      options.workers);
  return report;
}

}  // namespace

bool pipeline_check_char(const Integer& b2, const Integer& sigma, const Integer& genusA,
                         const Integer& n, bool useAbs) {
  const Integer genusB = multiple_genus(2, n, genusA);
  const Integer b2Y = cover_b2(kTwo, b2, genusB);
  const Integer sigmaY = cover_sigma(kTwo, sigma, -4 * n);
  if (useAbs) return furuta_check(b2Y, sigmaY);
  return 4 * b2Y >= 5 * sigmaY + 8;
}

Integer oracle_max_char(const Integer& b2, const Integer& sigma, const Integer& genusA) {
  Integer n = 1;
  while (pipeline_check_char(b2, sigma, genusA, n, false)) ++n;
  return n - 1;
}

bool pipeline_check_div(const PrimePower& q, const Integer& b2, const Integer& sigma,
                        const Integer& genusA, const Integer& n, bool spinY) {
  if (n < 1) throw ValidationError("N must be positive, got " + n.str());
  const Integer q2 = q.value() * q.value();
  if (n % q2 != 0)
    throw DivisibilityViolation("N = " + n.str() + " is not divisible by q^2 = " + q2.str());
  const Integer b2Y = cover_b2(q, b2, genusA);
  const Integer sigmaY = cover_sigma(q, sigma, -n);
  const bool cover_ok = spinY ? furuta_check(b2Y, sigmaY) : betti_signature_check(b2Y, sigmaY);
  if (!cover_ok) return false;
  if (has_gsig(q) && rohlin_genus_lb(q, b2, sigma, -n) > Rational(genusA)) return false;
  return true;
}

void validate(const Scenario& s) {
  if (s.genus < 0) throw ValidationError("genus must be non-negative, got " + s.genus.str());
  if (const auto* c = std::get_if<CharacteristicKind>(&s.kind)) {
    if (c->sphereFilter && s.genus != 0)
      throw ValidationError("the sphere congruence filter requires genus 0");
  }
}

std::vector<BoundOutcome> scenario_bounds(const Scenario& s) {
  validate(s);
  const Integer& b2 = s.model.b2();
  const Integer& sigma = s.model.sigma();
  std::vector<BoundOutcome> out;
  if (std::holds_alternative<CharacteristicKind>(s.kind)) {
    out.push_back(char_bound(b2, sigma, s.genus));
    return out;
  }
  const auto& kind = std::get<DivisibleKind>(s.kind);
  const PrimePower& q = kind.q;
  const bool spinX = s.model.spin();
  if (has_gsig(q)) out.push_back(gsig_bound(q, b2, sigma, s.genus));
  if (!q.is_even()) out.push_back(gsig_uniform_odd_bound(b2, sigma, s.genus));
  out.push_back(furuta_div_bound(q, b2, sigma, s.genus, spinX, kind.cOverQCharacteristic));
  if (!q.is_even()) out.push_back(furuta_div_uniform(b2, sigma, s.genus, spinX));
  return out;
}

AdmissibleReport enumerate_admissible(const Scenario& s, const EnumerationOptions& options) {
  validate(s);
  if (const auto* c = std::get_if<CharacteristicKind>(&s.kind))
    return enumerate_characteristic(s, *c, options);
  return enumerate_divisible(s, std::get<DivisibleKind>(s.kind), options);
}

}  // namespace negsq
