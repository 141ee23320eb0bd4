#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "negsq/bounds.hpp"
#include "negsq/cover.hpp"
#include "negsq/lattice.hpp"

namespace negsq {

struct DivisibleKind {
  PrimePower q;
  /// Whether (1/q)[A] is characteristic; only consulted for even q.
  bool cOverQCharacteristic = false;
};

struct CharacteristicKind {
  /// Restrict to spheres and apply the mod 16 congruence. Requires genus 0.
  bool sphereFilter = false;
};

using ClassKind = std::variant<DivisibleKind, CharacteristicKind>;

struct Scenario {
  ManifoldModel model;
  Integer genus;
  ClassKind kind;
};

struct EnumerationOptions {
  /// Keep the absolute value in the 5/4 inequality for characteristic classes.
  bool useAbs = true;
  /// Candidate N values are split into this many contiguous chunks, each
  /// checked on its own thread.
  std::size_t workers = 1;
};

/// Values of N = -A^2 not excluded by the implemented obstructions. Membership
/// is necessary for a surface to exist, never sufficient.
struct AdmissibleReport {
  std::vector<Integer> candidates;
  std::vector<BoundOutcome> perBound;
  std::vector<std::string> filtersApplied;
  /// floor of the smallest applicable closed-form bound; the scan range.
  Integer ceiling;
};

/// Double cover branched over a surface B in 2[A], A characteristic with
/// genus g and A^2 = -N. useAbs=false drops the absolute value in the 5/4
/// inequality, reproducing the linear inequality behind char_bound.
bool pipeline_check_char(const Integer& b2, const Integer& sigma, const Integer& genusA,
                         const Integer& n, bool useAbs);

/// Largest N passing pipeline_check_char(useAbs=false), found by scanning
/// N = 1, 2, ... up to the first failure; 0 if N = 1 fails.
Integer oracle_max_char(const Integer& b2, const Integer& sigma, const Integer& genusA);

/// q-fold cover branched over A itself (g_B = g_A, B^2 = -N): the 5/4 inequality
/// when Y is spin, b2 >= |sigma| otherwise, plus the raw G-signature genus bound
/// (q = 2 or odd q only). Throws DivisibilityViolation unless q^2 | N.
bool pipeline_check_div(const PrimePower& q, const Integer& b2, const Integer& sigma,
                        const Integer& genusA, const Integer& n, bool spinY);

void validate(const Scenario& s);

/// Every closed-form bound relevant to the scenario's class kind, applicable
/// or not. G-signature bounds are omitted for even q > 2.
std::vector<BoundOutcome> scenario_bounds(const Scenario& s);

/// Scans are refused beyond this many candidate values.
inline constexpr long long kMaxScan = 10'000'000;

AdmissibleReport enumerate_admissible(const Scenario& s, const EnumerationOptions& options = {});

}  // namespace negsq
