#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "negsq/errors.hpp"
#include "negsq/numeric.hpp"

namespace negsq {

/// Raised when a Gram matrix fails validation. Carries the 0-based row and
/// column of the first offending entry when one exists.
class GramValidationError : public ValidationError {
 public:
  GramValidationError(const std::string& what, std::optional<std::size_t> row,
                      std::optional<std::size_t> col)
      : ValidationError(what), row_(row), col_(col) {}

  std::optional<std::size_t> row() const { return row_; }
  std::optional<std::size_t> col() const { return col_; }

 private:
  std::optional<std::size_t> row_;
  std::optional<std::size_t> col_;
};

using IntMatrix = std::vector<std::vector<Integer>>;

/// Symmetric unimodular integer matrix: the intersection form of a closed
/// simply-connected 4-manifold in a chosen basis of H_2. Immutable once built.
class GramForm {
 public:
  /// Validates squareness, rank >= 1, symmetry and det = +-1.
  static GramForm from_rows(IntMatrix rows);

  std::size_t rank() const { return entries_.size(); }
  const Integer& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const IntMatrix& rows() const { return entries_; }
  int determinant() const { return det_; }

  friend bool operator==(const GramForm&, const GramForm&) = default;

 private:
  GramForm(IntMatrix entries, int det) : entries_(std::move(entries)), det_(det) {}

  IntMatrix entries_;
  int det_;
};

/// Coordinates of a second-homology class in the basis of some GramForm.
struct HomClass {
  std::vector<Integer> coords;

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
  HomClass scaled(const Integer& k) const;
  /// Exact division of every coordinate; throws DivisibilityViolation if
  /// some coordinate is not a multiple of d.
  HomClass divided(const Integer& d) const;

  friend bool operator==(const HomClass&, const HomClass&) = default;
};

HomClass make_class(std::initializer_list<long long> coords);
HomClass basis_vector(std::size_t rank, std::size_t index);

// Exact integer determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

Integer pair(const GramForm& form, const HomClass& x, const HomClass& y);
Integer square(const GramForm& form, const HomClass& x);

/// gcd of the coordinates; 0 for the zero class.
Integer divisibility(const HomClass& x);

/// x.v = v.v (mod 2) for every basis vector v.
bool is_characteristic(const GramForm& form, const HomClass& x);

/// The unique 0/1 solution of G x = diag(G) over GF(2).
HomClass characteristic_rep(const GramForm& form);

/// Sylvester inertia over the rationals: #positive - #negative pivots.
Integer signature(const GramForm& form);

bool is_even(const GramForm& form);

GramForm direct_sum(const GramForm& a, const GramForm& b);
GramForm negated(const GramForm& form);

// Standard summands.
GramForm hyperbolic();
GramForm e8();
GramForm unit_form(int sign);          // <1> or <-1>
GramForm diagonal_form(int plus, int minus);  // plus<1> + minus<-1>

struct AbstractInvariants {
  Integer b2;
  Integer sigma;
  bool spin = false;
};

/// The manifold X as seen by the bounds: either a concrete intersection form
/// or bare invariants (b2, sigma, spin).
class ManifoldModel {
 public:
  static ManifoldModel from_form(GramForm form);
  /// Rejects b2 < 1, |sigma| > b2 and sigma != b2 (mod 2).
  static ManifoldModel from_invariants(const Integer& b2, const Integer& sigma,
                                       bool spin);

  const Integer& b2() const { return b2_; }
  const Integer& sigma() const { return sigma_; }
  bool spin() const { return spin_; }

  bool has_form() const { return std::holds_alternative<GramForm>(source_); }
  /// nullptr when the model is abstract.
  const GramForm* form() const { return std::get_if<GramForm>(&source_); }

  /// Smoothness sanity checks that fail; never fatal.
  std::vector<std::string> warnings() const;

 private:
  ManifoldModel(std::variant<GramForm, AbstractInvariants> source, Integer b2,
                Integer sigma, bool spin)
      : source_(std::move(source)),
        b2_(std::move(b2)),
        sigma_(std::move(sigma)),
        spin_(spin) {}

  std::variant<GramForm, AbstractInvariants> source_;
  Integer b2_;
  Integer sigma_;
  bool spin_;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  bool parametric;
};

const std::vector<CatalogEntry>& catalog_entries();

/// "k3", "cp2", "s2xs2", or "cp2-k" with parameter k >= 1.
ManifoldModel catalog(const std::string& name,
                      std::optional<long long> parameter = std::nullopt);

/// Accepts the instantiated spelling "cp2-3" as well as catalog names.
ManifoldModel catalog_lookup(const std::string& spelled);

}  // namespace negsq
