#include <random>

#include "doctest.h"

#include "negsq/lattice.hpp"
#include "negsq/model_io.hpp"

using namespace negsq;

namespace {

GramForm k3_form() { return *catalog("k3").form(); }

GramForm plus_minus() { return diagonal_form(1, 1); }

}  // namespace

TEST_CASE("pair and square") {
  const GramForm h = hyperbolic();
  CHECK(pair(h, make_class({1, 0}), make_class({0, 1})) == 1);
  CHECK(pair(k3_form(), HomClass{std::vector<Integer>(22, Integer(0))}, basis_vector(22, 5)) == 0);
  CHECK(pair(plus_minus(), make_class({2, 1}), make_class({2, 1})) == 3);

  CHECK(square(unit_form(-1), make_class({1})) == -1);
  CHECK(square(k3_form(), basis_vector(22, 0).scaled(2)) == 0);
  CHECK(square(diagonal_form(1, 3), make_class({3, 1, 1, 1})) == 6);

  CHECK_THROWS_AS(pair(h, make_class({1}), make_class({0, 1})), DimensionMismatch);
  CHECK_THROWS_AS(square(h, make_class({1, 2, 3})), DimensionMismatch);
}

TEST_CASE("divisibility") {
  CHECK(divisibility(make_class({2, 4, 6})) == 2);
  CHECK(divisibility(make_class({0, 0})) == 0);
  CHECK(divisibility(make_class({3, 5})) == 1);
  CHECK(divisibility(make_class({-6, 9, 0})) == 3);
}

TEST_CASE("divisibility is invariant under GL(n,Z)") {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<int> coord(-30, 30);
  std::uniform_int_distribution<int> mult(-5, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const int scale = 1 + static_cast<int>(rng() % 7);
    HomClass x{std::vector<Integer>(n)};
    for (auto& c : x.coords) c = scale * coord(rng);
    const Integer before = divisibility(x);
    for (int step = 0; step < 20; ++step) {
      const std::size_t i = rng() % n;
      const std::size_t j = rng() % n;
      switch (rng() % 3) {
        case 0:
          if (i != j) x.coords[i] += mult(rng) * x.coords[j];
          break;
        case 1:
          std::swap(x.coords[i], x.coords[j]);
          break;
        default:
          x.coords[i] = -x.coords[i];
      }
    }
    CHECK(divisibility(x) == before);
  }
}

TEST_CASE("characteristic classes") {
  CHECK(is_characteristic(plus_minus(), make_class({1, 1})));
  CHECK_FALSE(is_characteristic(plus_minus(), make_class({1, 0})));
  CHECK(is_characteristic(k3_form(), HomClass{std::vector<Integer>(22, Integer(0))}));
  CHECK(is_characteristic(plus_minus(), make_class({-3, 5})));
  CHECK_THROWS_AS(is_characteristic(plus_minus(), make_class({1})), DimensionMismatch);

  CHECK(characteristic_rep(plus_minus()) == make_class({1, 1}));
  CHECK(characteristic_rep(hyperbolic()) == make_class({0, 0}));
  CHECK(characteristic_rep(unit_form(1)) == make_class({1}));
  CHECK(characteristic_rep(k3_form()).is_zero());
}

TEST_CASE("characteristic_rep solves a non-diagonal odd form") {
  // H + <1> rewritten in a non-orthogonal basis: [[1,1],[1,0]] has det -1.
  const GramForm g = GramForm::from_rows({{1, 1}, {1, 0}});
  const HomClass rep = characteristic_rep(g);
  CHECK(is_characteristic(g, rep));
  CHECK(rep == make_class({0, 1}));
}

TEST_CASE("even forms have zero characteristic representative") {
  for (const GramForm& f : {hyperbolic(), e8(), negated(e8()), k3_form()}) {
    CHECK(is_even(f));
    CHECK(characteristic_rep(f).is_zero());
  }
  for (const GramForm& f : {unit_form(1), unit_form(-1), diagonal_form(1, 4)}) {
    CHECK_FALSE(is_even(f));
    CHECK_FALSE(characteristic_rep(f).is_zero());
  }
}

TEST_CASE("signature") {
  CHECK(signature(hyperbolic()) == 0);
  CHECK(signature(e8()) == 8);
  CHECK(signature(negated(e8())) == -8);
  CHECK(signature(k3_form()) == -16);
  for (int k = 1; k <= 12; ++k) CHECK(signature(diagonal_form(1, k)) == 1 - k);
  // Zero diagonal throughout exercises the 2x2 pivot.
  CHECK(signature(direct_sum(hyperbolic(), hyperbolic())) == 0);
  // Off-diagonal odd form with mixed pivots.
  CHECK(signature(GramForm::from_rows({{1, 1}, {1, 0}})) == 0);
  CHECK(signature(GramForm::from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 1}})) == 1);
}

TEST_CASE("signature is additive and odd under negation") {
  const std::vector<GramForm> pieces = {hyperbolic(), e8(), unit_form(1), unit_form(-1),
                                        diagonal_form(2, 3)};
  for (const auto& a : pieces) {
    CHECK(signature(negated(a)) == -signature(a));
    for (const auto& b : pieces) {
      const GramForm s = direct_sum(a, b);
      CHECK(s.rank() == a.rank() + b.rank());
      CHECK(signature(s) == signature(a) + signature(b));
      CHECK(s.determinant() == a.determinant() * b.determinant());
    }
  }
}

TEST_CASE("square of a q-divisible class is divisible by q^2") {
  std::mt19937_64 rng(7);
  const GramForm k3 = k3_form();
  const GramForm odd = diagonal_form(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const int q = 2 + static_cast<int>(rng() % 8);
    for (const GramForm* f : {&k3, &odd}) {
      HomClass c{std::vector<Integer>(f->rank())};
      for (auto& v : c.coords) v = static_cast<int>(rng() % 11) - 5;
      const HomClass x = c.scaled(q);
      CHECK(square(*f, x) % (q * q) == 0);
      CHECK(divisibility(x) % q == 0);
    }
  }
}

TEST_CASE("Gram validation reports the first violation") {
  SUBCASE("asymmetric") {
    try {
      GramForm::from_rows({{1, 0, 0}, {0, 1, 2}, {0, 3, 1}});
      FAIL("expected GramValidationError");
    } catch (const GramValidationError& e) {
      CHECK(e.row() == 1u);
      CHECK(e.col() == 2u);
    }
  }
  SUBCASE("ragged") {
    try {
      GramForm::from_rows({{1, 0}, {0}});
      FAIL("expected GramValidationError");
    } catch (const GramValidationError& e) {
      CHECK(e.row() == 1u);
      CHECK_FALSE(e.col().has_value());
    }
  }
  SUBCASE("not unimodular") {
    CHECK_THROWS_AS(GramForm::from_rows({{2}}), GramValidationError);
    CHECK_THROWS_AS(GramForm::from_rows({{2, 1}, {1, 2}}), GramValidationError);
    CHECK_THROWS_AS(GramForm::from_rows({{1, 0}, {0, 0}}), GramValidationError);
  }
  SUBCASE("empty") { CHECK_THROWS_AS(GramForm::from_rows({}), GramValidationError); }
}

TEST_CASE("determinant") {
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(e8().rows()) == 1);
  CHECK(determinant({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
  CHECK(determinant({{2, 1}, {1, 2}}) == 3);
}

TEST_CASE("catalog") {
  const ManifoldModel k3 = catalog("k3");
  CHECK(k3.b2() == 22);
  CHECK(k3.sigma() == -16);
  CHECK(k3.spin());
  CHECK(k3.warnings().empty());

  const ManifoldModel cp2_3 = catalog_lookup("cp2-3");
  CHECK(cp2_3.b2() == 4);
  CHECK(cp2_3.sigma() == -2);
  CHECK_FALSE(cp2_3.spin());

  const ManifoldModel s2xs2 = catalog("s2xs2");
  CHECK(s2xs2.b2() == 2);
  CHECK(s2xs2.sigma() == 0);
  CHECK(s2xs2.spin());

  CHECK(catalog("cp2").sigma() == 1);
  CHECK(catalog("cp2-k", 7).sigma() == -6);

  CHECK_THROWS_AS(catalog("enriques"), ValidationError);
  CHECK_THROWS_AS(catalog("cp2-k"), ValidationError);
  CHECK_THROWS_AS(catalog("cp2-k", 0), ValidationError);
  CHECK_THROWS_AS(catalog("k3", 2), ValidationError);
  CHECK_THROWS_AS(catalog_lookup("cp2-x"), ValidationError);
}

TEST_CASE("abstract models") {
  const ManifoldModel m = ManifoldModel::from_invariants(22, -16, true);
  CHECK_FALSE(m.has_form());
  CHECK(m.form() == nullptr);
  CHECK(m.warnings().empty());

  CHECK_THROWS_AS(ManifoldModel::from_invariants(3, 5, false), ValidationError);
  CHECK_THROWS_AS(ManifoldModel::from_invariants(4, -1, false), ValidationError);
  CHECK_THROWS_AS(ManifoldModel::from_invariants(0, 0, true), ValidationError);

  // Rohlin and 5/4 sanity checks only warn.
  CHECK(ManifoldModel::from_invariants(8, 8, true).warnings().size() == 2);
  CHECK(ManifoldModel::from_invariants(16, -16, true).warnings().size() == 1);
  CHECK(ManifoldModel::from_form(e8()).warnings().size() == 2);
  CHECK(ManifoldModel::from_invariants(8, 8, false).warnings().empty());
}

TEST_CASE("JSON ingestion") {
  const ManifoldModel g = model_from_json_text(R"({"gram": [[0,1],[1,0]]})");
  REQUIRE(g.has_form());
  CHECK(g.b2() == 2);
  CHECK(g.spin());

  const ManifoldModel a = model_from_json_text(R"({"b2": 22, "sigma": -16, "spin": true})");
  CHECK_FALSE(a.has_form());
  CHECK(a.sigma() == -16);

  const ManifoldModel big = model_from_json_text(R"({"gram": [["1", "0"], [0, "-1"]]})");
  CHECK(big.sigma() == 0);

  try {
    model_from_json_text(R"({"gram": [[1, 0], [0, 1.5]]})");
    FAIL("expected GramValidationError");
  } catch (const GramValidationError& e) {
    CHECK(e.row() == 1u);
    CHECK(e.col() == 1u);
  }
  try {
    model_from_json_text(R"({"gram": [[1, 2], [3, 1]]})");
    FAIL("expected GramValidationError");
  } catch (const GramValidationError& e) {
    CHECK(e.row() == 0u);
    CHECK(e.col() == 1u);
  }
  CHECK_THROWS_AS(model_from_json_text("{"), ValidationError);
  CHECK_THROWS_AS(model_from_json_text(R"({"b2": 3})"), ValidationError);
  CHECK_THROWS_AS(model_from_json_text(R"({"b2": 3, "sigma": 1, "spin": "no"})"), ValidationError);
  CHECK_THROWS_AS(model_from_json_text(R"({"gram": [[1]], "b2": 1})"), ValidationError);
  CHECK_THROWS_AS(model_from_file("/nonexistent/form.json"), ValidationError);
}
