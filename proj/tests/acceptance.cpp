// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "negsq/admissible.hpp"
#include "negsq/bounds.hpp"
#include "negsq/cover.hpp"
#include "negsq/errors.hpp"
#include "negsq/lattice.hpp"

using namespace negsq;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t cases = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string str(const Rational& r) { return to_string(r); }

// 1. gsig_bound(2, 22, -16, g) = 76 + 4g.
Outcome k3_divisible_by_two() {
  Outcome o;
  for (long long g = 0; g <= 10; ++g) {
    const Rational v = gsig_bound(PrimePower(2), 22, -16, g).require_value();
    o.expect(v == Rational(76 + 4 * g), "g=" + std::to_string(g) + " gave " + str(v));
  }
  return o;
}

// 2. gsig_uniform_odd_bound(22, -16, g) = 171/2 + (9/2) g.
Outcome k3_odd_uniform() {
  Outcome o;
  for (long long g = 0; g <= 10; ++g) {
    const Rational v = gsig_uniform_odd_bound(22, -16, g).require_value();
    const Rational want = make_rational(171, 2) + make_rational(9, 2) * Rational(g);
    o.expect(v == want, "g=" + std::to_string(g) + " gave " + str(v));
  }
  return o;
}

// 3. Characteristic sphere sets in CP2 # k(-CP2).
Outcome characteristic_spheres() {
  Outcome o;
  auto run = [](long long k) {
    return enumerate_admissible(Scenario{catalog("cp2-k", k), 0, CharacteristicKind{true}});
  };
  o.expect(run(2).candidates == std::vector<Integer>{1}, "cp2-2 is not {1}");
  o.expect(run(3).candidates == std::vector<Integer>{2, 18}, "cp2-3 is not {2, 18}");
  for (long long k = 2; k <= 20; ++k) {
    for (const auto& n : run(k).candidates) {
      o.expect(n <= 9 * (k - 1), "k=" + std::to_string(k) + ": N=" + n.str() + " above 9(k-1)");
      o.expect(mod_floor(n - (k - 1), 16) == 0,
               "k=" + std::to_string(k) + ": N=" + n.str() + " not = k-1 mod 16");
    }
  }
  return o;
}

template <typename F>
void for_each_grid_point(F&& f) {
  for (long long b2 = 1; b2 <= 30; ++b2)
    for (long long sigma = -b2; sigma <= b2; sigma += 2)
      for (long long g = 0; g <= 5; ++g) f(b2, sigma, g);
}

// 4. oracle_max_char = max(0, 4 b2 - 5 sigma - 8 + 8g).
Outcome oracle_equivalence() {
  Outcome o;
  for_each_grid_point([&](long long b2, long long sigma, long long g) {
    const Integer got = oracle_max_char(b2, sigma, g);
    const long long want = std::max<long long>(0, 4 * b2 - 5 * sigma - 8 + 8 * g);
    o.expect(got == want, "(" + std::to_string(b2) + "," + std::to_string(sigma) + "," +
                              std::to_string(g) + "): oracle " + got.str() + " vs " +
                              std::to_string(want));
  });
  return o;
}

// 5. conjectural_bound(furuta_conjecture_params) = char_bound.
Outcome conjecture_specialization() {
  Outcome o;
  for_each_grid_point([&](long long b2, long long sigma, long long g) {
    const Rational conj =
        conjectural_bound(furuta_conjecture_params(b2, sigma), g).require_value();
    const Rational chr = char_bound(b2, sigma, g).require_value();
    o.expect(conj == chr, "(" + std::to_string(b2) + "," + std::to_string(sigma) + "," +
                              std::to_string(g) + "): " + str(conj) + " vs " + str(chr));
  });
  return o;
}

// 6. Catalog signatures and parity.
Outcome catalog_signatures() {
  Outcome o;
  const GramForm k3 = *catalog("k3").form();
  o.expect(signature(k3) == -16, "signature(K3) != -16");
  o.expect(k3.rank() == 22, "rank(K3) != 22");
  o.expect(is_even(k3), "K3 form not even");
  for (int k = 1; k <= 20; ++k) {
    const GramForm f = *catalog("cp2-k", k).form();
    o.expect(signature(f) == 1 - k, "signature(<1>+" + std::to_string(k) + "<-1>) wrong");
    o.expect(!is_even(f), "<1>+k<-1> reported even");
  }
  o.expect(signature(hyperbolic()) == 0, "signature(H) != 0");
  o.expect(is_even(hyperbolic()), "H not even");
  return o;
}

// 7. Exactly one mod-2 characteristic class, equal to characteristic_rep, for
// every direct sum of catalog summands of rank <= 10.
Outcome characteristic_uniqueness() {
  Outcome o;
  const std::vector<GramForm> summands = {unit_form(1), unit_form(-1), hyperbolic(), e8(),
                                          negated(e8())};
  std::vector<GramForm> forms;
  // Multisets of summands in non-decreasing index order.
  std::function<void(std::size_t, std::optional<GramForm>)> build =
      [&](std::size_t first, std::optional<GramForm> acc) {
        if (acc) forms.push_back(*acc);
        for (std::size_t i = first; i < summands.size(); ++i) {
          const std::size_t rank = (acc ? acc->rank() : 0) + summands[i].rank();
          if (rank > 10) continue;
          build(i, acc ? direct_sum(*acc, summands[i]) : summands[i]);
        }
      };
  build(0, std::nullopt);

  for (const GramForm& f : forms) {
    const std::size_t n = f.rank();
    std::vector<std::int64_t> g(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g[i * n + j] = f.at(i, j).convert_to<std::int64_t>();

    std::vector<std::uint32_t> hits;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        std::int64_t gx = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (mask >> j & 1u) gx += g[i * n + j];
        ok = ((gx - g[i * n + i]) % 2 + 2) % 2 == 0;
      }
      if (ok) hits.push_back(mask);
    }
    const HomClass rep = characteristic_rep(f);
    std::uint32_t rep_mask = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (rep.coords[j] == 1) rep_mask |= 1u << j;
    o.expect(hits.size() == 1, "rank " + std::to_string(n) + " form has " +
                                   std::to_string(hits.size()) + " characteristic 0/1 vectors");
    o.expect(!hits.empty() && hits.front() == rep_mask, "characteristic_rep disagrees with scan");
    o.expect(is_characteristic(f, rep), "characteristic_rep fails is_characteristic");
  }
  return o;
}

// 8. cover_sigma integrality on q-divisible classes, and the failure case.
Outcome cover_integrality() {
  Outcome o;
  std::mt19937_64 rng(1000);
  const std::int64_t qs[] = {2, 3, 4, 5, 7, 8, 9};
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t q = qs[rng() % 7];
    const long long m = 1 + static_cast<long long>(rng() % 100);
    const long long sigma = static_cast<long long>(rng() % 41) - 20;
    try {
      cover_sigma(PrimePower(q), sigma, -q * q * m);
      o.expect(true, "");
    } catch (const NonIntegerSignature&) {
      o.expect(false, "q=" + std::to_string(q) + ", m=" + std::to_string(m) + " raised");
    }
  }
  bool raised = false;
  try {
    cover_sigma(PrimePower(3), 0, -3);
  } catch (const NonIntegerSignature&) {
    raised = true;
  }
  o.expect(raised, "(q=3, sigma=0, B^2=-3) did not raise NonIntegerSignature");
  return o;
}

// 9. Uniform odd bound dominates; odd-q bound strictly decreases toward
// 2(b2 - sigma) + 4g along the q sweep.
Outcome dominance_and_limit() {
  Outcome o;
  const std::int64_t qs[] = {3, 5, 7, 9, 11, 13, 25, 27, 49};
  std::vector<std::array<long long, 3>> grid;
  for (long long b2 = 1; grid.size() < 50; ++b2)
    for (long long sigma = -b2; sigma < b2 && grid.size() < 50; sigma += 2)
      grid.push_back({b2, sigma, static_cast<long long>(grid.size() % 4)});

  for (const auto& [b2, sigma, g] : grid) {
    const std::string at = "(" + std::to_string(b2) + "," + std::to_string(sigma) + "," +
                           std::to_string(g) + ")";
    const Rational uniform = gsig_uniform_odd_bound(b2, sigma, g).require_value();
    const Rational limit = Rational(2 * (b2 - sigma) + 4 * g);
    std::optional<Rational> previous;
    for (std::int64_t q : qs) {
      const Rational v = gsig_bound(PrimePower(q), b2, sigma, g).require_value();
      o.expect(uniform >= v, at + " q=" + std::to_string(q) + " exceeds uniform bound");
      o.expect(v > limit, at + " q=" + std::to_string(q) + " not above the q=2 value");
      if (previous) o.expect(v < *previous, at + " not strictly decreasing at q=" + std::to_string(q));
      previous = v;
    }
  }
  return o;
}

// 10. Lemma and general-d genus formulas agree at d = 2.
Outcome genus_formula() {
  Outcome o;
  for (long long n = 1; n <= 100; ++n) {
    for (long long g = 0; g <= 5; ++g) {
      const Integer lemma = multiple_genus(2, n, g);
      o.expect(lemma == n - 1 + 2 * g, "d=2 N=" + std::to_string(n) + " g=" + std::to_string(g));
      const long long d = 2;
      const Rational general = make_rational(d * (d - 1) * n, 2) + 1 - d + d * g;
      o.expect(Rational(lemma) == general, "general-d formula disagrees at d=2");
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"AC1", "K3 divisible-by-2 bound 76 + 4g", k3_divisible_by_two},
      {"AC2", "K3 odd uniform bound 171/2 + 9g/2", k3_odd_uniform},
      {"AC3", "characteristic sphere sets in CP2 # k(-CP2)", characteristic_spheres},
      {"AC4", "brute-force oracle equals characteristic bound", oracle_equivalence},
      {"AC5", "conjecture specialization equals characteristic bound", conjecture_specialization},
      {"AC6", "catalog signatures and parity", catalog_signatures},
      {"AC7", "unique characteristic 0/1 class up to rank 10", characteristic_uniqueness},
      {"AC8", "cover signature integrality", cover_integrality},
      {"AC9", "odd-q dominance and limit", dominance_and_limit},
      {"AC10", "genus formula coherence", genus_formula},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  ["
              << o.cases << " checks, " << ms << " ms]";
    if (!o.pass) std::cout << "  -- " << o.detail;
    std::cout << "\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << "\n";
  return failed == 0 ? 0 : 1;
}
