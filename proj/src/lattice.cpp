#include "negsq/lattice.hpp"

#include <utility>

#include <boost/dynamic_bitset.hpp>
#include <boost/integer/common_factor_rt.hpp>

namespace negsq {

namespace {

void require_dims(const GramForm& form, const HomClass& x) {
  if (x.size() != form.rank())
    throw DimensionMismatch("class has " + std::to_string(x.size()) +
                            " coordinates but the form has rank " +
                            std::to_string(form.rank()));
}

}  // namespace

bool HomClass::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

HomClass HomClass::scaled(const Integer& k) const {
  HomClass out{coords};
  for (auto& c : out.coords) c *= k;
  return out;
}

HomClass HomClass::divided(const Integer& d) const {
  if (d == 0) throw DivisibilityViolation("division of a class by zero");
  HomClass out{coords};
  for (auto& c : out.coords) {
    if (c % d != 0)
      throw DivisibilityViolation("class is not divisible by " + d.str());
    c /= d;
  }
  return out;
}

HomClass make_class(std::initializer_list<long long> coords) {
  HomClass x;
  for (long long c : coords) x.coords.emplace_back(c);
  return x;
}

HomClass basis_vector(std::size_t rank, std::size_t index) {
  HomClass x{std::vector<Integer>(rank, Integer(0))};
  x.coords.at(index) = 1;
  return x;
}

Integer determinant(const IntMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

GramForm GramForm::from_rows(IntMatrix rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw GramValidationError("Gram matrix must have rank >= 1", {}, {});
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw GramValidationError("row " + std::to_string(i) + " has " +
                                    std::to_string(rows[i].size()) +
                                    " entries, expected " + std::to_string(n),
                                i, {});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i])
        throw GramValidationError("matrix is not symmetric at row " +
                                      std::to_string(i) + ", column " +
                                      std::to_string(j) + " (" + rows[i][j].str() +
                                      " vs " + rows[j][i].str() + ")",
                                  i, j);
    }
  }
  const Integer det = negsq::determinant(rows);
  if (det != 1 && det != -1)
    throw GramValidationError("matrix is not unimodular (determinant " + det.str() + ")",
                              {}, {});
  return GramForm(std::move(rows), det == 1 ? 1 : -1);
}

Integer pair(const GramForm& form, const HomClass& x, const HomClass& y) {
  require_dims(form, x);
  require_dims(form, y);
  Integer total = 0;
  for (std::size_t i = 0; i < form.rank(); ++i) {
    if (x.coords[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < form.rank(); ++j) row += form.at(i, j) * y.coords[j];
    total += x.coords[i] * row;
  }
  return total;
}

Integer square(const GramForm& form, const HomClass& x) { return pair(form, x, x); }

Integer divisibility(const HomClass& x) {
  Integer g = 0;
  for (const auto& c : x.coords) g = boost::integer::gcd(g, abs_of(c));
  return g;
}

bool is_characteristic(const GramForm& form, const HomClass& x) {
  require_dims(form, x);
  for (std::size_t i = 0; i < form.rank(); ++i) {
    Integer gx = 0;
    for (std::size_t j = 0; j < form.rank(); ++j) gx += form.at(i, j) * x.coords[j];
    if (mod_floor(gx - form.at(i, i), 2) != 0) return false;
  }
  return true;
}

HomClass characteristic_rep(const GramForm& form) {
  const std::size_t n = form.rank();
  // Augmented rows [G mod 2 | diag mod 2].
  std::vector<boost::dynamic_bitset<>> rows(n, boost::dynamic_bitset<>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = mod_floor(form.at(i, j), 2) == 1;
    rows[i][n] = mod_floor(form.at(i, i), 2) == 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !rows[pivot][col]) ++pivot;
    if (pivot == n)
      throw InvariantViolation("Gram matrix is singular mod 2; form is not unimodular");
    std::swap(rows[col], rows[pivot]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != col && rows[i][col]) rows[i] ^= rows[col];
  }
  HomClass x{std::vector<Integer>(n, Integer(0))};
  for (std::size_t i = 0; i < n; ++i) x.coords[i] = rows[i][n] ? 1 : 0;
  return x;
}

Integer signature(const GramForm& form) {
  using RationalMatrix = std::vector<std::vector<Rational>>;
  std::size_t n = form.rank();
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(form.at(i, j));

  // Moves index k to position 0 on both sides (symmetric permutation).
  auto bring_to_front = [&](std::size_t k, std::size_t front) {
    std::swap(m[k], m[front]);
    for (auto& row : m) std::swap(row[k], row[front]);
  };

  Integer positive = 0;
  Integer negative = 0;
  while (n > 0) {
    std::size_t diag = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i][i] != 0) {
        diag = i;
        break;
      }
    }
    if (diag != n) {
      bring_to_front(diag, 0);
      const Rational p = m[0][0];
      (p > 0 ? positive : negative) += 1;
      RationalMatrix next(n - 1, std::vector<Rational>(n - 1));
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
          next[i - 1][j - 1] = m[i][j] - m[i][0] * m[0][j] / p;
      m = std::move(next);
      n -= 1;
      continue;
    }

    // All diagonal entries vanish: pivot on a 2x2 block [[0,b],[b,0]],
    // which has one positive and one negative eigenvalue.
    std::size_t bi = n, bj = n;
    for (std::size_t i = 0; i < n && bi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (m[i][j] != 0) {
          bi = i;
          bj = j;
          break;
        }
    if (bi == n)
      throw InvariantViolation("degenerate form: zero block remains in inertia computation");
    bring_to_front(bi, 0);
    bring_to_front(bj, 1);
    positive += 1;
    negative += 1;
    // Block inverse of [[0,b],[b,0]] is [[0,1/b],[1/b,0]].
    const Rational b = m[0][1];
    RationalMatrix next(n - 2, std::vector<Rational>(n - 2));
    for (std::size_t i = 2; i < n; ++i)
      for (std::size_t j = 2; j < n; ++j)
        next[i - 2][j - 2] = m[i][j] - (m[i][0] * m[1][j] + m[i][1] * m[0][j]) / b;
    m = std::move(next);
    n -= 2;
  }
  return positive - negative;
}

bool is_even(const GramForm& form) {
  for (std::size_t i = 0; i < form.rank(); ++i)
    if (mod_floor(form.at(i, i), 2) != 0) return false;
  return true;
}

GramForm direct_sum(const GramForm& a, const GramForm& b) {
  const std::size_t n = a.rank() + b.rank();
  IntMatrix rows(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) rows[i][j] = a.at(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j)
      rows[a.rank() + i][a.rank() + j] = b.at(i, j);
  return GramForm::from_rows(std::move(rows));
}

GramForm negated(const GramForm& form) {
  IntMatrix rows = form.rows();
  for (auto& row : rows)
    for (auto& v : row) v = -v;
  return GramForm::from_rows(std::move(rows));
}

GramForm hyperbolic() { return GramForm::from_rows({{0, 1}, {1, 0}}); }

GramForm e8() {
  // Cartan matrix of E8 (Bourbaki labelling): chain 1-3-4-5-6-7-8 with 2
  // attached to 4.
  const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  IntMatrix rows(8, std::vector<Integer>(8, Integer(0)));
  for (std::size_t i = 0; i < 8; ++i) rows[i][i] = 2;
  for (const auto& e : edges) {
    rows[e[0]][e[1]] = -1;
    rows[e[1]][e[0]] = -1;
  }
  return GramForm::from_rows(std::move(rows));
}

GramForm unit_form(int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("unit form sign must be +1 or -1");
  return GramForm::from_rows({{sign}});
}

GramForm diagonal_form(int plus, int minus) {
  if (plus < 0 || minus < 0 || plus + minus == 0)
    throw ValidationError("diagonal form needs non-negative counts with positive total");
  const std::size_t n = static_cast<std::size_t>(plus + minus);
  IntMatrix rows(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = i < static_cast<std::size_t>(plus) ? 1 : -1;
  return GramForm::from_rows(std::move(rows));
}

ManifoldModel ManifoldModel::from_form(GramForm form) {
  Integer b2 = form.rank();
  Integer sigma = signature(form);
  const bool spin = is_even(form);
  return ManifoldModel(std::move(form), std::move(b2), std::move(sigma), spin);
}

ManifoldModel ManifoldModel::from_invariants(const Integer& b2, const Integer& sigma,
                                             bool spin) {
  if (b2 < 1) throw ValidationError("b2 must be at least 1, got " + b2.str());
  if (abs_of(sigma) > b2)
    throw ValidationError("|sigma| must not exceed b2 (b2=" + b2.str() +
                          ", sigma=" + sigma.str() + ")");
  if (mod_floor(b2 - sigma, 2) != 0)
    throw ValidationError("sigma and b2 must have the same parity (b2=" + b2.str() +
                          ", sigma=" + sigma.str() + ")");
  return ManifoldModel(AbstractInvariants{b2, sigma, spin}, b2, sigma, spin);
}

std::vector<std::string> ManifoldModel::warnings() const {
  std::vector<std::string> out;
  if (!spin_) return out;
  if (mod_floor(sigma_, 16) != 0)
    out.push_back("spin with sigma=" + sigma_.str() +
                  " not divisible by 16: no smooth closed spin 4-manifold has these invariants");
  if (b2_ > 0 && 4 * b2_ < 5 * abs_of(sigma_) + 8)
    out.push_back("spin with 4*b2 < 5*|sigma| + 8: violates the 5/4 inequality for smooth spin "
                  "4-manifolds");
  return out;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"k3", "K3 surface, 3H + 2(-E8)", false},
      {"cp2", "complex projective plane, <1>", false},
      {"cp2-k", "CP2 # k(-CP2), <1> + k<-1>, k >= 1", true},
      {"s2xs2", "S2 x S2, hyperbolic plane H", false},
  };
  return entries;
}

ManifoldModel catalog(const std::string& name, std::optional<long long> parameter) {
  const bool parametric = name == "cp2-k";
  if (!parametric && parameter)
    throw ValidationError("catalog entry '" + name + "' takes no parameter");
  if (name == "k3") {
    const GramForm h = hyperbolic();
    const GramForm minus_e8 = negated(e8());
    return ManifoldModel::from_form(
        direct_sum(direct_sum(direct_sum(h, h), h), direct_sum(minus_e8, minus_e8)));
  }
  if (name == "cp2") return ManifoldModel::from_form(unit_form(1));
  if (name == "s2xs2") return ManifoldModel::from_form(hyperbolic());
  if (parametric) {
    if (!parameter) throw ValidationError("catalog entry 'cp2-k' needs a parameter k >= 1");
    if (*parameter < 1 || *parameter > 100000)
      throw ValidationError("cp2-k parameter must be in 1..100000, got " +
                            std::to_string(*parameter));
    return ManifoldModel::from_form(diagonal_form(1, static_cast<int>(*parameter)));
  }
  throw ValidationError("unknown catalog entry '" + name + "'");
}

ManifoldModel catalog_lookup(const std::string& spelled) {
  const std::string prefix = "cp2-";
  if (spelled.rfind(prefix, 0) == 0 && spelled != "cp2-k") {
    const std::string tail = spelled.substr(prefix.size());
    const Integer k = parse_integer(tail);
    return catalog("cp2-k", to_int64(k, "cp2-k parameter"));
  }
  return catalog(spelled);
}

}  // namespace negsq
