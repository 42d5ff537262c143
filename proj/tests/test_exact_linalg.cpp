#include <doctest.h>

#include <map>
#include <random>
#include <tuple>

#include "g2lyap/exact_linalg.hpp"
#include "g2lyap/monodromy_dataset.hpp"

using namespace g2lyap;

namespace {

ExactMatrix random_int_matrix(std::mt19937& rng, int n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rational(d(rng));
  return m;
}

ExactMatrix random_invertible(std::mt19937& rng, int n) {
  for (;;) {
    ExactMatrix m = random_int_matrix(rng, n);
    if (m.determinant() != 0) return m;
  }
}

std::vector<ExactMatrix> g2_generators() {
  const CocycleGenerators ds = load_builtin("g2-elliptic-surface");
  std::vector<ExactMatrix> out;
  for (const auto& [label, m] : ds.generators) out.push_back(m);
  return out;
}

// The unique primitive invariant symmetric form of the rank-7 dataset.
const ExactMatrix kExpectedQ = {{0, 0, 0, 4, 0, 0, 0},   {0, 0, -4, 0, 0, 0, 0},
                                {0, -4, 0, 0, 0, 0, 0},  {4, 0, 0, 0, 0, 0, 0},
                                {0, 0, 0, 0, -2, 2, 4},  {0, 0, 0, 0, 2, -1, -2},
                                {0, 0, 0, 0, 4, -2, -2}};

}  // namespace

TEST_SUITE_BEGIN("exact-linalg");

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("-4/8") == make_rational(-1, 2));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(rational_to_string(make_rational(10, -4)) == "-5/2");
  CHECK(rational_to_double(make_rational(1, 2)) == doctest::Approx(0.5));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("determinant and inverse") {
  const ExactMatrix m = {{2, 1, 0}, {1, 3, 1}, {0, 1, 2}};
  CHECK(m.determinant() == Rational(8));
  CHECK(m * m.inverse() == ExactMatrix::identity(3));
  const ExactMatrix singular = {{1, 2}, {2, 4}};
  CHECK(singular.determinant() == 0);
  CHECK_THROWS_AS(singular.inverse(), std::domain_error);
  CHECK_THROWS_AS(ExactMatrix(2, 3).determinant(), std::logic_error);
}

TEST_CASE("rank and nullspace on a known system") {
  // rows 2 and 3 are multiples of row 1 plus row 2
  const ExactMatrix m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const RankNullspace rn = rank_and_nullspace(m);
  CHECK(rn.rank == 2);
  REQUIRE(rn.nullspace_basis.size() == 1);
  for (const auto& v : rn.nullspace_basis) {
    for (int i = 0; i < 3; ++i) {
      Rational acc(0);
      for (int j = 0; j < 3; ++j) acc += m(i, j) * v[j];
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("rank-nullity over random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const ExactMatrix m = random_int_matrix(rng, n);
    const RankNullspace rn = rank_and_nullspace(m);
    CHECK(rn.rank + static_cast<int>(rn.nullspace_basis.size()) == n);
    for (const auto& v : rn.nullspace_basis) {
      for (int i = 0; i < n; ++i) {
        Rational acc(0);
        for (int j = 0; j < n; ++j) acc += m(i, j) * v[j];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("signature basics") {
  const SymmetricBilinearForm diag({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}});
  CHECK(signature(diag) == Signature{1, 1, 1});
  // a form with no nonzero diagonal at the start
  const SymmetricBilinearForm offdiag({{0, 1}, {1, 0}});
  CHECK(signature(offdiag) == Signature{1, 0, 1});
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 3;
    ExactMatrix q = random_int_matrix(rng, n);
    q = q + q.transpose();  // symmetrize
    const ExactMatrix a = random_invertible(rng, n);
    const Signature s1 = signature(SymmetricBilinearForm(q));
    const Signature s2 = signature(SymmetricBilinearForm(a.transpose() * q * a));
    CHECK(s1 == s2);
  }
}

TEST_CASE("rank-7 generators admit exactly one symmetric invariant form") {
  const auto gens = g2_generators();
  const auto basis = invariant_form_space(gens, FormSymmetry::symmetric);
  REQUIRE(basis.size() == 1);
  CHECK(basis.front() == kExpectedQ);
  CHECK(signature(SymmetricBilinearForm(basis.front())) == Signature{4, 0, 3});
  CHECK(invariant_form_space(gens, FormSymmetry::antisymmetric).empty());
  for (const auto& m : gens) CHECK(m.transpose() * basis.front() * m == basis.front());
}

TEST_CASE("rank-7 generators admit exactly one alternating 3-form") {
  const auto gens = g2_generators();
  const auto basis = invariant_trilinear_space(gens);
  REQUIRE(basis.size() == 1);
  const AlternatingTrilinearForm& phi = basis.front();
  CHECK(phi.dim() == 7);

  const std::map<std::tuple<int, int, int>, long> expected = {
      {{0, 2, 4}, 2}, {{0, 2, 5}, -2}, {{0, 2, 6}, -6}, {{0, 3, 4}, 2},
      {{0, 3, 6}, -2}, {{1, 2, 4}, 2}, {{1, 2, 6}, -2}, {{1, 3, 4}, 6},
      {{1, 3, 5}, -2}, {{1, 3, 6}, -2}, {{4, 5, 6}, 1}};
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k) {
        const auto it = expected.find({i, j, k});
        const Rational want = it == expected.end() ? Rational(0) : Rational(it->second);
        CHECK(phi.coefficient(i, j, k) == want);
      }
}

TEST_CASE("trilinear form accessors antisymmetrize") {
  const auto basis = invariant_trilinear_space(g2_generators());
  REQUIRE(basis.size() == 1);
  const auto& phi = basis.front();
  CHECK(phi.coefficient(2, 0, 4) == -phi.coefficient(0, 2, 4));
  CHECK(phi.coefficient(4, 2, 0) == -phi.coefficient(0, 2, 4));
  CHECK(phi.coefficient(2, 2, 4) == 0);

  std::vector<Rational> e0(7, Rational(0)), e2(7, Rational(0)), e4(7, Rational(0));
  e0[0] = 1;
  e2[2] = 1;
  e4[4] = 1;
  CHECK(phi.evaluate(e0, e2, e4) == phi.coefficient(0, 2, 4));
  CHECK(phi.evaluate(e2, e0, e4) == -phi.coefficient(0, 2, 4));
}

TEST_CASE("sl2 pair preserves only the symplectic form") {
  const CocycleGenerators ds = load_builtin("sl2-sanity");
  std::vector<ExactMatrix> gens;
  for (const auto& [label, m] : ds.generators) gens.push_back(m);
  const auto sym = invariant_form_space(gens, FormSymmetry::symmetric);
  CHECK(sym.empty());
  const auto alt = invariant_form_space(gens, FormSymmetry::antisymmetric);
  REQUIRE(alt.size() == 1);
  const ExactMatrix expected = {{0, 1}, {-1, 0}};
  CHECK(alt.front() == expected);
}

TEST_CASE("normalize_primitive scales to primitive integers") {
  const std::vector<Rational> v = {make_rational(-2, 3), make_rational(4, 3), Rational(0)};
  const std::vector<Rational> n = normalize_primitive(v);
  // first nonzero entry positive, gcd of entries 1
  CHECK(n == std::vector<Rational>{Rational(1), Rational(-2), Rational(0)});
}

TEST_SUITE_END();
