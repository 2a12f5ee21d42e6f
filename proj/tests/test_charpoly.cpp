#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "distpoly/charpoly.hpp"
#include "distpoly/distance.hpp"
#include "distpoly/errors.hpp"
#include "distpoly/graph.hpp"
#include "distpoly/tree_enum.hpp"
#include "oracles/oracles.hpp"

using namespace distpoly;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<Dyadic> dyadics(std::initializer_list<long> xs) {
  std::vector<Dyadic> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Characteristic polynomial of the Heawood distance matrix, ascending.
const std::vector<BigInt> kHeawoodCharpoly =
    ints({-331776, 1892352, -3885056, 2795520, 973056, -1885184, -118272, 573696, 104720, -75936, -36456,
          -6328, -441, 0, 1});

const std::vector<long> kHeawoodD = {81, 924, 3794, 5460, 3801, 14728, 1848, 17928, 6545, 9492, 9114, 3164, 441};

SquareMatrix random_matrix(std::size_t n, long lo, long hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(lo, hi);
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  }
  return m;
}

std::vector<std::vector<BigInt>> shifted(const SquareMatrix& a, long t) {
  std::vector<std::vector<BigInt>> m(a.size(), std::vector<BigInt>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = (i == j ? t : 0) - a(i, j);
  }
  return m;
}

}  // namespace

TEST_CASE("charpoly examples") {
  const DistanceMatrix p3 = distance_matrix(path_graph(3));
  // det(xI - D(P3)) = x^3 - 6x - 4 by cofactor expansion.
  CHECK(charpoly(p3).coeffs == ints({-4, -6, 0, 1}));
  CHECK(charpoly(SquareMatrix(3)).coeffs == ints({0, 0, 0, 1}));
  CHECK(charpoly(SquareMatrix(0)).coeffs == ints({1}));
  CHECK(charpoly(distance_matrix(heawood())).coeffs == kHeawoodCharpoly);
}

TEST_CASE("det_at examples") {
  const DistanceMatrix p3 = distance_matrix(path_graph(3));
  CHECK(det_at(p3, 0) == -4);
  CHECK(det_at(SquareMatrix(3), 2) == 8);
  CHECK(determinant({}) == 1);
  CHECK(determinant({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}) == -1);  // needs a row swap
  CHECK(determinant({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}) == 0);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const SquareMatrix a = random_matrix(n, -4, 4, rng);
    const long t = trial % 5 - 2;
    CHECK(det_at(a, t) == oracle::cofactor_determinant(shifted(a, t)));
  }
}

TEST_CASE("Berkowitz agrees with Bareiss on general integer matrices") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 11;
    const SquareMatrix a = random_matrix(n, -9, 9, rng);
    const CharPoly p = charpoly(a);
    REQUIRE(p.coeffs.size() == n + 1);
    CHECK(p.coeffs.back() == 1);
    for (long t = -1; t <= static_cast<long>(n); ++t) CHECK(p.evaluate(t) == det_at(a, t));
  }
}

TEST_CASE("oracle equivalence on trees: n+1 interpolation points certify the polynomial") {
  auto certify = [](const Graph& g) {
    const DistanceMatrix d = distance_matrix(g);
    const CharPoly p = charpoly(d);
    REQUIRE(p.degree() == g.order());
    CHECK(p.coeffs.back() == 1);
    CHECK(p.coeffs[g.order() - 1] == 0);  // trace zero
    for (long t = 0; t <= static_cast<long>(g.order()); ++t) REQUIRE(p.evaluate(t) == det_at(d, t));
  };
  for (std::size_t n = 1; n <= 10; ++n) enumerate_trees(n, [&](const CanonicalTree& t) { certify(to_graph(t)); });
  std::mt19937_64 rng(23);
  for (std::size_t n = 11; n <= 14; ++n) {
    for (int i = 0; i < 100; ++i) certify(oracle::random_tree(n, rng));
  }
}

TEST_CASE("delta and normalized sequences") {
  const CharPoly p3 = charpoly(distance_matrix(path_graph(3)));
  const DeltaSeq delta = delta_seq(p3);
  CHECK(delta.values == ints({4, 6, 0, -1}));
  CHECK(delta.values[0] == 2 * 2);  // (n-1) 2^(n-2)
  CHECK(normalized_seq(delta).values == dyadics({2, 6}));
  CHECK(normalized_seq(delta).all_integers());

  const DeltaSeq h = delta_seq(charpoly(distance_matrix(heawood())));
  CHECK(h.values[0] == -331776);
  std::vector<Dyadic> expected;
  for (long x : kHeawoodD) expected.emplace_back(x);
  CHECK(normalized_seq(h).values == expected);

  for (std::size_t n = 3; n <= 20; ++n) {
    const auto d = normalized_seq(delta_seq(charpoly(distance_matrix(star_graph(n)))));
    CHECK(d.values[0] == Dyadic(static_cast<long>(n - 1)));
  }

  CHECK_THROWS_AS(normalized_seq(delta_seq(charpoly(distance_matrix(path_graph(2))))), DomainError);
  // Non-tree inputs may produce proper fractions. D(C5) = 2J - 2I - A has spectrum
  // {6} and -2 - 2cos(2 pi k/5), so det D = 6 and d_0 = 6/8.
  const auto c5 = normalized_seq(delta_seq(charpoly(distance_matrix(cycle_graph(5)))));
  CHECK(c5.values[0] == Dyadic(BigInt(3), 2));
  CHECK_FALSE(c5.all_integers());
}

TEST_CASE("tree identities over every tree up to order 14") {
  for (std::size_t n = 3; n <= 14; ++n) {
    enumerate_trees(n, [&](const CanonicalTree& t) {
      const Graph g = to_graph(t);
      const DistanceMatrix dm = distance_matrix(g);
      const DeltaSeq delta = delta_seq(charpoly(dm));
      const NormalizedSeq d = normalized_seq(delta);
      const long ni = static_cast<long>(n);
      // Graham-Pollak: |delta_0| = (n-1) 2^(n-2)
      REQUIRE(abs(delta.values[0]) == BigInt(ni - 1) << (n - 2));
      REQUIRE(d.values[0] == Dyadic(ni - 1));
      REQUIRE(d.values[1] == Dyadic(2 * ni * (ni - 1) - 2 * static_cast<long>(count_p3(g)) - 4));
      REQUIRE(d.all_integers());
      for (std::size_t k = 0; k + 2 <= n; ++k) {
        REQUIRE(mpz_divisible_2exp_p(delta.values[k].get_mpz_t(), n - k - 2));
        REQUIRE(sgn(delta.values[k]) == (n % 2 == 0 ? -1 : 1));  // (-1)^(n-1) delta_k > 0
      }
      if (n <= 12) {
        REQUIRE(Dyadic(2) * d.values[n - 2] == Dyadic(trace_power(dm, 2)));
        REQUIRE(Dyadic(6) * d.values[n - 3] == Dyadic(trace_power(dm, 3)));
      }
    });
  }
}

TEST_CASE("scaled polynomial") {
  CHECK(scaled_poly(distance_matrix(path_graph(3))) == dyadics({2, 6, 0, -4}));
  for (std::size_t n = 3; n <= 10; ++n) {
    enumerate_trees(n, [&](const CanonicalTree& t) {
      const DistanceMatrix dm = distance_matrix(to_graph(t));
      const auto ell = scaled_poly(dm);
      const auto d = normalized_seq(delta_seq(charpoly(dm)));
      REQUIRE(ell.size() == n + 1);
      CHECK(ell[n] == Dyadic(-4));
      CHECK(ell[n - 1] == Dyadic(0));
      CHECK(std::vector<Dyadic>(ell.begin(), ell.begin() + static_cast<long>(n - 1)) == d.values);
    });
  }
  CHECK_THROWS_AS(scaled_poly(distance_matrix(heawood())), DomainError);
  CHECK_THROWS_AS(scaled_poly(distance_matrix(path_graph(2))), DomainError);
}

TEST_CASE("trace powers") {
  const DistanceMatrix p3 = distance_matrix(path_graph(3));
  CHECK(trace_power(p3, 2) == 12);
  CHECK(normalized_seq(delta_seq(charpoly(p3))).values[1] == Dyadic(6));
  CHECK(trace_power(SquareMatrix(3), 3) == 0);
  CHECK_THROWS_AS(trace_power(p3, 4), DomainError);
  CHECK_THROWS_AS(trace_power(p3, 1), DomainError);

  // Against an explicit cube, including matrices large enough for the wide path.
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const long bound = trial % 3 == 0 ? 3'000'000'000L : 50;
    const SquareMatrix a = random_matrix(n, -bound, bound, rng);
    BigInt tr2 = 0, tr3 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        tr2 += BigInt(a(i, j)) * a(j, i);
        for (std::size_t k = 0; k < n; ++k) tr3 += BigInt(a(i, j)) * a(j, k) * a(k, i);
      }
    }
    CHECK(trace_power(a, 2) == tr2);
    CHECK(trace_power(a, 3) == tr3);
  }
}
