#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "brieskorn/errors.hpp"
#include "brieskorn/plumbing.hpp"

using namespace brieskorn;

namespace {

IntersectionMatrix matrix(const std::vector<std::vector<long>>& rows) {
  IntersectionMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Cofactor-expansion determinant, the slow oracle.
mpz_class naive_det(const IntersectionMatrix& m, std::vector<std::size_t> cols,
                    std::size_t row) {
  if (cols.empty()) return 1;
  mpz_class acc = 0;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<std::size_t> rest;
    for (std::size_t x = 0; x < cols.size(); ++x)
      if (x != k) rest.push_back(cols[x]);
    acc += sign * m.at(row, cols[k]) * naive_det(m, rest, row + 1);
    sign = -sign;
  }
  return acc;
}

mpz_class naive_det(const IntersectionMatrix& m) {
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return naive_det(m, cols, 0);
}

IntersectionMatrix random_symmetric(std::mt19937& rng, std::size_t n, int span) {
  std::uniform_int_distribution<int> dist(-span, span);
  IntersectionMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m.at(i, j) = dist(rng);
      m.at(j, i) = m.at(i, j);
    }
  return m;
}

PlumbingGraph random_tree(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> euler(-5, -2);
  std::vector<PlumbingVertex> vs;
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, std::int64_t>> es;
  for (std::size_t i = 0; i < n; ++i)
    vs.push_back({static_cast<std::int64_t>(i), 0, euler(rng)});
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    es.push_back({{static_cast<std::int64_t>(parent(rng)), static_cast<std::int64_t>(i)}, 1});
  }
  return PlumbingGraph(std::move(vs), std::move(es));
}

}  // namespace

TEST_CASE("intersection matrices of the basic graphs") {
  const PlumbingGraph single = PlumbingGraph::parse("v 0 genus=0 e=-2\n");
  const IntersectionMatrix m1 = intersection_matrix(single);
  CHECK(m1.size() == 1);
  CHECK(m1.at(0, 0) == -2);

  const IntersectionMatrix a3 = intersection_matrix(PlumbingGraph::named("A3"));
  CHECK(a3 == matrix({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}));

  const IntersectionMatrix e8 = intersection_matrix(PlumbingGraph::named("E8"));
  CHECK(e8.size() == 8);
  CHECK(determinant(e8) == 1);
  CHECK(is_negative_definite(e8));
  CHECK(matrix_signature(e8) == -8);
}

TEST_CASE("graph parsing") {
  const std::string text =
      "# a weighted path\n"
      "v 0 genus=0 e=-2\n"
      "v 1 genus=0 e=-3\n"
      "e 0 1 w=2\n";
  const PlumbingGraph g = PlumbingGraph::parse(text);
  CHECK(intersection_matrix(g) == matrix({{-2, 2}, {2, -3}}));

  CHECK_THROWS_AS(PlumbingGraph::parse(""), input_error);
  CHECK_THROWS_AS(PlumbingGraph::parse("v 0 genus=0 e=-2\nv 0 genus=0 e=-2\n"),
                  input_error);
  CHECK_THROWS_AS(PlumbingGraph::parse("v 0 genus=0 e=-2\ne 0 0\n"), input_error);
  CHECK_THROWS_AS(PlumbingGraph::parse("v 0 genus=0 e=-2\ne 0 7\n"), input_error);
  CHECK_THROWS_AS(PlumbingGraph::parse("w 0\n"), input_error);
  CHECK_THROWS_AS(PlumbingGraph::parse("v 0 genus=0 e=-2 extra\n"), input_error);

  // parallel edges merge by summing weights
  const PlumbingGraph merged = PlumbingGraph::parse(
      "v 0 genus=0 e=-2\nv 1 genus=0 e=-2\ne 0 1 w=1\ne 1 0 w=2\n");
  CHECK(intersection_matrix(merged) == matrix({{-2, 3}, {3, -2}}));
}

TEST_CASE("named graphs") {
  CHECK(PlumbingGraph::named("A1").vertices().size() == 1);
  CHECK(PlumbingGraph::named("A12").vertices().size() == 12);
  CHECK(PlumbingGraph::named("E8").vertices().size() == 8);
  CHECK_THROWS_AS(PlumbingGraph::named("E7"), input_error);
  CHECK_THROWS_AS(PlumbingGraph::named("A0"), input_error);
  CHECK_THROWS_AS(PlumbingGraph::named("Axy"), input_error);
}

TEST_CASE("boundary homology anchors") {
  const SmithForm e8 = boundary_homology(PlumbingGraph::named("E8"));
  CHECK(e8.is_trivial_cokernel());
  CHECK(e8.free_rank == 0);

  for (std::int64_t d = 2; d <= 12; ++d) {
    const SmithForm h = boundary_homology(PlumbingGraph::named("A" + std::to_string(d - 1)));
    REQUIRE(h.cokernel.size() == 1);
    CHECK(h.cokernel[0] == d);
    CHECK(h.free_rank == 0);
  }

  const SmithForm loop = boundary_homology(PlumbingGraph::parse("v 0 genus=0 e=0\n"));
  REQUIRE(loop.cokernel.size() == 1);
  CHECK(loop.cokernel[0] == 0);
  CHECK(loop.free_rank == 1);
}

TEST_CASE("boundary homology rejects cycles and positive genus") {
  const std::string cycle =
      "v 0 genus=0 e=-2\nv 1 genus=0 e=-2\nv 2 genus=0 e=-2\n"
      "e 0 1\ne 1 2\ne 2 0\n";
  CHECK_THROWS_AS(boundary_homology(PlumbingGraph::parse(cycle)), input_error);
  CHECK_THROWS_AS(boundary_homology(PlumbingGraph::parse("v 0 genus=1 e=-2\n")),
                  input_error);
  const std::string forest = "v 0 genus=0 e=-2\nv 1 genus=0 e=-2\n";
  CHECK_THROWS_AS(boundary_homology(PlumbingGraph::parse(forest)), input_error);
}

TEST_CASE("negative definiteness") {
  CHECK(is_negative_definite(matrix({{-2}})));
  CHECK(!is_negative_definite(matrix({{0}})));
  CHECK(!is_negative_definite(matrix({{2}})));
  CHECK(is_negative_definite(matrix({{-2, 1}, {1, -2}})));
  CHECK(!is_negative_definite(matrix({{-1, 2}, {2, -1}})));
  CHECK(!is_negative_definite(matrix({{1, 0}, {0, 1}})));
  CHECK(is_negative_definite(matrix({{-1, 0}, {0, -1}})));
}

TEST_CASE("exact matrix signatures") {
  CHECK(matrix_signature(matrix({{0, 1}, {1, 0}})) == 0);
  CHECK(matrix_signature(matrix({{1, 0}, {0, -1}})) == 0);
  CHECK(matrix_signature(matrix({{2, 0, 0}, {0, 3, 0}, {0, 0, -5}})) == 1);
  CHECK(matrix_signature(matrix({{0, 0}, {0, 0}})) == 0);
  for (std::int64_t k = 1; k <= 9; ++k) {
    const IntersectionMatrix ak =
        intersection_matrix(PlumbingGraph::named("A" + std::to_string(k)));
    CHECK(matrix_signature(ak) == -k);
  }
}

TEST_CASE("determinant and smith form against the naive oracle") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const IntersectionMatrix m = random_symmetric(rng, n, trial % 3 ? 5 : 40);
    const mpz_class det = determinant(m);
    CHECK(det == naive_det(m));

    const SmithForm snf = smith_normal_form(m);
    mpz_class prod = 1;
    for (const mpz_class& d : snf.invariant_factors) prod *= d;
    if (det == 0) {
      CHECK(snf.free_rank > 0);
    } else {
      CHECK(snf.free_rank == 0);
      CHECK(prod == abs(det));
    }
    for (std::size_t i = 0; i + 1 < snf.invariant_factors.size(); ++i)
      CHECK(snf.invariant_factors[i + 1] % snf.invariant_factors[i] == 0);

    // signature parity and bounds, and sign flip under negation
    const std::int64_t sig = matrix_signature(m);
    const std::int64_t rank = static_cast<std::int64_t>(snf.rank);
    CHECK(std::abs(sig) <= rank);
    CHECK((sig - rank) % 2 == 0);

    IntersectionMatrix neg(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) neg.at(i, j) = -m.at(i, j);
    CHECK(matrix_signature(neg) == -sig);

    // Jacobi: with all leading principal minors nonzero, the signature is
    // the count of sign agreements minus changes along 1, D_1, ..., D_n.
    bool minors_nonzero = true;
    std::vector<int> signs{1};
    for (std::size_t k = 1; k <= n && minors_nonzero; ++k) {
      IntersectionMatrix lead(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
      const mpz_class dk = determinant(lead);
      if (dk == 0)
        minors_nonzero = false;
      else
        signs.push_back(sgn(dk));
    }
    if (minors_nonzero) {
      std::int64_t jacobi = 0;
      for (std::size_t i = 1; i < signs.size(); ++i)
        jacobi += (signs[i] == signs[i - 1]) ? 1 : -1;
      CHECK(jacobi == sig);
    }
  }
}

TEST_CASE("specific smith forms") {
  const SmithForm diag = smith_normal_form(matrix({{2, 0}, {0, 3}}));
  REQUIRE(diag.invariant_factors.size() == 2);
  CHECK(diag.invariant_factors[0] == 1);
  CHECK(diag.invariant_factors[1] == 6);

  const SmithForm zero = smith_normal_form(matrix({{0, 0}, {0, 0}}));
  CHECK(zero.rank == 0);
  CHECK(zero.free_rank == 2);
  REQUIRE(zero.cokernel.size() == 2);
  CHECK(zero.cokernel[0] == 0);
}

TEST_CASE("euler characteristic of plumbing boundaries is zero") {
  CHECK(euler_characteristic_boundary(PlumbingGraph::named("E8")) == 0);
  CHECK(euler_characteristic_boundary(PlumbingGraph::named("A3")) == 0);
  CHECK(euler_characteristic_boundary(PlumbingGraph::parse("v 0 genus=0 e=0\n")) == 0);

  // degenerate star (affine D4 shape): free rank 1, still zero
  const std::string star =
      "v 0 genus=0 e=-2\nv 1 genus=0 e=-2\nv 2 genus=0 e=-2\n"
      "v 3 genus=0 e=-2\nv 4 genus=0 e=-2\n"
      "e 0 1\ne 0 2\ne 0 3\ne 0 4\n";
  const PlumbingGraph d4tilde = PlumbingGraph::parse(star);
  CHECK(boundary_homology(d4tilde).free_rank == 1);
  CHECK(euler_characteristic_boundary(d4tilde) == 0);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const PlumbingGraph g = random_tree(rng, 2 + trial % 9);
    CHECK(euler_characteristic_boundary(g) == 0);
  }
}
