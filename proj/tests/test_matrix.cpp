#include <random>
#include <vector>

#include "doctest.h"
#include "foldprod/errors.hpp"
#include "foldprod/field.hpp"
#include "foldprod/matrix.hpp"
#include "support.hpp"

using namespace foldprod;
using testsupport::bareiss_rank;
using testsupport::big_from_ints;
using testsupport::matrix_from_ints;
using testsupport::random_int_matrix;

TEST_CASE("row reduction produces the canonical reduced echelon form") {
  Matrix<Rat> m = matrix_from_ints<Rat>({{0, 2, 4}, {1, 1, 1}});
  const std::vector<std::size_t> pivots = rref_in_place(m);
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(m == matrix_from_ints<Rat>({{1, 0, -1}, {0, 1, 2}}));

  Matrix<Rat> dup = matrix_from_ints<Rat>({{1, 2}, {2, 4}, {3, 6}});
  const std::vector<std::size_t> p2 = rref_in_place(dup);
  CHECK(p2 == std::vector<std::size_t>{0});
  CHECK(dup.rows() == 1);
  CHECK(dup == matrix_from_ints<Rat>({{1, 2}}));
}

TEST_CASE("row reduction is idempotent") {
  std::mt19937_64 rng(20240816);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix<Rat> m = matrix_from_ints<Rat>(random_int_matrix(rng, 4, 6, -5, 5));
    rref_in_place(m);
    Matrix<Rat> again = m;
    rref_in_place(again);
    CHECK(again == m);
  }
}

TEST_CASE("rank agrees with an independent fraction-free elimination") {
  std::mt19937_64 rng(987654321);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t r = 1 + trial % 6;
    const std::size_t c = 1 + (trial * 7) % 8;
    const auto ints = random_int_matrix(rng, r, c, -5, 5);
    const std::size_t expected = bareiss_rank(big_from_ints(ints));
    CHECK(row_space(matrix_from_ints<Rat>(ints)).dim() == expected);
    // the default prime modulus is far larger than any minor of a small
    // integer matrix, so the prime-field rank must agree as well
    CHECK(row_space(matrix_from_ints<Fp64>(ints)).dim() == expected);
  }
}

TEST_CASE("kernel satisfies annihilation and rank-nullity") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 12; ++trial) {
    const auto ints = random_int_matrix(rng, 3 + trial % 3, 5, -4, 4);
    const Matrix<Rat> m = matrix_from_ints<Rat>(ints);
    const RowSpace<Rat> ker = kernel(m);
    const std::size_t rank = row_space(m).dim();
    CHECK(ker.dim() + rank == m.cols());
    const Matrix<Rat> product = ker.basis * m.transposed();
    CHECK(product.is_zero());
  }
}

TEST_CASE("a space is recovered from its dual description") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 12; ++trial) {
    const RowSpace<Rat> s =
        row_space(matrix_from_ints<Rat>(random_int_matrix(rng, 3, 6, -3, 3)));
    CHECK(kernel(cospace_matrix(s)) == s);
    CHECK(cospace_matrix(s).rows() == s.ambient - s.dim());
  }
}

TEST_CASE("membership reduction vanishes exactly on members") {
  const RowSpace<Rat> s = row_space(matrix_from_ints<Rat>({{1, 0, 2}, {0, 1, 1}}));
  std::vector<Rat> inside{Rat(2), Rat(3), Rat(7)};  // 2*(1,0,2) + 3*(0,1,1)
  CHECK(contains(s, std::span<const Rat>(inside)));
  std::vector<Rat> outside{Rat(0), Rat(0), Rat(1)};
  CHECK_FALSE(contains(s, std::span<const Rat>(outside)));
  for (std::size_t i = 0; i < s.basis.rows(); ++i)
    CHECK(contains(s, s.basis.row(i)));
}

TEST_CASE("sum and intersection obey the dimension formula") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 12; ++trial) {
    const RowSpace<Rat> a =
        row_space(matrix_from_ints<Rat>(random_int_matrix(rng, 2, 5, -3, 3)));
    const RowSpace<Rat> b =
        row_space(matrix_from_ints<Rat>(random_int_matrix(rng, 3, 5, -3, 3)));
    const RowSpace<Rat> sum = subspace_sum(a, b);
    const RowSpace<Rat> meet = subspace_intersect(a, b);
    CHECK(a.dim() + b.dim() == sum.dim() + meet.dim());
    CHECK(subspace_leq(meet, a));
    CHECK(subspace_leq(meet, b));
    CHECK(subspace_leq(a, sum));
    CHECK(subspace_leq(b, sum));
  }
}

TEST_CASE("intersecting many spaces matches iterated pairwise intersection") {
  std::mt19937_64 rng(2468);
  const RowSpace<Rat> a =
      row_space(matrix_from_ints<Rat>(random_int_matrix(rng, 3, 6, -3, 3)));
  const RowSpace<Rat> b =
      row_space(matrix_from_ints<Rat>(random_int_matrix(rng, 4, 6, -3, 3)));
  const RowSpace<Rat> c =
      row_space(matrix_from_ints<Rat>(random_int_matrix(rng, 3, 6, -3, 3)));
  const std::vector<RowSpace<Rat>> all{a, b, c};
  const RowSpace<Rat> many = intersect_many<Rat>(all, 6);
  CHECK(many == subspace_intersect(subspace_intersect(a, b), c));
}

TEST_CASE("preimage rows map into the target space") {
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 8; ++trial) {
    // map: 4-dim domain to 3-dim target, acting on column vectors
    const Matrix<Rat> map =
        matrix_from_ints<Rat>(random_int_matrix(rng, 3, 4, -3, 3));
    const RowSpace<Rat> target =
        row_space(matrix_from_ints<Rat>(random_int_matrix(rng, 1, 3, -3, 3)));
    const RowSpace<Rat> pre = preimage(map, target);
    const RowSpace<Rat> image = apply_map(map, pre);
    CHECK(subspace_leq(image, target));
    // the preimage contains the whole kernel of the map
    CHECK(subspace_leq(kernel(map), pre));
  }
}

TEST_CASE("zero and full spaces are the lattice extremes") {
  const RowSpace<Rat> z = zero_space<Rat>(4);
  const RowSpace<Rat> f = full_space<Rat>(4);
  CHECK(z.dim() == 0);
  CHECK(f.dim() == 4);
  const RowSpace<Rat> s = row_space(matrix_from_ints<Rat>({{1, 1, 0, 0}}));
  CHECK(subspace_leq(z, s));
  CHECK(subspace_leq(s, f));
  CHECK(subspace_sum(s, z) == s);
  CHECK(subspace_intersect(s, f) == s);
}

TEST_CASE("canonical form does not depend on the presentation of the space") {
  std::mt19937_64 rng(4096);
  for (int trial = 0; trial < 10; ++trial) {
    auto ints = random_int_matrix(rng, 3, 5, -3, 3);
    const RowSpace<Rat> original = row_space(matrix_from_ints<Rat>(ints));
    // shuffle rows and rescale: same row space, different presentation
    std::swap(ints[0], ints[2]);
    Matrix<Rat> scaled = matrix_from_ints<Rat>(ints);
    for (std::size_t j = 0; j < scaled.cols(); ++j) {
      scaled(0, j) = scaled(0, j) * Rat(-7);
      scaled(1, j) = scaled(1, j) * Rat(3);
    }
    CHECK(row_space(std::move(scaled)) == original);
  }
}

TEST_CASE("subspace operations work over the prime field") {
  testsupport::ModulusGuard guard(1000003);
  std::mt19937_64 rng(9999);
  for (int trial = 0; trial < 8; ++trial) {
    const auto ints = random_int_matrix(rng, 3, 5, -4, 4);
    const Matrix<Fp64> m = matrix_from_ints<Fp64>(ints);
    const RowSpace<Fp64> s = row_space(m);
    CHECK(kernel(cospace_matrix(s)) == s);
    const RowSpace<Fp64> ker = kernel(m);
    CHECK(ker.dim() + s.dim() == m.cols());
    CHECK((ker.basis * m.transposed()).is_zero());
  }
}

TEST_CASE("dimension mismatches are rejected") {
  const RowSpace<Rat> a = row_space(matrix_from_ints<Rat>({{1, 0}}));
  const RowSpace<Rat> b = row_space(matrix_from_ints<Rat>({{1, 0, 0}}));
  CHECK_THROWS_AS(subspace_sum(a, b), DimensionError);
  CHECK_THROWS_AS(subspace_leq(a, b), DimensionError);
  CHECK_THROWS_AS(subspace_intersect(a, b), DimensionError);
}
