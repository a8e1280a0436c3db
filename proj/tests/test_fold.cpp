#include <algorithm>
#include <vector>

#include "doctest.h"
#include "foldprod/errors.hpp"
#include "foldprod/field.hpp"
#include "foldprod/fold.hpp"
#include "support.hpp"

using namespace foldprod;
using testsupport::collection_from_ints;

namespace {

FormCollection<Rat> weighted_plane() {
  return collection_from_ints<Rat>(3, {{{1, 0, 0}, 2},
                                       {{0, 1, 0}, 1},
                                       {{0, 0, 1}, 1},
                                       {{1, 1, 1}, 1}});
}

FormCollection<Rat> four_lines() {
  return collection_from_ints<Rat>(3, {{{1, 0, 0}, 1},
                                       {{0, 1, 0}, 1},
                                       {{0, 0, 1}, 1},
                                       {{1, 1, 1}, 1}});
}

std::vector<std::vector<int>> sorted_exponents(const FoldIdeal<Rat>& ideal) {
  std::vector<std::vector<int>> out = ideal.generator_exponents();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("generators enumerate bounded exponent patterns") {
  const FormCollection<Rat> sigma = collection_from_ints<Rat>(
      3, {{{1, 0, 0}, 2}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
  const FoldIdeal<Rat> ideal(sigma, 2);
  const std::vector<std::vector<int>> expected{
      {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}};
  CHECK(sorted_exponents(ideal) == expected);
}

TEST_CASE("the weighted plane collection has seven three-fold products") {
  const FoldIdeal<Rat> ideal(weighted_plane(), 3);
  CHECK(ideal.generator_exponents().size() == 7);
  for (const auto& t : ideal.generator_exponents()) {
    CHECK(t[0] <= 2);
    CHECK(t[1] <= 1);
    CHECK(t[2] <= 1);
    CHECK(t[3] <= 1);
    CHECK(t[0] + t[1] + t[2] + t[3] == 3);
  }
}

TEST_CASE("edge folds of the ideal lattice") {
  const FormCollection<Rat> sigma = weighted_plane();
  const FoldIdeal<Rat> unit(sigma, 0);
  CHECK(unit.is_unit());
  CHECK(unit.piece(0).dim() == 1);
  CHECK(unit.piece(2).dim() == graded_dim(3, 2));

  const FoldIdeal<Rat> zero(sigma, 6);
  CHECK(zero.is_zero());
  CHECK(zero.piece(6).dim() == 0);

  const FoldIdeal<Rat> principal(sigma, 5);
  CHECK(principal.generator_exponents() ==
        std::vector<std::vector<int>>{{2, 1, 1, 1}});
  CHECK(principal.piece(5).dim() == 1);

  CHECK_THROWS_AS(FoldIdeal<Rat>(sigma, -1), DimensionError);
}

TEST_CASE("expanded generators match hand multiplication") {
  // ((x,2),(y,1)): the two-fold products are x^2 and xy
  const FormCollection<Rat> sigma =
      collection_from_ints<Rat>(2, {{{1, 0}, 2}, {{0, 1}, 1}});
  const FoldIdeal<Rat> ideal(sigma, 2);
  GeneratorSet<Rat> expected{Poly<Rat>::monomial({2, 0}),
                             Poly<Rat>::monomial({1, 1})};
  CHECK(ideal.piece(2).space == span_in_degree(expected, 2, 2).space);
  CHECK(ideal.piece(2).dim() == 2);
}

TEST_CASE("pieces vanish below the fold and grow above it") {
  const FoldIdeal<Rat> ideal(weighted_plane(), 3);
  CHECK(ideal.piece(0).dim() == 0);
  CHECK(ideal.piece(2).dim() == 0);
  CHECK(ideal.piece(3).dim() > 0);
  // the first nonzero degree equals the fold
  const FoldIdeal<Rat> deep(weighted_plane(), 4);
  CHECK(deep.piece(3).dim() == 0);
  CHECK(deep.piece(4).dim() > 0);
}

TEST_CASE("low folds of independent lines fill out powers of the maximal ideal") {
  // two-fold products of the four plane lines already span every quadric
  const FoldIdeal<Rat> ideal(four_lines(), 2);
  for (int d = 2; d <= 5; ++d)
    CHECK(ideal.piece(d).dim() == graded_dim(3, d));
  CHECK(ideal.piece(1).dim() == 0);
}

TEST_CASE("three-fold products of four plane lines are independent") {
  const FoldIdeal<Rat> ideal(four_lines(), 3);
  CHECK(ideal.generator_exponents().size() == 4);
  CHECK(ideal.piece(3).dim() == 4);
}

TEST_CASE("splitting off one factor satisfies the recursion") {
  CHECK(recursion_identity_check(four_lines(), 2, 3, 6));
  const FormCollection<Rat> squares =
      collection_from_ints<Rat>(2, {{{1, 0}, 2}, {{0, 1}, 2}});
  CHECK(recursion_identity_check(squares, 3, 1, 7));
  CHECK(recursion_identity_check(weighted_plane(), 3, 0, 7));
  CHECK_THROWS_AS(recursion_identity_check(four_lines(), 2, 9, 6),
                  DimensionError);
}

TEST_CASE("powers of a fold ideal are folds of the scaled collection") {
  const FormCollection<Rat> triangle = collection_from_ints<Rat>(
      3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
  CHECK(power_identity_check(triangle, 2, 2, 8));
  CHECK(power_identity_check(four_lines(), 3, 2, 10));
  CHECK(power_identity_check(weighted_plane(), 2, 2, 8));
}

TEST_CASE("power generators multiply out fold generators") {
  const FoldIdeal<Rat> ideal(four_lines(), 3);
  const GeneratorSet<Rat> squares = power_generators(ideal, 2);
  for (const Poly<Rat>& g : squares) {
    CHECK(g.degree() == 6);
    CHECK(g.is_homogeneous());
  }
  // distinct products only: C(4,2) pairs plus 4 squares = 10
  CHECK(squares.size() == 10);
}

TEST_CASE("colon by one form drops a fold") {
  CHECK(colon_identity_check(weighted_plane(), 3, 7));
  CHECK(colon_identity_check(four_lines(), 4, 8));
  CHECK(colon_identity_check(four_lines(), 1, 5));
  const FormCollection<Rat> bad = collection_from_ints<Rat>(
      3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{1, 1, 0}, 1}, {{0, 0, 1}, 1}});
  CHECK_THROWS_AS(colon_identity_check(bad, 2, 5), HypothesisError);
}

TEST_CASE("folds nest as the fold count grows") {
  const FormCollection<Rat> sigma = weighted_plane();
  for (int a = 1; a <= 5; ++a) {
    const FoldIdeal<Rat> finer(sigma, a);
    const FoldIdeal<Rat> coarser(sigma, a - 1);
    for (int d = 0; d <= 7; ++d)
      CHECK(subspace_leq(finer.piece(d).space, coarser.piece(d).space));
  }
}

TEST_CASE("rescaling the forms does not move the ideal") {
  const FormCollection<Rat> scaled = collection_from_ints<Rat>(
      3,
      {{{2, 0, 0}, 2}, {{0, -3, 0}, 1}, {{0, 0, 5}, 1}, {{4, 4, 4}, 1}});
  const FoldIdeal<Rat> a(weighted_plane(), 3);
  const FoldIdeal<Rat> b(scaled, 3);
  for (int d = 3; d <= 6; ++d) CHECK(a.piece(d).space == b.piece(d).space);
}

TEST_CASE("permuting the entries does not move the ideal") {
  const FormCollection<Rat> shuffled = collection_from_ints<Rat>(
      3,
      {{{1, 1, 1}, 1}, {{0, 0, 1}, 1}, {{1, 0, 0}, 2}, {{0, 1, 0}, 1}});
  const FoldIdeal<Rat> a(weighted_plane(), 2);
  const FoldIdeal<Rat> b(shuffled, 2);
  for (int d = 2; d <= 6; ++d) CHECK(a.piece(d).space == b.piece(d).space);
}

TEST_CASE("removing one copy decrements multiplicity or drops the entry") {
  const FormCollection<Rat> sigma = weighted_plane();
  const FormCollection<Rat> less = remove_one_copy(sigma, 0);
  CHECK(less.entries[0].multiplicity == 1);
  CHECK(less.support_size() == 4);
  const FormCollection<Rat> gone = remove_one_copy(less, 0);
  CHECK(gone.support_size() == 3);
  CHECK_THROWS_AS(remove_one_copy(sigma, 9), DimensionError);
  const FormCollection<Rat> single =
      collection_from_ints<Rat>(2, {{{1, 0}, 1}});
  CHECK_THROWS_AS(remove_one_copy(single, 0), DimensionError);
}

TEST_CASE("scaling multiplicities multiplies the total weight") {
  const FormCollection<Rat> doubled = scale_multiplicities(weighted_plane(), 2);
  CHECK(doubled.total_multiplicity() == 10);
  CHECK(doubled.entries[0].multiplicity == 4);
  CHECK_THROWS_AS(scale_multiplicities(weighted_plane(), 0), DimensionError);
}

TEST_CASE("fold ideals work over the prime field") {
  const FormCollection<Fp64> sigma = collection_from_ints<Fp64>(
      3, {{{1, 0, 0}, 2}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}, {{1, 1, 1}, 1}});
  const FoldIdeal<Fp64> ideal(sigma, 3);
  CHECK(ideal.generator_exponents().size() == 7);
  const FoldIdeal<Rat> reference(weighted_plane(), 3);
  for (int d = 3; d <= 6; ++d)
    CHECK(ideal.piece(d).dim() == reference.piece(d).dim());
}
