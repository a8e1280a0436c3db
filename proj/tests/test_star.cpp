#include <vector>

#include "doctest.h"
#include "foldprod/errors.hpp"
#include "foldprod/field.hpp"
#include "foldprod/star.hpp"
#include "support.hpp"

using namespace foldprod;
using testsupport::collection_from_ints;
using testsupport::vanishing_space_by_derivatives;

namespace {

FormCollection<Rat> four_lines() {
  return collection_from_ints<Rat>(
      3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}, {{1, 1, 1}, 1}});
}

FormCollection<Rat> five_planes() {
  return collection_from_ints<Rat>(4, {{{1, 0, 0, 0}, 1},
                                       {{0, 1, 0, 0}, 1},
                                       {{0, 0, 1, 0}, 1},
                                       {{0, 0, 0, 1}, 1},
                                       {{1, 1, 1, 1}, 1}});
}

/// Pairwise intersection points of the four lines, as projective
/// representatives.
std::vector<std::vector<Rat>> six_points() {
  return {{Rat(0), Rat(0), Rat(1)},  {Rat(0), Rat(1), Rat(0)},
          {Rat(0), Rat(1), Rat(-1)}, {Rat(1), Rat(0), Rat(0)},
          {Rat(1), Rat(0), Rat(-1)}, {Rat(1), Rat(-1), Rat(0)}};
}

}  // namespace

TEST_CASE("star configurations validate their hypotheses") {
  CHECK_THROWS_AS(
      make_star(collection_from_ints<Rat>(
                    3, {{{1, 0, 0}, 2}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}),
                2),
      HypothesisError);
  CHECK_THROWS_AS(make_star(four_lines(), 0), HypothesisError);
  CHECK_THROWS_AS(make_star(four_lines(), 3), HypothesisError);
  CHECK_THROWS_AS(
      make_star(collection_from_ints<Rat>(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}}),
                1),
      HypothesisError);
  CHECK_THROWS_AS(
      make_star(collection_from_ints<Rat>(
                    3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{1, 1, 0}, 1},
                        {{0, 0, 1}, 1}}),
                2),
      HypothesisError);
  CHECK_NOTHROW(make_star(four_lines(), 2));
  CHECK_NOTHROW(make_star(five_planes(), 3));
}

TEST_CASE("the six-point star in the plane has the expected shape") {
  const StarConfig<Rat> config = make_star(four_lines(), 2);
  CHECK(config.s() == 4);
  CHECK(config.fold() == 3);
  const FoldIdeal<Rat> ideal = star_ideal(config);
  CHECK(ideal.generators().size() == 4);
  for (int d = 2; d <= 5; ++d)
    CHECK(quotient_dim(ideal.generators(), 3, d) == 6);
  CHECK(quotient_dim(ideal.generators(), 3, 3) == 6);
}

TEST_CASE("codimension one gives a principal ideal") {
  const StarConfig<Rat> config = make_star(four_lines(), 1);
  CHECK(config.fold() == 4);
  const FoldIdeal<Rat> ideal = star_ideal(config);
  CHECK(ideal.generators().size() == 1);
  CHECK(ideal.piece(4).dim() == 1);
}

TEST_CASE("symbolic pieces match the derivative description of fat points") {
  const StarConfig<Rat> config = make_star(four_lines(), 2);
  const auto points = six_points();
  for (int m = 1; m <= 3; ++m) {
    for (int d = 0; d <= 6; ++d) {
      const GradedPiece<Rat> piece = symbolic_power_piece(config, m, d);
      const RowSpace<Rat> oracle =
          vanishing_space_by_derivatives(points, m, d, 3);
      CHECK(piece.space == oracle);
    }
  }
}

TEST_CASE("ordinary powers sit inside symbolic powers") {
  const StarConfig<Rat> config = make_star(four_lines(), 2);
  for (int m = 1; m <= 3; ++m)
    for (int d = 0; d <= 9; ++d)
      CHECK(subspace_leq(power_piece(config, m, d).space,
                         symbolic_power_piece(config, m, d).space));
}

TEST_CASE("stratum indices are validated") {
  const StarConfig<Rat> config = make_star(four_lines(), 2);
  CHECK_THROWS_AS(stratum_symbolic_piece(config, 0, 1, 3), DimensionError);
  CHECK_THROWS_AS(stratum_symbolic_piece(config, 3, 1, 3), DimensionError);
  CHECK_THROWS_AS(stratum_symbolic_piece(config, 2, 0, 3), DimensionError);
}

TEST_CASE("the first power of the intersection formula is the ideal itself") {
  const StarConfig<Rat> config = make_star(four_lines(), 2);
  const FoldIdeal<Rat> ideal = star_ideal(config);
  for (int d = 0; d <= 6; ++d)
    CHECK(ghm_rhs_piece(config, 1, d).space == ideal.piece(d).space);
}

TEST_CASE("power decompositions verify for the six-point star") {
  const StarConfig<Rat> config = make_star(four_lines(), 2);
  for (int m = 1; m <= 2; ++m) {
    const GhmReport<Rat> report = verify_ghm(config, m, 3 * m + 3);
    CHECK(report.ok());
    CHECK(report.rhs_equality);
    CHECK(report.scaled_fold_matches);
    CHECK(report.components_match);
  }
}

TEST_CASE("degree bounds below the generation degree are rejected") {
  const StarConfig<Rat> config = make_star(four_lines(), 2);
  CHECK_THROWS_AS(verify_ghm(config, 2, 5), BoundError);
  CHECK_THROWS_AS(phi_transfer_check(config, 2, 2, 5), BoundError);
  CHECK_THROWS_AS(phi_transfer_check(config, 0, 1, 9), DimensionError);
}

TEST_CASE("the coordinate model and the generic side agree cell by cell") {
  const StarConfig<Rat> config = make_star(four_lines(), 2);
  const bool expected_contained[3][3] = {
      {true, false, false}, {true, false, false}, {true, true, false}};
  for (int m = 1; m <= 3; ++m) {
    for (int r = 1; r <= 3; ++r) {
      const PhiTransferReport report =
          phi_transfer_check(config, m, r, 3 * r + 4);
      CHECK(report.verdicts_agree);
      CHECK(report.min_gens_transfer);
      CHECK(report.model_contained == expected_contained[m - 1][r - 1]);
      CHECK(report.generic_contained == expected_contained[m - 1][r - 1]);
    }
  }
}

TEST_CASE("star machinery works over a prime field") {
  testsupport::ModulusGuard guard(1000003);
  const FormCollection<Fp64> sigma = collection_from_ints<Fp64>(
      3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}, {{1, 1, 1}, 1}});
  const StarConfig<Fp64> config = make_star(sigma, 2);
  const GhmReport<Fp64> report = verify_ghm(config, 1, 6);
  CHECK(report.ok());
  for (int d = 0; d <= 6; ++d) {
    const StarConfig<Rat> rat_config = make_star(four_lines(), 2);
    CHECK(symbolic_power_piece(config, 2, d).dim() ==
          symbolic_power_piece(rat_config, 2, d).dim());
  }
}
