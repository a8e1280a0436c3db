#ifndef FOLDPROD_STAR_MODEL_HPP
#define FOLDPROD_STAR_MODEL_HPP

/**
 * @file star_model.hpp
 * @brief Combinatorial model of coordinate star configurations: membership in
 *        symbolic and ordinary powers reduces to integer inequalities on
 *        exponent vectors, so containment questions and the resurgence
 *        boundary can be scanned exactly and fast.
 *
 * The setting is s coordinate hyperplanes, codimension parameter c, and the
 * ideal generated by the squarefree monomials of degree s - c + 1.  A
 * monomial with exponent vector t lies in the m-th symbolic power iff every
 * c of its exponents sum to at least m, and in the r-th ordinary power iff
 * sum_j min(t_j, r) >= r (s - c + 1).
 */

#include <optional>
#include <vector>

#include "foldprod/errors.hpp"

namespace foldprod {

struct MonomialStarModel {
  int s = 0;  // number of coordinate hyperplanes = number of variables
  int c = 0;  // codimension of the star components, 1 <= c <= s - 1
};

MonomialStarModel make_star_model(int s, int c);

/// Exponent vector lies in the m-th symbolic power: the c smallest entries
/// sum to at least m.
bool mono_symbolic_member(const MonomialStarModel& model,
                          const std::vector<int>& expo, int m);

/// Exponent vector lies in the r-th ordinary power: sum_j min(t_j, r) is at
/// least r (s - c + 1).
bool mono_power_member(const MonomialStarModel& model,
                       const std::vector<int>& expo, int r);

/// Minimal monomial generators of the m-th symbolic power.  All entries of a
/// minimal generator are at most m, so the search over [0, m]^s is complete.
std::vector<std::vector<int>> mono_symbolic_min_gens(
    const MonomialStarModel& model, int m);

/// Whether the m-th symbolic power is contained in the r-th ordinary power.
bool mono_containment(const MonomialStarModel& model, int m, int r);

/// A reduced fraction with positive denominator.
struct Ratio {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

Ratio make_ratio(long long num, long long den);

/// The closed-form resurgence c (s - c + 1) / s of the model, reduced.
Ratio resurgence_ratio(const MonomialStarModel& model);

struct ContainmentFailure {
  int m = 0;
  int r = 0;

  friend bool operator==(const ContainmentFailure&, const ContainmentFailure&) = default;
};

struct ResurgenceScan {
  MonomialStarModel model;
  int m_max = 0;
  int r_max = 0;
  Ratio formula;                              // the closed-form resurgence
  std::vector<std::vector<bool>> contained;   // [m-1][r-1]
  std::vector<ContainmentFailure> failures;   // (m, r) with no containment
  bool failures_all_below_formula = true;     // every failure has m/r < formula
  std::optional<ContainmentFailure> sharpest; // failure with the largest m/r
  bool witness_within_one_over_r = false;     // some failure has m/r >= formula - 1/r
};

/// Full containment table over 1 <= m <= m_max, 1 <= r <= r_max, with the
/// sharpness bookkeeping around the resurgence formula.
ResurgenceScan resurgence_search(const MonomialStarModel& model, int m_max,
                                 int r_max);

}  // namespace foldprod

#endif
