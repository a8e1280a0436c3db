#ifndef FOLDPROD_STAR_HPP
#define FOLDPROD_STAR_HPP

/**
 * @file star.hpp
 * @brief Star configurations built from generic linear forms: symbolic powers
 *        of the codimension strata, the decomposition of ordinary powers into
 *        symbolic factors, and the transfer between the generic picture and
 *        the coordinate monomial model.
 *
 * For s generic forms and codimension c, the defining ideal is the fold
 * ideal of the (s - c + 1)-fold products.  The central verified statement:
 * its m-th ordinary power is the intersection of the ((j - c + 1) m)-th
 * symbolic powers of the codimension-j strata for j = c..nvars-1, together
 * with the (s - c + 1) m-th power of the irrelevant ideal.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foldprod/decomp.hpp"
#include "foldprod/fold.hpp"
#include "foldprod/graded.hpp"
#include "foldprod/sigma.hpp"
#include "foldprod/star_model.hpp"

namespace foldprod {

template <ExactField K>
struct StarConfig {
  FormCollection<K> sigma;  // multiplicity-free, generic, full rank
  int codim = 0;            // c, with 1 <= c <= nvars - 1

  int s() const { return sigma.support_size(); }
  int nvars() const { return sigma.nvars; }
  /// Generation degree of the defining ideal.
  int fold() const { return s() - codim + 1; }
};

template <ExactField K>
StarConfig<K> make_star(FormCollection<K> sigma, int c) {
  for (const auto& e : sigma.entries)
    if (e.multiplicity != 1)
      throw HypothesisError("star configurations use multiplicity-free forms");
  if (c < 1 || c > sigma.nvars - 1)
    throw HypothesisError("codimension must lie in [1, nvars - 1]");
  if (sigma.support_size() < sigma.nvars || rank_of(sigma) != sigma.nvars)
    throw HypothesisError("star configurations need full-rank supports");
  if (!is_generic_support(sigma))
    throw HypothesisError("star configurations need generic forms");
  return {std::move(sigma), c};
}

template <ExactField K>
FoldIdeal<K> star_ideal(const StarConfig<K>& config) {
  return FoldIdeal<K>(config.sigma, config.fold());
}

/**
 * Degree-d piece of the m-th symbolic power of the codimension-j stratum:
 * the intersection over all j-subsets of the m-th power of their span,
 * assembled from dual pieces.
 */
template <ExactField K>
GradedPiece<K> stratum_symbolic_piece(const StarConfig<K>& config, int j,
                                      int m, int d) {
  if (j < 1 || j > config.nvars() - 1)
    throw DimensionError("stratum codimension out of range");
  if (m < 1) throw DimensionError("symbolic power index must be positive");
  std::vector<Matrix<K>> duals;
  detail::for_each_subset(config.s(), j, [&](const std::vector<std::size_t>& sub) {
    duals.push_back(
        power_cospace(detail::span_of_support(config.sigma, sub), m, d));
  });
  return {config.nvars(), d,
          kernel_of_stack(duals, graded_dim(config.nvars(), d))};
}

/// Symbolic power of the configuration's own stratum (codimension c).
template <ExactField K>
GradedPiece<K> symbolic_power_piece(const StarConfig<K>& config, int m, int d) {
  return stratum_symbolic_piece(config, config.codim, m, d);
}

/// Degree-d piece of the m-th ordinary power, from the definitional products
/// of m generators.
template <ExactField K>
GradedPiece<K> power_piece(const StarConfig<K>& config, int m, int d) {
  const FoldIdeal<K> ideal = star_ideal(config);
  return span_in_degree(power_generators(ideal, m), config.nvars(), d);
}

namespace detail {

/// Dual rows of the full symbolic-factor intersection at degree d, i.e. of
/// every stratum j = c..nvars-1 with exponent (j - c + 1) m.  The irrelevant
/// factor is handled by the caller: it zeroes low degrees and is vacuous
/// above them.
template <ExactField K>
std::vector<Matrix<K>> ghm_factor_duals(const StarConfig<K>& config, int m,
                                        int d) {
  std::vector<Matrix<K>> duals;
  for (int j = config.codim; j <= config.nvars() - 1; ++j) {
    const int e = (j - config.codim + 1) * m;
    detail::for_each_subset(
        config.s(), j, [&](const std::vector<std::size_t>& sub) {
          duals.push_back(
              power_cospace(detail::span_of_support(config.sigma, sub), e, d));
        });
  }
  return duals;
}

/// lhs == ker(stack) via rank arithmetic plus annihilation, avoiding a
/// second kernel extraction: equality holds iff dim lhs + rank stack spans
/// everything and the stack kills the basis.
template <ExactField K>
bool space_equals_kernel(const RowSpace<K>& lhs, Matrix<K> stack) {
  const std::size_t ambient = lhs.ambient;
  Matrix<K> reduced = std::move(stack);
  const std::size_t rank = rref_in_place(reduced).size();
  if (lhs.dim() + rank != ambient) return false;
  return (reduced * lhs.basis.transposed()).is_zero();
}

}  // namespace detail

/**
 * Degree-d piece of the full right-hand side: the symbolic factors of all
 * strata intersected with the (s - c + 1) m-th irrelevant power.
 */
template <ExactField K>
GradedPiece<K> ghm_rhs_piece(const StarConfig<K>& config, int m, int d) {
  if (m < 1) throw DimensionError("power index must be positive");
  if (d < config.fold() * m) return zero_piece<K>(config.nvars(), d);
  return {config.nvars(), d,
          kernel_of_stack(detail::ghm_factor_duals(config, m, d),
                          graded_dim(config.nvars(), d))};
}

template <ExactField K>
struct GhmReport {
  Verdict verdict = Verdict::verified;
  bool rhs_equality = false;         // ordinary power == symbolic intersection
  bool scaled_fold_matches = false;  // ordinary power == fold ideal of scaled forms
  bool components_match = false;     // decomposition has exactly the GHM factors
  std::string detail;

  bool ok() const { return verdict == Verdict::verified; }
};

/**
 * Verifies, degree by degree up to D, that the m-th ordinary power of the
 * star ideal equals the symbolic-factor intersection, and cross-checks the
 * route through multiplied-up collections: the power equals the fold ideal
 * of the m-scaled collection, whose decomposition must consist of exactly
 * the strata spans with exponents (j - c + 1) m plus the irrelevant factor.
 */
template <ExactField K>
GhmReport<K> verify_ghm(const StarConfig<K>& config, int m, int D) {
  if (m < 1) throw DimensionError("power index must be positive");
  if (D < config.fold() * m)
    throw BoundError("degree bound below the power's generation degree");
  GhmReport<K> report;
  const int nvars = config.nvars();
  const int a_scaled = config.fold() * m;
  const FormCollection<K> scaled = scale_multiplicities(config.sigma, m);
  const FoldIdeal<K> scaled_ideal(scaled, a_scaled);
  const GeneratorSet<K> power_gens =
      power_generators(star_ideal(config), m);

  report.rhs_equality = true;
  report.scaled_fold_matches = true;
  for (int d = 0; d <= D; ++d) {
    const GradedPiece<K> lhs = span_in_degree(power_gens, nvars, d);
    if (d < a_scaled) {
      if (lhs.dim() != 0) {
        report.rhs_equality = false;
        report.detail = "power piece nonzero below its generation degree";
        break;
      }
    } else {
      Matrix<K> stack(0, graded_dim(nvars, d));
      for (const Matrix<K>& q : detail::ghm_factor_duals(config, m, d))
        for (std::size_t i = 0; i < q.rows(); ++i) stack.append_row(q.row(i));
      if (!detail::space_equals_kernel(lhs.space, std::move(stack))) {
        report.rhs_equality = false;
        report.detail = "symbolic intersection differs in degree " +
                        std::to_string(d);
        break;
      }
    }
    if (!(scaled_ideal.piece(d).space == lhs.space)) {
      report.scaled_fold_matches = false;
      report.detail = "scaled-collection fold ideal differs in degree " +
                      std::to_string(d);
      break;
    }
  }

  // Structural check on the decomposition of the scaled collection.
  std::vector<std::pair<RowSpace<K>, int>> expected;
  for (int j = config.codim; j <= nvars - 1; ++j)
    detail::for_each_subset(
        config.s(), j, [&](const std::vector<std::size_t>& sub) {
          expected.emplace_back(detail::span_of_support(config.sigma, sub),
                                (j - config.codim + 1) * m);
        });
  expected.emplace_back(full_space<K>(nvars), a_scaled);

  std::vector<std::pair<RowSpace<K>, int>> actual;
  for (const PrimaryComponent<K>& comp :
       cor24_decomposition(scaled, a_scaled).components)
    actual.emplace_back(comp.prime.span, comp.exponent);

  report.components_match = expected.size() == actual.size();
  if (report.components_match) {
    std::vector<bool> used(actual.size(), false);
    for (const auto& e : expected) {
      bool found = false;
      for (std::size_t i = 0; i < actual.size(); ++i) {
        if (used[i] || !(actual[i] == e)) continue;
        used[i] = true;
        found = true;
        break;
      }
      if (!found) {
        report.components_match = false;
        break;
      }
    }
  }
  if (!report.components_match && report.detail.empty())
    report.detail = "decomposition components differ from the symbolic factors";

  report.verdict = (report.rhs_equality && report.scaled_fold_matches &&
                    report.components_match)
                       ? Verdict::verified
                       : Verdict::failed;
  return report;
}

struct PhiTransferReport {
  int m = 0;
  int r = 0;
  int degree_bound = 0;
  bool model_contained = false;    // verdict in the monomial model
  bool generic_contained = false;  // degreewise verdict on the generic side
  bool verdicts_agree = false;
  bool min_gens_transfer = false;  // images of model generators are symbolic members
};

/**
 * Transfer between the coordinate monomial model and the generic
 * configuration: substituting the forms for the variables sends the model's
 * symbolic-power generators into the corresponding symbolic pieces, and the
 * containment verdicts (m-th symbolic inside r-th ordinary) agree, with the
 * generic side checked degree by degree up to D.
 */
template <ExactField K>
PhiTransferReport phi_transfer_check(const StarConfig<K>& config, int m, int r,
                                     int D) {
  if (m < 1 || r < 1) throw DimensionError("power indices must be positive");
  if (D < config.fold() * r)
    throw BoundError("degree bound cannot certify the containment verdict");
  PhiTransferReport report;
  report.m = m;
  report.r = r;
  report.degree_bound = D;
  const MonomialStarModel model = make_star_model(config.s(), config.codim);
  report.model_contained = mono_containment(model, m, r);

  report.min_gens_transfer = true;
  for (const std::vector<int>& t : mono_symbolic_min_gens(model, m)) {
    const Poly<K> image = FoldIdeal<K>::expand_product(config.sigma, t);
    const int d = image.degree();
    const GradedPiece<K> symbolic = symbolic_power_piece(config, m, d);
    const std::vector<K> coords = image.coeff_vector(d);
    if (!contains(symbolic.space, std::span<const K>(coords))) {
      report.min_gens_transfer = false;
      break;
    }
  }

  report.generic_contained = true;
  for (int d = 0; d <= D; ++d) {
    const GradedPiece<K> symbolic = symbolic_power_piece(config, m, d);
    const GradedPiece<K> power = power_piece(config, r, d);
    if (!subspace_leq(symbolic.space, power.space)) {
      report.generic_contained = false;
      break;
    }
  }

  report.verdicts_agree = report.model_contained == report.generic_contained;
  return report;
}

}  // namespace foldprod

#endif
