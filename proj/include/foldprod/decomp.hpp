#ifndef FOLDPROD_DECOMP_HPP
#define FOLDPROD_DECOMP_HPP

/**
 * @file decomp.hpp
 * @brief Primes spanned by support subsets, closure counts, explicit primary
 *        decompositions of fold ideals, and their degreewise verification.
 *
 * Throughout, "the irrelevant ideal" means the one of the ambient ring the
 * collection currently lives in.  Statements are verified in that ring; for
 * rank-deficient collections this is the faithful image of the re-embedded
 * statement, so no projection plumbing is needed here.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "foldprod/fold.hpp"
#include "foldprod/graded.hpp"
#include "foldprod/sigma.hpp"

namespace foldprod {

/// A prime generated by linear forms: the span of a support subset.  Dedup
/// and equality are by span (canonical RREF basis); `support` records the
/// lexicographically least spanning subset, by size then indices.
template <ExactField K>
struct LinearPrime {
  std::vector<std::size_t> support;
  RowSpace<K> span;

  std::size_t codim() const { return span.dim(); }

  friend bool operator==(const LinearPrime&, const LinearPrime&) = default;
};

template <ExactField K>
struct PrimaryComponent {
  LinearPrime<K> prime;
  int exponent = 1;

  friend bool operator==(const PrimaryComponent&, const PrimaryComponent&) = default;
};

template <ExactField K>
struct Decomposition {
  std::vector<PrimaryComponent<K>> components;  // sorted by (codim, support)
  bool includes_irrelevant = false;  // some component is the whole-ring prime

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Support indices of the collection entries lying inside the span.
template <ExactField K>
std::vector<std::size_t> closure_of(const FormCollection<K>& sigma,
                                    const RowSpace<K>& span) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sigma.entries.size(); ++i)
    if (contains(span, std::span<const K>(sigma.entries[i].form.coeffs)))
      out.push_back(i);
  return out;
}

/// nu: total multiplicity of the closure.
template <ExactField K>
int nu_of(const FormCollection<K>& sigma, const RowSpace<K>& span) {
  int nu = 0;
  for (std::size_t i : closure_of(sigma, span))
    nu += sigma.entries[i].multiplicity;
  return nu;
}

/// All distinct spans of nonempty support subsets, each tagged with its
/// lex-least spanning subset.  Deterministic order: by (codim, support).
template <ExactField K>
std::vector<LinearPrime<K>> distinct_subset_primes(
    const FormCollection<K>& sigma) {
  std::vector<LinearPrime<K>> out;
  const int s = sigma.support_size();
  for (int size = 1; size <= s; ++size) {
    detail::for_each_subset(s, size, [&](const std::vector<std::size_t>& subset) {
      RowSpace<K> span = detail::span_of_support(sigma, subset);
      for (const LinearPrime<K>& p : out)
        if (p.span == span) return;
      out.push_back({subset, std::move(span)});
    });
  }
  std::sort(out.begin(), out.end(),
            [](const LinearPrime<K>& a, const LinearPrime<K>& b) {
              if (a.codim() != b.codim()) return a.codim() < b.codim();
              return a.support < b.support;
            });
  return out;
}

/// The primes containing I_a: those with nu >= N - a + 1.
template <ExactField K>
std::vector<LinearPrime<K>> gamma_set(const FormCollection<K>& sigma, int a) {
  const int n_total = sigma.total_multiplicity();
  if (a < 1 || a > n_total) throw DimensionError("fold out of range");
  std::vector<LinearPrime<K>> out;
  for (LinearPrime<K>& p : distinct_subset_primes(sigma))
    if (nu_of(sigma, p.span) >= n_total - a + 1) out.push_back(std::move(p));
  return out;
}

namespace detail {

/// The decomposition with exponents a - N + nu over the gamma set; no
/// hypothesis checks.
template <ExactField K>
Decomposition<K> decomposition_formula(const FormCollection<K>& sigma, int a) {
  Decomposition<K> out;
  for (LinearPrime<K>& p : gamma_set(sigma, a)) {
    const int e = a - sigma.total_multiplicity() + nu_of(sigma, p.span);
    if (p.codim() == static_cast<std::size_t>(sigma.nvars))
      out.includes_irrelevant = true;
    out.components.push_back({std::move(p), e});
  }
  return out;
}

}  // namespace detail

/**
 * The explicit primary decomposition of I_a: p^(a - N + nu(p)) over the
 * gamma set.  Valid for generic support, and refused otherwise.
 */
template <ExactField K>
Decomposition<K> cor24_decomposition(const FormCollection<K>& sigma, int a) {
  if (!is_generic_support(sigma))
    throw HypothesisError("decomposition formula requires generic support");
  return detail::decomposition_formula(sigma, a);
}

/// Same decomposition with the irrelevant component removed: the saturation.
template <ExactField K>
Decomposition<K> saturation_components(const FormCollection<K>& sigma, int a) {
  Decomposition<K> out = cor24_decomposition(sigma, a);
  std::erase_if(out.components, [&](const PrimaryComponent<K>& c) {
    return c.prime.codim() == static_cast<std::size_t>(sigma.nvars);
  });
  out.includes_irrelevant = false;
  return out;
}

/// Degree-d piece of the intersection of the components.  An empty
/// decomposition is the unit ideal.
template <ExactField K>
GradedPiece<K> component_piece(const Decomposition<K>& decomp, int nvars,
                               int d) {
  std::vector<Matrix<K>> duals;
  duals.reserve(decomp.components.size());
  for (const PrimaryComponent<K>& c : decomp.components)
    duals.push_back(power_cospace(c.prime.span, c.exponent, d));
  return {nvars, d, kernel_of_stack(duals, graded_dim(nvars, d))};
}

enum class Verdict { verified, failed, hypothesis_violated };

struct CheckResult {
  Verdict verdict = Verdict::verified;
  bool equal = false;        // whether the compared objects agreed
  std::string detail;

  bool ok() const { return verdict == Verdict::verified; }
};

namespace detail {

template <ExactField K>
std::optional<int> first_piece_mismatch(const FoldIdeal<K>& ideal,
                                        const Decomposition<K>& decomp, int D,
                                        bool containment_only) {
  for (int d = 0; d <= D; ++d) {
    const GradedPiece<K> lhs = ideal.piece(d);
    const GradedPiece<K> rhs = component_piece(decomp, ideal.nvars(), d);
    const bool good = containment_only ? subspace_leq(lhs.space, rhs.space)
                                       : lhs.space == rhs.space;
    if (!good) return d;
  }
  return std::nullopt;
}

}  // namespace detail

/**
 * Containment of I_a in the intersection of p^(a - N + nu(p)): holds for
 * every collection, no genericity needed.
 */
template <ExactField K>
CheckResult verify_lemma21(const FormCollection<K>& sigma, int a, int D) {
  if (D < a) throw BoundError("degree bound below the generation degree");
  const FoldIdeal<K> ideal(sigma, a);
  const Decomposition<K> decomp = detail::decomposition_formula(sigma, a);
  const std::optional<int> bad =
      detail::first_piece_mismatch(ideal, decomp, D, /*containment_only=*/true);
  CheckResult r;
  r.equal = !bad.has_value();
  r.verdict = r.equal ? Verdict::verified : Verdict::failed;
  if (bad) r.detail = "containment fails in degree " + std::to_string(*bad);
  return r;
}

/**
 * Equality of I_a with the full component intersection, degree by degree up
 * to D.  For non-generic support the comparison still runs but the verdict
 * reports a violated hypothesis instead of a counterexample.
 */
template <ExactField K>
CheckResult verify_cor24(const FormCollection<K>& sigma, int a, int D) {
  if (D < a) throw BoundError("degree bound below the generation degree");
  const FoldIdeal<K> ideal(sigma, a);
  const Decomposition<K> decomp = detail::decomposition_formula(sigma, a);
  const std::optional<int> bad =
      detail::first_piece_mismatch(ideal, decomp, D, /*containment_only=*/false);
  CheckResult r;
  r.equal = !bad.has_value();
  if (!is_generic_support(sigma)) {
    r.verdict = Verdict::hypothesis_violated;
    r.detail = r.equal ? "support not generic (pieces happen to agree)"
                       : "support not generic; pieces differ in degree " +
                             std::to_string(*bad);
  } else {
    r.verdict = r.equal ? Verdict::verified : Verdict::failed;
    if (bad) r.detail = "pieces differ in degree " + std::to_string(*bad);
  }
  return r;
}

/**
 * Saturation statement: the intersection of the non-irrelevant components
 * equals the saturation of I_a, computed independently by the stabilized
 * colon (I : m^k).  Degreewise up to D; same hypothesis reporting as above.
 */
template <ExactField K>
CheckResult verify_prop22(const FormCollection<K>& sigma, int a, int D) {
  if (D < a) throw BoundError("degree bound below the generation degree");
  const FoldIdeal<K> ideal(sigma, a);
  Decomposition<K> decomp = detail::decomposition_formula(sigma, a);
  std::erase_if(decomp.components, [&](const PrimaryComponent<K>& c) {
    return c.prime.codim() == static_cast<std::size_t>(sigma.nvars);
  });
  decomp.includes_irrelevant = false;

  std::optional<int> bad;
  const GeneratorSet<K> gens =
      ideal.is_zero() ? GeneratorSet<K>{} : ideal.generators();
  for (int d = 0; d <= D; ++d) {
    const GradedPiece<K> rhs = component_piece(decomp, sigma.nvars, d);
    const RowSpace<K> sat =
        gens.empty() ? zero_space<K>(graded_dim(sigma.nvars, d))
                     : saturation_piece(gens, sigma.nvars, d, a).space;
    if (!(sat == rhs.space)) {
      bad = d;
      break;
    }
  }

  CheckResult r;
  r.equal = !bad.has_value();
  if (!is_generic_support(sigma)) {
    r.verdict = Verdict::hypothesis_violated;
    r.detail = r.equal ? "support not generic (pieces happen to agree)"
                       : "support not generic; pieces differ in degree " +
                             std::to_string(*bad);
  } else {
    r.verdict = r.equal ? Verdict::verified : Verdict::failed;
    if (bad) r.detail = "saturation mismatch in degree " + std::to_string(*bad);
  }
  return r;
}

/// Associated primes of I_a: the gamma set (for generic support the
/// decomposition is irredundant, so these are exactly the associated primes).
template <ExactField K>
std::vector<LinearPrime<K>> ass_primes(const FormCollection<K>& sigma, int a) {
  if (!is_generic_support(sigma))
    throw HypothesisError("associated prime list requires generic support");
  return gamma_set(sigma, a);
}

/**
 * Irredundancy: dropping any single component strictly enlarges the
 * intersection in some degree <= D.  D must be large enough to witness each
 * drop; failure to find a witness is reported, not silently accepted.
 */
template <ExactField K>
CheckResult verify_irredundant(const FormCollection<K>& sigma, int a, int D) {
  if (D < a) throw BoundError("degree bound below the generation degree");
  const Decomposition<K> decomp = cor24_decomposition(sigma, a);
  CheckResult r;
  r.equal = true;
  for (std::size_t skip = 0; skip < decomp.components.size(); ++skip) {
    bool witnessed = false;
    for (int d = 0; d <= D && !witnessed; ++d) {
      std::vector<Matrix<K>> all, rest;
      for (std::size_t i = 0; i < decomp.components.size(); ++i) {
        Matrix<K> q = power_cospace(decomp.components[i].prime.span,
                                    decomp.components[i].exponent, d);
        all.push_back(q);
        if (i != skip) rest.push_back(std::move(q));
      }
      const std::size_t ambient = graded_dim(sigma.nvars, d);
      if (kernel_of_stack(rest, ambient).dim() >
          kernel_of_stack(all, ambient).dim())
        witnessed = true;
    }
    if (!witnessed) {
      r.equal = false;
      r.verdict = Verdict::failed;
      r.detail = "component " + std::to_string(skip) +
                 " shows no witness up to degree " + std::to_string(D);
      return r;
    }
  }
  r.verdict = Verdict::verified;
  return r;
}

}  // namespace foldprod

#endif
