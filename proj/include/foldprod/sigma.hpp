#ifndef FOLDPROD_SIGMA_HPP
#define FOLDPROD_SIGMA_HPP

/**
 * @file sigma.hpp
 * @brief Weighted collections of linear forms and their numerical profiles.
 *
 * A collection is a multiset of linear forms: canonically scaled, pairwise
 * non-proportional entries each carrying a positive multiplicity.  The
 * collection is also viewed as a linear code whose generator matrix has one
 * column per form copy; the generalized Hamming weights of that code control
 * the heights of all the fold-product ideals of the collection.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "foldprod/matrix.hpp"
#include "foldprod/poly.hpp"

namespace foldprod {

template <ExactField K>
struct WeightedForm {
  LinearForm<K> form;
  int multiplicity = 1;

  friend bool operator==(const WeightedForm&, const WeightedForm&) = default;
};

template <ExactField K>
struct FormCollection {
  int nvars = 0;
  std::vector<WeightedForm<K>> entries;  // canonical, pairwise distinct

  int support_size() const { return static_cast<int>(entries.size()); }

  /// N: the number of forms counted with multiplicity.
  int total_multiplicity() const {
    int n = 0;
    for (const auto& e : entries) n += e.multiplicity;
    return n;
  }

  friend bool operator==(const FormCollection&, const FormCollection&) = default;
};

/// Canonicalizes every form, merges proportional entries (multiplicities
/// add), and keeps first-seen order.  Multiplicities must be positive.
template <ExactField K>
FormCollection<K> build_collection(
    int nvars, const std::vector<std::pair<std::vector<K>, int>>& raw) {
  FormCollection<K> sigma;
  sigma.nvars = nvars;
  for (const auto& [coeffs, mult] : raw) {
    if (static_cast<int>(coeffs.size()) != nvars)
      throw DimensionError("form has wrong number of coefficients");
    if (mult < 1) throw DimensionError("multiplicities must be positive");
    LinearForm<K> f = canonical_form(coeffs);
    auto it = std::find_if(sigma.entries.begin(), sigma.entries.end(),
                           [&](const WeightedForm<K>& w) { return w.form == f; });
    if (it != sigma.entries.end()) {
      it->multiplicity += mult;
    } else {
      sigma.entries.push_back({std::move(f), mult});
    }
  }
  if (sigma.entries.empty()) throw DimensionError("empty collection");
  return sigma;
}

/// Support coefficient matrix: one row per distinct form.
template <ExactField K>
Matrix<K> support_matrix(const FormCollection<K>& sigma) {
  Matrix<K> m(0, sigma.nvars);
  for (const auto& e : sigma.entries)
    m.append_row(std::span<const K>(e.form.coeffs));
  return m;
}

template <ExactField K>
int rank_of(const FormCollection<K>& sigma) {
  Matrix<K> m = support_matrix(sigma);
  return static_cast<int>(rref_in_place(m).size());
}

namespace detail {

/// Visits every subset of {0..s-1} of the given size, in lexicographic order.
template <typename Fn>
void for_each_subset(int s, int size, Fn&& fn) {
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  if (size > s) return;
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    int i = size - 1;
    while (i >= 0 && idx[i] == static_cast<std::size_t>(s - size + i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <ExactField K>
RowSpace<K> span_of_support(const FormCollection<K>& sigma,
                            const std::vector<std::size_t>& subset) {
  Matrix<K> m(0, sigma.nvars);
  for (std::size_t i : subset)
    m.append_row(std::span<const K>(sigma.entries[i].form.coeffs));
  return row_space(std::move(m));
}

}  // namespace detail

/**
 * Generic support: every subset of the support of size min(rank, s) is
 * linearly independent.  Checked exhaustively; collections here are small.
 */
template <ExactField K>
bool is_generic_support(const FormCollection<K>& sigma) {
  const int s = sigma.support_size();
  const int rk = rank_of(sigma);
  const int k = std::min(rk, s);
  bool generic = true;
  detail::for_each_subset(s, k, [&](const std::vector<std::size_t>& subset) {
    if (!generic) return;
    if (static_cast<int>(detail::span_of_support(sigma, subset).dim()) != k)
      generic = false;
  });
  return generic;
}

/**
 * Projection of a rank-deficient collection onto the pivot coordinates of
 * its span.  Each form is rewritten in the RREF basis of the span, which is
 * exactly the restriction to the pivot columns; every linear-algebraic
 * relation among the forms is preserved.
 */
template <ExactField K>
struct Reembedding {
  FormCollection<K> collection;      // lives in rank-many variables
  std::vector<std::size_t> kept_coords;  // pivot columns of the original span
};

template <ExactField K>
Reembedding<K> reembed(const FormCollection<K>& sigma) {
  Matrix<K> m = support_matrix(sigma);
  const std::vector<std::size_t> pivots = rref_in_place(m);
  const int r = static_cast<int>(pivots.size());
  std::vector<std::pair<std::vector<K>, int>> raw;
  for (const auto& e : sigma.entries) {
    std::vector<K> proj(r);
    for (int j = 0; j < r; ++j) proj[j] = e.form.coeffs[pivots[j]];
    raw.emplace_back(std::move(proj), e.multiplicity);
  }
  return {build_collection(r, raw), pivots};
}

/**
 * Generalized Hamming weights d_1 < ... < d_k of the code generated by the
 * collection's columns (k = nvars = the code dimension; the collection must
 * have full rank).  N - d_r is the largest number of columns, counted with
 * multiplicity, lying in a subspace of dimension nvars - r; closures of
 * support subsets realize every maximizer, so subsets of the support are
 * enumerated and weighted by the total multiplicity inside their span.
 */
template <ExactField K>
std::vector<int> generalized_hamming_weights(const FormCollection<K>& sigma) {
  const int nvars = sigma.nvars;
  if (rank_of(sigma) != nvars)
    throw HypothesisError(
        "hamming weights need a full-rank collection; re-embed first");
  const int s = sigma.support_size();
  const int n_total = sigma.total_multiplicity();

  // best[t] = max multiplicity-weight of a support subset of span dimension
  // <= t
  std::vector<int> best(nvars + 1, 0);
  for (int size = 1; size <= s; ++size) {
    detail::for_each_subset(s, size, [&](const std::vector<std::size_t>& subset) {
      RowSpace<K> span = detail::span_of_support(sigma, subset);
      const int t = static_cast<int>(span.dim());
      int weight = 0;
      for (const auto& e : sigma.entries)
        if (contains(span, std::span<const K>(e.form.coeffs)))
          weight += e.multiplicity;
      for (int u = t; u <= nvars; ++u) best[u] = std::max(best[u], weight);
    });
  }

  std::vector<int> weights(nvars);
  for (int r = 1; r <= nvars; ++r) weights[r - 1] = n_total - best[nvars - r];
  for (int r = 1; r < nvars; ++r) {
    if (weights[r - 1] >= weights[r])
      throw Error("hamming weights failed to strictly increase");
  }
  return weights;
}

/**
 * Heights of the fold ideals I_a for a = 1..N: with d_0 = 0, the height is
 * nvars + 1 - r on the window d_{r-1} < a <= d_r.  Rank-deficient
 * collections are re-embedded internally; heights are insensitive to that.
 */
template <ExactField K>
std::vector<int> height_profile(const FormCollection<K>& sigma) {
  const FormCollection<K>* use = &sigma;
  Reembedding<K> re;
  if (rank_of(sigma) != sigma.nvars) {
    re = reembed(sigma);
    use = &re.collection;
  }
  const std::vector<int> d = generalized_hamming_weights(*use);
  const int n_total = use->total_multiplicity();
  std::vector<int> heights(n_total);
  int r = 1;
  for (int a = 1; a <= n_total; ++a) {
    while (a > d[r - 1]) ++r;  // d_k = N for k = nvars, so r stays in range
    heights[a - 1] = use->nvars + 1 - r;
  }
  return heights;
}

template <ExactField K>
struct CodeProfile {
  Matrix<K> generator_matrix;  // one column per form copy
  std::vector<int> weights;
  std::vector<int> heights;
};

template <ExactField K>
CodeProfile<K> code_profile(const FormCollection<K>& sigma) {
  CodeProfile<K> out;
  Matrix<K> cols(sigma.nvars, sigma.total_multiplicity());
  std::size_t c = 0;
  for (const auto& e : sigma.entries) {
    for (int rep = 0; rep < e.multiplicity; ++rep) {
      for (int i = 0; i < sigma.nvars; ++i) cols(i, c) = e.form.coeffs[i];
      ++c;
    }
  }
  out.generator_matrix = std::move(cols);
  out.weights = generalized_hamming_weights(sigma);
  out.heights = height_profile(sigma);
  return out;
}

}  // namespace foldprod

#endif
