#ifndef FOLDPROD_FOLD_HPP
#define FOLDPROD_FOLD_HPP

/**
 * @file fold.hpp
 * @brief Ideals generated by the a-fold products of a weighted collection of
 *        linear forms.
 *
 * The generators of I_a are indexed by the bounded compositions t of a
 * (0 <= t_i <= m_i, sum t_i = a): one product prod_i l_i^{t_i} per t.  The
 * expanded polynomials are built lazily and cached, once per exponent
 * vector; the cache is shared across copies and safe for concurrent reads.
 */

#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <vector>

#include "foldprod/graded.hpp"
#include "foldprod/sigma.hpp"

namespace foldprod {

template <ExactField K>
class FoldIdeal {
 public:
  FoldIdeal(FormCollection<K> sigma, int a)
      : sigma_(std::move(sigma)), fold_(a), cache_(std::make_shared<Cache>()) {
    if (a < 0) throw DimensionError("negative fold");
    enumerate_exponents();
    cache_->slots.resize(exponents_.size());
  }

  const FormCollection<K>& collection() const { return sigma_; }
  int fold() const { return fold_; }
  int nvars() const { return sigma_.nvars; }

  /// a = 0: the unit ideal (one empty product).
  bool is_unit() const { return fold_ == 0; }
  /// a > N: no products exist, the zero ideal.
  bool is_zero() const { return exponents_.empty() && fold_ > 0; }

  const std::vector<std::vector<int>>& generator_exponents() const {
    return exponents_;
  }

  /// The expanded product for one exponent vector, cached.
  const Poly<K>& generator(std::size_t idx) const {
    {
      std::shared_lock lock(cache_->mu);
      if (cache_->slots[idx]) return *cache_->slots[idx];
    }
    std::unique_lock lock(cache_->mu);
    if (!cache_->slots[idx]) {
      cache_->slots[idx] =
          std::make_unique<Poly<K>>(expand_product(sigma_, exponents_[idx]));
    }
    return *cache_->slots[idx];
  }

  GeneratorSet<K> generators() const {
    GeneratorSet<K> out;
    out.reserve(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i) out.push_back(generator(i));
    return out;
  }

  GradedPiece<K> piece(int d) const {
    if (is_zero()) return zero_piece<K>(nvars(), d);
    return span_in_degree(generators(), nvars(), d);
  }

  /// prod_i l_i^{t_i} for any exponent vector over the collection.
  static Poly<K> expand_product(const FormCollection<K>& sigma,
                                const std::vector<int>& t) {
    Poly<K> p = Poly<K>::constant(sigma.nvars, K{1});
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Poly<K> f = to_poly(sigma.entries[i].form);
      for (int rep = 0; rep < t[i]; ++rep) p = p * f;
    }
    return p;
  }

 private:
  struct Cache {
    mutable std::shared_mutex mu;
    std::vector<std::unique_ptr<const Poly<K>>> slots;
  };

  void enumerate_exponents() {
    const int s = sigma_.support_size();
    std::vector<int> t(s, 0);
    walk(t, 0, fold_);
  }

  void walk(std::vector<int>& t, int pos, int remaining) {
    if (pos == static_cast<int>(t.size())) {
      if (remaining == 0) exponents_.push_back(t);
      return;
    }
    const int cap = std::min(remaining, sigma_.entries[pos].multiplicity);
    for (int e = 0; e <= cap; ++e) {
      t[pos] = e;
      walk(t, pos + 1, remaining - e);
      t[pos] = 0;
    }
  }

  FormCollection<K> sigma_;
  int fold_ = 0;
  std::vector<std::vector<int>> exponents_;
  std::shared_ptr<Cache> cache_;
};

template <ExactField K>
FoldIdeal<K> fold_generators(const FormCollection<K>& sigma, int a) {
  return FoldIdeal<K>(sigma, a);
}

/// Collection with one copy of entry `index` removed (entry dropped at
/// multiplicity zero).
template <ExactField K>
FormCollection<K> remove_one_copy(const FormCollection<K>& sigma,
                                  std::size_t index) {
  if (index >= sigma.entries.size()) throw DimensionError("bad entry index");
  FormCollection<K> out = sigma;
  if (--out.entries[index].multiplicity == 0)
    out.entries.erase(out.entries.begin() + static_cast<std::ptrdiff_t>(index));
  if (out.entries.empty()) throw DimensionError("collection became empty");
  return out;
}

/// Collection with every multiplicity scaled by m.
template <ExactField K>
FormCollection<K> scale_multiplicities(const FormCollection<K>& sigma, int m) {
  if (m < 1) throw DimensionError("scale factor must be positive");
  FormCollection<K> out = sigma;
  for (auto& e : out.entries) e.multiplicity *= m;
  return out;
}

/**
 * Splitting off one copy of the last entry: the degree-d pieces of I_a(S)
 * and of l * I_{a-1}(S') + I_a(S') must agree, where S' is S minus that
 * copy.  Checked for every degree up to D.
 */
template <ExactField K>
bool recursion_identity_check(const FormCollection<K>& sigma, int a,
                              std::size_t split_index, int D) {
  if (a < 1) throw DimensionError("fold must be >= 1");
  if (split_index >= sigma.entries.size())
    throw DimensionError("bad split index");
  const Poly<K> ell = to_poly(sigma.entries[split_index].form);
  const FormCollection<K> rest = remove_one_copy(sigma, split_index);
  const FoldIdeal<K> whole(sigma, a);
  const FoldIdeal<K> lower(rest, a - 1);
  const FoldIdeal<K> same(rest, a);
  for (int d = 0; d <= D; ++d) {
    const GradedPiece<K> lhs = whole.piece(d);
    RowSpace<K> rhs = same.piece(d).space;
    if (d >= 1) {
      const GradedPiece<K> low = lower.piece(d - 1);
      rhs = subspace_sum(rhs, apply_map(mult_map(ell, d - 1), low.space));
    }
    if (!(lhs.space == rhs)) return false;
  }
  return true;
}

/// Deduplicated exponent vectors of all m-fold products of the generators:
/// the definitional generating set of (I_a)^m.
template <ExactField K>
std::vector<std::vector<int>> power_product_exponents(const FoldIdeal<K>& ideal,
                                                      int m) {
  if (m < 1) throw DimensionError("power must be >= 1");
  const auto& gens = ideal.generator_exponents();
  const int s = ideal.collection().support_size();
  std::set<std::vector<int>> sums;
  std::vector<int> acc(s, 0);
  // multisets of m generator indices
  const std::size_t g = gens.size();
  std::vector<std::size_t> pick(m, 0);
  if (g == 0) return {};
  while (true) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t idx : pick)
      for (int i = 0; i < s; ++i) acc[i] += gens[idx][i];
    sums.insert(acc);
    int i = m - 1;
    while (i >= 0 && pick[i] == g - 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[i];
  }
  return {sums.begin(), sums.end()};
}

template <ExactField K>
GeneratorSet<K> power_generators(const FoldIdeal<K>& ideal, int m) {
  GeneratorSet<K> out;
  for (const auto& t : power_product_exponents(ideal, m))
    out.push_back(FoldIdeal<K>::expand_product(ideal.collection(), t));
  return out;
}

/**
 * (I_a(S))^m and I_{ma}(S^m) must have the same pieces in every degree up to
 * D, where S^m scales all multiplicities by m.  The left side uses the
 * definitional product generators, the right side bounded compositions.
 */
template <ExactField K>
bool power_identity_check(const FormCollection<K>& sigma, int a, int m, int D) {
  if (a < 1) throw DimensionError("fold must be >= 1");
  const FoldIdeal<K> base(sigma, a);
  const FoldIdeal<K> scaled(scale_multiplicities(sigma, m), m * a);
  const GeneratorSet<K> lhs_gens = power_generators(base, m);
  for (int d = 0; d <= D; ++d) {
    const RowSpace<K> lhs = lhs_gens.empty()
                                ? zero_space<K>(graded_dim(sigma.nvars, d))
                                : span_in_degree(lhs_gens, sigma.nvars, d).space;
    if (!(lhs == scaled.piece(d).space)) return false;
  }
  return true;
}

/**
 * Colon by the first form: (I_a(S) : l_1)_d must equal the degree-d piece of
 * I_{a-1}(S with one copy of l_1 removed), for every d up to D.  Only valid
 * for generic support, and refused otherwise.
 */
template <ExactField K>
bool colon_identity_check(const FormCollection<K>& sigma, int a, int D) {
  if (a < 1) throw DimensionError("fold must be >= 1");
  if (!is_generic_support(sigma))
    throw HypothesisError("colon identity requires generic support");
  const FoldIdeal<K> whole(sigma, a);
  const FoldIdeal<K> reduced(remove_one_copy(sigma, 0), a - 1);
  const Poly<K> ell = to_poly(sigma.entries[0].form);
  for (int d = 0; d <= D; ++d) {
    if (whole.is_zero()) {
      // colon of the zero ideal is zero; the reduced side must agree
      if (!(reduced.piece(d).space == zero_space<K>(graded_dim(sigma.nvars, d))))
        return false;
      continue;
    }
    const GradedPiece<K> lhs =
        colon_piece(whole.generators(), sigma.nvars, ell, d);
    if (!(lhs.space == reduced.piece(d).space)) return false;
  }
  return true;
}

}  // namespace foldprod

#endif
