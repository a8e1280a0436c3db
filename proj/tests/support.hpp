#ifndef FOLDPROD_TESTS_SUPPORT_HPP
#define FOLDPROD_TESTS_SUPPORT_HPP

#include <algorithm>
#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "foldprod/field.hpp"
#include "foldprod/matrix.hpp"
#include "foldprod/monomial.hpp"
#include "foldprod/poly.hpp"
#include "foldprod/sigma.hpp"

namespace testsupport {

using BigInt = boost::multiprecision::mpz_int;

/// Restores the prime-field modulus on scope exit so test cases that change
/// it cannot leak state into later cases.
class ModulusGuard {
 public:
  explicit ModulusGuard(std::uint64_t p) : saved_(foldprod::Fp64::modulus()) {
    foldprod::Fp64::set_modulus(p);
  }
  ~ModulusGuard() { foldprod::Fp64::set_modulus(saved_); }
  ModulusGuard(const ModulusGuard&) = delete;
  ModulusGuard& operator=(const ModulusGuard&) = delete;

 private:
  std::uint64_t saved_;
};

/**
 * Rank of an integer matrix by fraction-free (Bareiss) elimination over
 * arbitrary-precision integers.  Shares no code with the library's row
 * reduction, so agreement is a genuine cross-check.
 */
inline std::size_t bareiss_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * m[rank][c] - m[i][c] * m[rank][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

template <foldprod::ExactField K>
foldprod::Matrix<K> matrix_from_ints(
    const std::vector<std::vector<long long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  foldprod::Matrix<K> m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = K(rows[i][j]);
  return m;
}

inline std::vector<std::vector<BigInt>> big_from_ints(
    const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<BigInt>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

inline std::vector<std::vector<long long>> random_int_matrix(
    std::mt19937_64& rng, std::size_t rows, std::size_t cols, long long lo,
    long long hi) {
  std::uniform_int_distribution<long long> dist(lo, hi);
  std::vector<std::vector<long long>> out(rows, std::vector<long long>(cols));
  for (auto& r : out)
    for (auto& x : r) x = dist(rng);
  return out;
}

template <foldprod::ExactField K>
foldprod::FormCollection<K> collection_from_ints(
    int nvars,
    const std::vector<std::pair<std::vector<long long>, int>>& raw) {
  std::vector<std::pair<std::vector<K>, int>> conv;
  conv.reserve(raw.size());
  for (const auto& [coeffs, mult] : raw) {
    std::vector<K> row;
    row.reserve(coeffs.size());
    for (long long v : coeffs) row.emplace_back(v);
    conv.emplace_back(std::move(row), mult);
  }
  return foldprod::build_collection<K>(nvars, conv);
}

template <foldprod::ExactField K>
K eval_poly(const foldprod::Poly<K>& f, const std::vector<K>& point) {
  K total{0};
  for (const auto& [e, c] : f.terms()) {
    K term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

/// Falling factorial e (e-1) ... (e-a+1); the coefficient produced by
/// differentiating x^e exactly a times.
inline long long falling_factorial(int e, int a) {
  long long out = 1;
  for (int k = 0; k < a; ++k) out *= e - k;
  return a > e ? 0 : out;
}

inline void enumerate_multi_indices(int nvars, int total,
                                    std::vector<int>& cur, std::size_t pos,
                                    std::vector<std::vector<int>>& out) {
  if (pos + 1 == static_cast<std::size_t>(nvars)) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur[pos] = v;
    enumerate_multi_indices(nvars, total - v, cur, pos + 1, out);
  }
}

inline std::vector<std::vector<int>> multi_indices_up_to(int nvars,
                                                         int max_order) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nvars, 0);
  for (int total = 0; total <= max_order; ++total)
    enumerate_multi_indices(nvars, total, cur, 0, out);
  return out;
}

/**
 * Degree-d polynomials all of whose partial derivatives of order < m vanish
 * at every listed point.  This is the classical description of the m-th
 * symbolic power of a finite set of reduced points in characteristic zero,
 * computed here from scratch: one linear condition per (point, derivative)
 * pair, solution space extracted as a kernel.
 */
inline foldprod::RowSpace<foldprod::Rat> vanishing_space_by_derivatives(
    const std::vector<std::vector<foldprod::Rat>>& points, int m, int d,
    int nvars) {
  using foldprod::Rat;
  const auto& basis = foldprod::monomial_basis(nvars, d);
  foldprod::Matrix<Rat> rows(0, basis.size());
  const auto orders = multi_indices_up_to(nvars, m - 1);
  std::vector<Rat> row(basis.size());
  for (const auto& p : points) {
    for (const auto& alpha : orders) {
      for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& e = basis[col];
        Rat value{1};
        bool zero = false;
        for (int i = 0; i < nvars && !zero; ++i) {
          const long long ff = falling_factorial(e[i], alpha[i]);
          if (ff == 0) {
            zero = true;
            break;
          }
          value *= Rat(ff);
          for (int k = 0; k < e[i] - alpha[i]; ++k) value *= p[i];
        }
        row[col] = zero ? Rat{0} : value;
      }
      rows.append_row(row);
    }
  }
  return foldprod::kernel(std::move(rows));
}

/// Random form collection for property tests.  Coefficients are small
/// integers; with force_degenerate (and at least three variables) one entry
/// is replaced by the sum of two others so the support cannot be generic.
template <foldprod::ExactField K>
foldprod::FormCollection<K> random_collection(std::mt19937_64& rng, int nvars,
                                              int support, int max_mult,
                                              bool force_degenerate) {
  std::uniform_int_distribution<long long> coeff(-2, 2);
  std::uniform_int_distribution<int> mult(1, max_mult);
  std::vector<std::pair<std::vector<long long>, int>> raw;
  while (static_cast<int>(raw.size()) < support) {
    std::vector<long long> c(nvars);
    bool all_zero = true;
    for (auto& x : c) {
      x = coeff(rng);
      if (x != 0) all_zero = false;
    }
    if (all_zero) continue;
    raw.emplace_back(std::move(c), mult(rng));
  }
  if (force_degenerate && nvars >= 3 && support >= 3) {
    for (int i = 0; i < nvars; ++i)
      raw[2].first[i] = raw[0].first[i] + raw[1].first[i];
    if (std::all_of(raw[2].first.begin(), raw[2].first.end(),
                    [](long long v) { return v == 0; }))
      raw[2].first[0] = 1;
  }
  return collection_from_ints<K>(nvars, raw);
}

}  // namespace testsupport

#endif
