#ifndef FOLDPROD_GRADED_HPP
#define FOLDPROD_GRADED_HPP

/**
 * @file graded.hpp
 * @brief Degreewise ideal arithmetic.
 *
 * A homogeneous ideal is manipulated through its graded pieces I_d, each a
 * RowSpace in the coordinates of the fixed monomial basis of R_d.  All
 * equalities and containments of ideals are certified degree by degree up to
 * an explicit bound; nothing here uses Groebner bases.
 */

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "foldprod/matrix.hpp"
#include "foldprod/monomial.hpp"
#include "foldprod/poly.hpp"

namespace foldprod {

template <ExactField K>
struct GradedPiece {
  int nvars = 0;
  int degree = 0;
  RowSpace<K> space;  // ambient = graded_dim(nvars, degree)

  std::size_t dim() const { return space.dim(); }

  friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

template <ExactField K>
GradedPiece<K> zero_piece(int nvars, int degree) {
  return {nvars, degree, zero_space<K>(graded_dim(nvars, degree))};
}

template <ExactField K>
GradedPiece<K> full_piece(int nvars, int degree) {
  return {nvars, degree, full_space<K>(graded_dim(nvars, degree))};
}

/// Homogeneous, nonzero generators of an ideal.
template <ExactField K>
using GeneratorSet = std::vector<Poly<K>>;

template <ExactField K>
void validate_generators(const GeneratorSet<K>& gens, int nvars) {
  for (const Poly<K>& g : gens) {
    if (g.nvars() != nvars) throw DimensionError("generator in wrong ring");
    if (g.is_zero()) throw DimensionError("zero generator");
    if (!g.is_homogeneous()) throw DimensionError("inhomogeneous generator");
  }
}

/**
 * Multiplication by a homogeneous f of degree e as a matrix R_d -> R_{d+e};
 * column j is the coefficient vector of f * (j-th degree-d monomial).
 */
template <ExactField K>
Matrix<K> mult_map(const Poly<K>& f, int d) {
  if (f.is_zero() || !f.is_homogeneous())
    throw DimensionError("mult_map needs a nonzero homogeneous polynomial");
  const int nvars = f.nvars();
  const int e = f.degree();
  const std::vector<Expo>& source = monomial_basis(nvars, d);
  Matrix<K> m(graded_dim(nvars, d + e), source.size());
  Expo shifted(nvars);
  for (std::size_t j = 0; j < source.size(); ++j) {
    for (const auto& [mono, c] : f.terms()) {
      for (int i = 0; i < nvars; ++i) shifted[i] = mono[i] + source[j][i];
      m(monomial_index(nvars, shifted), j) += c;
    }
  }
  return m;
}

/// The degree-d piece of the ideal generated by `gens`: the span of all
/// monomial shifts of the generators into degree d.
template <ExactField K>
GradedPiece<K> span_in_degree(const GeneratorSet<K>& gens, int nvars, int d) {
  validate_generators(gens, nvars);
  const std::size_t ambient = graded_dim(nvars, d);
  Matrix<K> rows(0, ambient);
  std::vector<K> row(ambient, K{0});
  Expo shifted(nvars);
  for (const Poly<K>& g : gens) {
    const int e = g.degree();
    if (e > d) continue;
    for (const Expo& shift : monomial_basis(nvars, d - e)) {
      std::fill(row.begin(), row.end(), K{0});
      for (const auto& [mono, c] : g.terms()) {
        for (int i = 0; i < nvars; ++i) shifted[i] = mono[i] + shift[i];
        row[monomial_index(nvars, shifted)] += c;
      }
      rows.append_row(row);
    }
  }
  return {nvars, d, row_space(std::move(rows))};
}

template <ExactField K>
std::size_t hilbert_fn(const GeneratorSet<K>& gens, int nvars, int d) {
  return span_in_degree(gens, nvars, d).dim();
}

template <ExactField K>
std::size_t quotient_dim(const GeneratorSet<K>& gens, int nvars, int d) {
  return graded_dim(nvars, d) - hilbert_fn(gens, nvars, d);
}

/// (I : f)_d = { g in R_d : f g in I_{d+deg f} } for homogeneous f, computed
/// as the preimage of I_{d+deg f} under the multiplication map.
template <ExactField K>
GradedPiece<K> colon_piece(const GeneratorSet<K>& gens, int nvars,
                           const Poly<K>& f, int d) {
  if (f.is_zero() || !f.is_homogeneous())
    throw DimensionError("colon by a nonzero homogeneous polynomial only");
  GradedPiece<K> target = span_in_degree(gens, nvars, d + f.degree());
  return {nvars, d, preimage(mult_map(f, d), target.space)};
}

template <ExactField K>
GradedPiece<K> colon_piece(const GeneratorSet<K>& gens, int nvars,
                           const LinearForm<K>& f, int d) {
  return colon_piece(gens, nvars, to_poly(f), d);
}

struct GenDegreeProfile {
  std::vector<std::pair<int, std::size_t>> counts;  // (degree, #min gens), ascending
  bool equigenerated = false;       // all minimal generators in one degree
  std::optional<int> single_degree; // that degree, when equigenerated

  std::size_t count_in(int d) const {
    for (const auto& [deg, c] : counts)
      if (deg == d) return c;
    return 0;
  }
};

/**
 * Number of minimal generators in each degree up to D: the codimension of
 * R_1 * I_{d-1} inside I_d.  The bound D must reach the top generator degree
 * of the input for the equigeneration flag to mean anything; generating sets
 * may be redundant.
 */
template <ExactField K>
GenDegreeProfile min_gen_degrees(const GeneratorSet<K>& gens, int nvars, int D) {
  validate_generators(gens, nvars);
  GenDegreeProfile out;
  GradedPiece<K> prev = span_in_degree(gens, nvars, 0);
  for (int d = 1; d <= D; ++d) {
    GradedPiece<K> cur = span_in_degree(gens, nvars, d);
    // span of x_i * (basis of I_{d-1}) over all variables
    const std::size_t ambient = graded_dim(nvars, d);
    Matrix<K> rows(0, ambient);
    std::vector<K> row(ambient, K{0});
    const std::vector<Expo>& lower = monomial_basis(nvars, d - 1);
    for (int v = 0; v < nvars; ++v) {
      for (std::size_t r = 0; r < prev.space.basis.rows(); ++r) {
        std::fill(row.begin(), row.end(), K{0});
        for (std::size_t c = 0; c < lower.size(); ++c) {
          const K& x = prev.space.basis(r, c);
          if (x == K{0}) continue;
          Expo shifted = lower[c];
          ++shifted[v];
          row[monomial_index(nvars, shifted)] += x;
        }
        rows.append_row(row);
      }
    }
    const std::size_t lifted = row_space(std::move(rows)).dim();
    if (cur.dim() > lifted) out.counts.emplace_back(d, cur.dim() - lifted);
    prev = std::move(cur);
  }
  // degree-0 generators (the unit ideal) show up as a nonzero piece at d = 0
  if (hilbert_fn(gens, nvars, 0) == 1)
    out.counts.insert(out.counts.begin(), {0, 1});
  out.equigenerated = out.counts.size() == 1;
  if (out.equigenerated) out.single_degree = out.counts.front().first;
  return out;
}

/**
 * Dual ("cokernel") form of the degree-d piece of a power of an ideal of
 * linear forms: a matrix Q with (p^e)_d = ker Q.  Q has one row for each
 * residue monomial of (R / p^e)_d, so for small codimension or small e this
 * is far smaller than a basis of the piece itself.
 *
 * Construction: complete the forms to a coordinate system (y_1..y_c given by
 * the RREF basis of the span, u's the non-pivot coordinates), rewrite each
 * degree-d monomial in those coordinates, and record the part of y-degree
 * < e.  A polynomial lies in (p^e)_d iff that truncation vanishes.
 */
template <ExactField K>
Matrix<K> power_cospace(const RowSpace<K>& span, int exponent, int degree) {
  const int nvars = static_cast<int>(span.ambient);
  const int c = static_cast<int>(span.dim());
  if (exponent < 1) throw DimensionError("power_cospace needs exponent >= 1");

  // Coordinate change w = A x with A = [span basis; unit rows], then invert.
  Matrix<K> a(nvars, nvars);
  std::vector<bool> is_pivot(nvars, false);
  for (std::size_t p : span.pivots) is_pivot[p] = true;
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < nvars; ++j) a(i, j) = span.basis(i, j);
  {
    int r = c;
    for (int q = 0; q < nvars; ++q) {
      if (is_pivot[q]) continue;
      a(r, q) = K{1};
      ++r;
    }
  }
  // invert via RREF of [A | I]
  Matrix<K> aug(nvars, 2 * nvars);
  for (int i = 0; i < nvars; ++i) {
    for (int j = 0; j < nvars; ++j) aug(i, j) = a(i, j);
    aug(i, nvars + i) = K{1};
  }
  if (rref_in_place(aug).size() != static_cast<std::size_t>(nvars))
    throw DimensionError("degenerate coordinate change");
  // substitution forms: x_i = sum_j inv(i,j) w_j
  std::vector<std::vector<K>> subst(nvars, std::vector<K>(nvars));
  for (int i = 0; i < nvars; ++i)
    for (int j = 0; j < nvars; ++j) subst[i][j] = aug(i, nvars + j);

  const auto y_degree = [c](const Expo& e) {
    int t = 0;
    for (int i = 0; i < c; ++i) t += e[i];
    return t;
  };

  const std::vector<Expo>& basis = monomial_basis(nvars, degree);
  // rows of Q: degree-d monomials in w with y-degree < exponent
  std::vector<std::size_t> row_of(basis.size(), SIZE_MAX);
  std::size_t nrows = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (y_degree(basis[i]) < exponent) row_of[i] = nrows++;

  Matrix<K> q(nrows, basis.size());
  using Terms = std::map<Expo, K>;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    // expand prod_i (subst x_i)^{e_i}, truncating y-degree >= exponent
    Terms acc;
    acc.emplace(Expo(nvars, 0), K{1});
    for (int var = 0; var < nvars && !acc.empty(); ++var) {
      for (int rep = 0; rep < basis[col][var]; ++rep) {
        Terms next;
        for (const auto& [e, coef] : acc) {
          for (int j = 0; j < nvars; ++j) {
            const K& s = subst[var][j];
            if (s == K{0}) continue;
            Expo e2 = e;
            ++e2[j];
            if (y_degree(e2) >= exponent) continue;
            auto [it, fresh] = next.try_emplace(e2, K{0});
            it->second += coef * s;
            if (it->second == K{0}) next.erase(it);
          }
        }
        acc = std::move(next);
      }
    }
    for (const auto& [e, coef] : acc)
      q(row_of[monomial_index(nvars, e)], col) = coef;
  }
  return q;
}

/// Intersection of pieces given in dual form: ker of the stacked rows.
template <ExactField K>
RowSpace<K> kernel_of_stack(const std::vector<Matrix<K>>& cospaces,
                            std::size_t ambient) {
  Matrix<K> stack(0, ambient);
  for (const Matrix<K>& q : cospaces) {
    if (q.cols() != ambient) throw DimensionError("cospace ambient mismatch");
    for (std::size_t i = 0; i < q.rows(); ++i) stack.append_row(q.row(i));
  }
  if (stack.rows() == 0) return full_space<K>(ambient);
  return kernel(std::move(stack));
}

/**
 * Degreewise saturation oracle: (I : m^k)_d for the irrelevant ideal m and
 * the first k at which the chain stabilizes.  Independent of any structural
 * decomposition; under-saturation is impossible to mistake for success in
 * the verifications that consume this, since it can only shrink the result.
 *
 * (I : m^k)_d is the kernel of the stacked maps g -> (mu g mod I_{d+k}) over
 * all degree-k monomials mu.
 */
template <ExactField K>
GradedPiece<K> saturation_piece(const GeneratorSet<K>& gens, int nvars, int d,
                                int stabilize_floor = 0, int step_cap = 32) {
  const std::size_t ambient = graded_dim(nvars, d);
  const auto piece_at = [&](int k) -> RowSpace<K> {
    if (k == 0) return span_in_degree(gens, nvars, d).space;
    GradedPiece<K> target = span_in_degree(gens, nvars, d + k);
    Matrix<K> qt = cospace_matrix(target.space);
    Matrix<K> stack(0, ambient);
    for (const Expo& mu : monomial_basis(nvars, k)) {
      Matrix<K> rows = qt * mult_map(Poly<K>::monomial(mu), d);
      for (std::size_t i = 0; i < rows.rows(); ++i) stack.append_row(rows.row(i));
    }
    if (stack.rows() == 0) return full_space<K>(ambient);
    return kernel(std::move(stack));
  };

  RowSpace<K> prev = piece_at(0);
  for (int k = 1; k <= step_cap; ++k) {
    RowSpace<K> cur = piece_at(k);
    if (cur == prev && k > stabilize_floor) return {nvars, d, std::move(cur)};
    prev = std::move(cur);
  }
  throw BoundError("saturation did not stabilize within the step cap");
}

}  // namespace foldprod

#endif
