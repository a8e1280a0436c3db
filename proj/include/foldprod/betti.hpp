#ifndef FOLDPROD_BETTI_HPP
#define FOLDPROD_BETTI_HPP

/**
 * @file betti.hpp
 * @brief Graded Betti numbers of R/J over an explicit window, computed from
 *        Koszul homology, with an independent simplicial cross-oracle for
 *        squarefree monomial ideals and a linear-resolution certificate.
 *
 * Conventions: entries are the Betti numbers of the quotient R/J, so a
 * proper ideal always yields a single homological-degree-0 entry at (0, 0).
 * An ideal equigenerated in degree a has linear resolution exactly when all
 * entries with i >= 1 sit on the diagonal j = i + a - 1.
 *
 * Every table is computed over the explicit window 0 <= i <= i_max,
 * 0 <= j <= degree_bound.  The homological direction is complete once
 * i_max >= nvars (syzygies stop there); the internal-degree direction is
 * certified heuristically by the table ending strictly inside the window,
 * and the linearity verdict additionally cross-checks an exact necessary
 * condition through saturation degrees, so a table that merely "looks
 * linear" inside too small a window cannot slip through.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "foldprod/graded.hpp"
#include "foldprod/matrix.hpp"
#include "foldprod/monomial.hpp"
#include "foldprod/poly.hpp"

namespace foldprod {

struct BettiTable {
  int nvars = 0;
  int i_max = 0;
  int degree_bound = 0;
  std::map<std::pair<int, int>, std::size_t> entries;  // nonzero values only

  std::size_t value(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  /// Largest internal degree j with a nonzero entry; -1 for the zero module.
  int max_internal_degree() const {
    int m = -1;
    for (const auto& [ij, v] : entries) m = std::max(m, ij.second);
    return m;
  }

  /// Largest homological degree i with a nonzero entry; -1 for the zero module.
  int max_homological_index() const {
    int m = -1;
    for (const auto& [ij, v] : entries) m = std::max(m, ij.first);
    return m;
  }

  /// The window provably covers all homological degrees (i_max >= nvars) and
  /// the nonzero entries end strictly inside the internal-degree range.
  bool window_certified() const {
    return i_max >= nvars && max_internal_degree() < degree_bound;
  }

  /// max(j - i) over nonzero entries.  Refuses to answer from an uncertified
  /// window; callers should enlarge the bounds instead of trusting a clipped
  /// table.
  int regularity() const {
    if (!window_certified())
      throw BoundError("Betti window too small to certify regularity");
    if (entries.empty()) throw Error("regularity of the zero module");
    int r = 0;
    for (const auto& [ij, v] : entries)
      r = std::max(r, ij.second - ij.first);
    return r;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

namespace detail {

/// Degree-e data of R/J: the RREF of J_e plus the induced coordinates on the
/// quotient (one per non-pivot monomial).
template <ExactField K>
struct QuotientLayer {
  RowSpace<K> ideal;
  std::vector<std::size_t> nonpivots;   // quotient coordinate -> ambient coord
  std::vector<long long> qindex;        // ambient coord -> quotient coordinate or -1
  std::vector<long long> pivot_row;     // ambient coord -> RREF row or -1

  std::size_t qdim() const { return nonpivots.size(); }
};

template <ExactField K>
std::vector<QuotientLayer<K>> build_quotient_layers(const GeneratorSet<K>& gens,
                                                    int nvars, int max_degree) {
  std::vector<QuotientLayer<K>> layers;
  layers.reserve(max_degree + 1);
  for (int e = 0; e <= max_degree; ++e) {
    QuotientLayer<K> layer;
    layer.ideal = span_in_degree(gens, nvars, e).space;
    const std::size_t ambient = layer.ideal.ambient;
    layer.qindex.assign(ambient, -1);
    layer.pivot_row.assign(ambient, -1);
    for (std::size_t i = 0; i < layer.ideal.pivots.size(); ++i)
      layer.pivot_row[layer.ideal.pivots[i]] = static_cast<long long>(i);
    for (std::size_t c = 0; c < ambient; ++c) {
      if (layer.pivot_row[c] >= 0) continue;
      layer.qindex[c] = static_cast<long long>(layer.nonpivots.size());
      layer.nonpivots.push_back(c);
    }
    layers.push_back(std::move(layer));
  }
  return layers;
}

/**
 * Multiplication by the variable x_v as a map (R/J)_e -> (R/J)_{e+1} in the
 * quotient coordinates.  Each column is the class of x_v times a quotient
 * basis monomial: itself when the shifted monomial is a non-pivot, and the
 * negated tail of the matching RREF row otherwise.
 */
template <ExactField K>
Matrix<K> quotient_mult(const QuotientLayer<K>& from, const QuotientLayer<K>& to,
                        int nvars, int e, int v) {
  const std::vector<Expo>& source = monomial_basis(nvars, e);
  Matrix<K> m(to.qdim(), from.qdim());
  for (std::size_t col = 0; col < from.qdim(); ++col) {
    Expo shifted = source[from.nonpivots[col]];
    ++shifted[v];
    const std::size_t c = monomial_index(nvars, shifted);
    if (to.qindex[c] >= 0) {
      m(static_cast<std::size_t>(to.qindex[c]), col) = K{1};
      continue;
    }
    const std::size_t row = static_cast<std::size_t>(to.pivot_row[c]);
    for (std::size_t q = 0; q < to.qdim(); ++q) {
      const K& x = to.ideal.basis(row, to.nonpivots[q]);
      if (!(x == K{0})) m(q, col) = -x;
    }
  }
  return m;
}

inline std::vector<std::vector<int>> subsets_of_size(int n, int size) {
  std::vector<std::vector<int>> out;
  if (size < 0 || size > n) return out;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/**
 * The exterior-algebra differential in internal degree j, homological degree
 * p: blocks indexed by p-subsets of the variables (columns) and their
 * (p-1)-subsets (rows), with alternating signs, entries from quotient_mult.
 * Its square is zero; the homology dimensions are the Betti numbers.
 */
template <ExactField K>
Matrix<K> koszul_boundary(const std::vector<QuotientLayer<K>>& layers, int nvars,
                          int p, int j) {
  const std::vector<std::vector<int>> dom = subsets_of_size(nvars, p);
  const std::vector<std::vector<int>> cod = subsets_of_size(nvars, p - 1);
  const int e = j - p;  // internal degree of the quotient factor in the domain
  const std::size_t dq = (e >= 0) ? layers[e].qdim() : 0;
  const std::size_t cq = (e + 1 >= 0) ? layers[e + 1].qdim() : 0;
  Matrix<K> m(cod.size() * cq, dom.size() * dq);
  if (e < 0 || dq == 0 || cq == 0) return m;

  std::map<std::vector<int>, std::size_t> cod_index;
  for (std::size_t t = 0; t < cod.size(); ++t) cod_index.emplace(cod[t], t);

  std::vector<Matrix<K>> mults(nvars);  // lazily filled per variable
  std::vector<bool> have(nvars, false);

  for (std::size_t s = 0; s < dom.size(); ++s) {
    for (std::size_t k = 0; k < dom[s].size(); ++k) {
      const int v = dom[s][k];
      std::vector<int> rest = dom[s];
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      const std::size_t t = cod_index.at(rest);
      if (!have[v]) {
        mults[v] = quotient_mult(layers[e], layers[e + 1], nvars, e, v);
        have[v] = true;
      }
      const bool negate = (k % 2) == 1;  // sign (-1)^k on the k-th slot
      for (std::size_t r = 0; r < cq; ++r)
        for (std::size_t c = 0; c < dq; ++c) {
          const K& x = mults[v](r, c);
          if (x == K{0}) continue;
          m(t * cq + r, s * dq + c) = negate ? -x : x;
        }
    }
  }
  return m;
}

template <ExactField K>
std::size_t rank_of_matrix(Matrix<K> m) {
  return rref_in_place(m).size();
}

}  // namespace detail

/**
 * Betti numbers of R/J over the window i <= i_max, j <= degree_bound,
 * computed as homology dimensions of the exterior-algebra complex tensored
 * with the quotient: each entry is a kernel dimension minus the rank of the
 * incoming differential.
 */
template <ExactField K>
BettiTable koszul_tor_dims(const GeneratorSet<K>& gens, int nvars, int i_max,
                           int degree_bound) {
  validate_generators(gens, nvars);
  if (i_max < 0 || degree_bound < 0) throw DimensionError("negative window");
  BettiTable table;
  table.nvars = nvars;
  table.i_max = i_max;
  table.degree_bound = degree_bound;

  const std::vector<detail::QuotientLayer<K>> layers =
      detail::build_quotient_layers(gens, nvars, degree_bound);

  // rank[p][j] of the differential leaving homological degree p
  const int p_top = std::min(i_max + 1, nvars);
  std::vector<std::vector<std::size_t>> rank(
      p_top + 1, std::vector<std::size_t>(degree_bound + 1, 0));
  for (int p = 1; p <= p_top; ++p)
    for (int j = 0; j <= degree_bound; ++j)
      if (j - p >= 0)
        rank[p][j] =
            detail::rank_of_matrix(detail::koszul_boundary(layers, nvars, p, j));

  const auto rank_at = [&](int p, int j) -> std::size_t {
    if (p < 1 || p > p_top || j < 0 || j > degree_bound) return 0;
    return rank[p][j];
  };

  for (int i = 0; i <= i_max; ++i) {
    const std::size_t choices =
        (i <= nvars) ? static_cast<std::size_t>(binomial(nvars, i)) : 0;
    for (int j = 0; j <= degree_bound; ++j) {
      const std::size_t qd = (j - i >= 0) ? layers[j - i].qdim() : 0;
      const long long domain = static_cast<long long>(choices * qd);
      const long long out_rank = static_cast<long long>(rank_at(i, j));
      const long long in_rank = static_cast<long long>(rank_at(i + 1, j));
      const long long beta = domain - out_rank - in_rank;
      if (beta < 0) throw Error("internal: negative homology dimension");
      if (beta > 0) table.entries[{i, j}] = static_cast<std::size_t>(beta);
    }
  }
  return table;
}

/**
 * Independent oracle for squarefree monomial ideals: Betti numbers from
 * reduced simplicial homology of induced subcomplexes of the complex whose
 * non-faces are the generator supports.  Same window conventions as above.
 */
template <ExactField K>
BettiTable hochster_oracle(const GeneratorSet<K>& gens, int nvars, int i_max,
                           int degree_bound) {
  validate_generators(gens, nvars);
  if (nvars > 20) throw DimensionError("simplicial oracle capped at 20 variables");
  std::vector<std::uint32_t> gen_masks;
  for (const Poly<K>& g : gens) {
    if (g.terms().size() != 1)
      throw HypothesisError("simplicial oracle needs monomial generators");
    const Expo& e = g.terms().begin()->first;
    std::uint32_t mask = 0;
    for (int v = 0; v < nvars; ++v) {
      if (e[v] > 1)
        throw HypothesisError("simplicial oracle needs squarefree generators");
      if (e[v] == 1) mask |= (1u << v);
    }
    if (mask == 0) throw HypothesisError("unit generator");
    gen_masks.push_back(mask);
  }

  const auto is_face = [&](std::uint32_t f) {
    for (std::uint32_t g : gen_masks)
      if ((g & ~f) == 0) return false;
    return true;
  };

  BettiTable table;
  table.nvars = nvars;
  table.i_max = i_max;
  table.degree_bound = degree_bound;
  table.entries[{0, 0}] = 1;

  const std::uint32_t all = (nvars == 32) ? ~0u : ((1u << nvars) - 1);
  for (std::uint32_t w = 0; w <= all; ++w) {
    const int j = std::popcount(w);
    if (j == 0 || j > degree_bound) continue;

    // chain groups by vertex count: group[t] = faces of W with t vertices
    std::vector<std::vector<std::uint32_t>> group(j + 1);
    group[0].push_back(0);  // the empty face (generators are never units)
    for (std::uint32_t sub = w; sub != 0; sub = (sub - 1) & w)
      if (is_face(sub)) group[std::popcount(sub)].push_back(sub);
    for (auto& g : group) std::sort(g.begin(), g.end());

    std::vector<std::size_t> ranks(j + 2, 0);  // boundary leaving group[t]
    for (int t = 1; t <= j; ++t) {
      if (group[t].empty() || group[t - 1].empty()) continue;
      std::map<std::uint32_t, std::size_t> target;
      for (std::size_t r = 0; r < group[t - 1].size(); ++r)
        target.emplace(group[t - 1][r], r);
      Matrix<K> b(group[t - 1].size(), group[t].size());
      for (std::size_t c = 0; c < group[t].size(); ++c) {
        const std::uint32_t f = group[t][c];
        int slot = 0;
        for (int v = 0; v < nvars; ++v) {
          if (!(f & (1u << v))) continue;
          auto it = target.find(f & ~(1u << v));
          if (it != target.end())
            b(it->second, c) = (slot % 2 == 0) ? K{1} : K{-1};
          ++slot;
        }
      }
      ranks[t] = detail::rank_of_matrix(std::move(b));
    }

    for (int t = 0; t <= j - 1; ++t) {  // t = j would land at i = 0
      const int i = j - t;
      if (i < 1 || i > i_max) continue;
      const long long h = static_cast<long long>(group[t].size()) -
                          static_cast<long long>(ranks[t]) -
                          static_cast<long long>(ranks[t + 1]);
      if (h < 0) throw Error("internal: negative homology dimension");
      if (h > 0) table.entries[{i, j}] += static_cast<std::size_t>(h);
    }
  }
  return table;
}

struct LinearityReport {
  bool linear = false;
  int generation_degree = -1;
  int regularity = -1;  // of the quotient, over the computed window
  BettiTable table;
  std::string detail;
};

/**
 * Certificate that the ideal generated by `gens` is equigenerated in degree
 * `a` with linear resolution.  Three independent checks must agree:
 * minimal-generator degrees, the Betti window (all i >= 1 entries on the
 * diagonal j = i + a - 1), and the exact saturation-degree condition that
 * each piece J_d for d >= a equals the corresponding piece of the saturated
 * ideal, which any ideal with this regularity must satisfy.  Throws
 * HypothesisError when the input is not equigenerated at all, and BoundError
 * when the window cannot certify.
 */
template <ExactField K>
LinearityReport is_linear_resolution(const GeneratorSet<K>& gens, int nvars,
                                     int a, int i_max, int degree_bound) {
  validate_generators(gens, nvars);
  if (gens.empty()) throw HypothesisError("no generators");
  if (a < 1 || degree_bound < a) throw DimensionError("degree window below a");

  LinearityReport report;
  const GenDegreeProfile profile = min_gen_degrees(gens, nvars, degree_bound);
  if (!profile.equigenerated)
    throw HypothesisError("not equigenerated within the degree window");
  report.generation_degree = *profile.single_degree;

  report.table = koszul_tor_dims(gens, nvars, i_max, degree_bound);
  report.regularity = report.table.regularity();  // throws if uncertified

  if (report.generation_degree != a) {
    report.linear = false;
    report.detail = "generated in degree " +
                    std::to_string(report.generation_degree) + ", not " +
                    std::to_string(a);
    return report;
  }

  for (const auto& [ij, v] : report.table.entries) {
    const auto [i, j] = ij;
    if (i == 0 ? (j != 0) : (j != i + a - 1)) {
      report.linear = false;
      report.detail = "off-diagonal entry at (" + std::to_string(i) + ", " +
                      std::to_string(j) + ")";
      return report;
    }
  }

  for (int d = a; d <= degree_bound; ++d) {
    const GradedPiece<K> piece = span_in_degree(gens, nvars, d);
    const GradedPiece<K> sat = saturation_piece(gens, nvars, d, a);
    if (!(piece.space == sat.space)) {
      report.linear = false;
      report.detail =
          "piece differs from its saturation in degree " + std::to_string(d);
      return report;
    }
  }

  report.linear = true;
  return report;
}

}  // namespace foldprod

#endif
