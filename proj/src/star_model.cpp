#include "foldprod/star_model.hpp"

#include <algorithm>
#include <numeric>

namespace foldprod {

namespace {

void check_expo(const MonomialStarModel& model, const std::vector<int>& expo) {
  if (static_cast<int>(expo.size()) != model.s)
    throw DimensionError("exponent vector has wrong length");
  for (int e : expo)
    if (e < 0) throw DimensionError("negative exponent");
}

}  // namespace

MonomialStarModel make_star_model(int s, int c) {
  if (s < 2 || c < 1 || c > s - 1)
    throw HypothesisError("star model needs s >= 2 and 1 <= c <= s - 1");
  return {s, c};
}

bool mono_symbolic_member(const MonomialStarModel& model,
                          const std::vector<int>& expo, int m) {
  check_expo(model, expo);
  if (m < 1) throw DimensionError("symbolic power index must be positive");
  std::vector<int> sorted = expo;
  std::sort(sorted.begin(), sorted.end());
  long long smallest = 0;
  for (int i = 0; i < model.c; ++i) smallest += sorted[i];
  return smallest >= m;
}

bool mono_power_member(const MonomialStarModel& model,
                       const std::vector<int>& expo, int r) {
  check_expo(model, expo);
  if (r < 1) throw DimensionError("power index must be positive");
  // The monomial is a multiple of a product of r generators iff an r x s
  // zero-one matrix exists with row sums s - c + 1 and column sums <= t_j.
  // By the max-flow cut bound that needs sum_j min(t_j, k) >= k (s - c + 1)
  // for every k <= r, and concavity of min(t, .) makes k = r the binding one.
  long long capacity = 0;
  for (int t : expo) capacity += std::min(t, r);
  return capacity >= static_cast<long long>(r) * (model.s - model.c + 1);
}

std::vector<std::vector<int>> mono_symbolic_min_gens(
    const MonomialStarModel& model, int m) {
  if (m < 1) throw DimensionError("symbolic power index must be positive");
  // Entries above m can be capped: for any c-subset S,
  // sum_{j in S} min(t_j, m) >= min(sum_{j in S} t_j, m) >= m, so the capped
  // vector is still a member and divides the original.  Hence the box
  // [0, m]^s contains every minimal generator.
  std::vector<std::vector<int>> out;
  std::vector<int> t(model.s, 0);
  const auto minimal_member = [&](const std::vector<int>& v) {
    if (!mono_symbolic_member(model, v, m)) return false;
    std::vector<int> down = v;
    for (int j = 0; j < model.s; ++j) {
      if (down[j] == 0) continue;
      --down[j];
      const bool still = mono_symbolic_member(model, down, m);
      ++down[j];
      if (still) return false;
    }
    return true;
  };
  while (true) {
    if (minimal_member(t)) out.push_back(t);
    int pos = model.s - 1;
    while (pos >= 0 && t[pos] == m) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

bool mono_containment(const MonomialStarModel& model, int m, int r) {
  // Ordinary-power membership is preserved by multiplying with any monomial,
  // so containment holds iff every minimal generator of the symbolic power
  // is a member.
  for (const std::vector<int>& t : mono_symbolic_min_gens(model, m))
    if (!mono_power_member(model, t, r)) return false;
  return true;
}

Ratio make_ratio(long long num, long long den) {
  if (den == 0) throw DimensionError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Ratio resurgence_ratio(const MonomialStarModel& model) {
  return make_ratio(static_cast<long long>(model.c) * (model.s - model.c + 1),
                    model.s);
}

ResurgenceScan resurgence_search(const MonomialStarModel& model, int m_max,
                                 int r_max) {
  if (m_max < 1 || r_max < 1) throw DimensionError("empty scan range");
  ResurgenceScan scan;
  scan.model = model;
  scan.m_max = m_max;
  scan.r_max = r_max;
  scan.formula = resurgence_ratio(model);

  scan.contained.assign(m_max, std::vector<bool>(r_max, false));
  for (int m = 1; m <= m_max; ++m) {
    const std::vector<std::vector<int>> gens = mono_symbolic_min_gens(model, m);
    for (int r = 1; r <= r_max; ++r) {
      bool ok = true;
      for (const std::vector<int>& t : gens)
        if (!mono_power_member(model, t, r)) {
          ok = false;
          break;
        }
      scan.contained[m - 1][r - 1] = ok;
      if (!ok) scan.failures.push_back({m, r});
    }
  }

  // All comparisons against the formula num/den are exact integer ones.
  const long long num = scan.formula.num;
  const long long den = scan.formula.den;
  for (const ContainmentFailure& f : scan.failures) {
    // failure ratio m/r vs formula: m * den ? num * r
    if (static_cast<long long>(f.m) * den >= num * f.r)
      scan.failures_all_below_formula = false;
    // within 1/r of the formula: m/r >= num/den - 1/r, i.e.
    // m * den >= num * r - den
    if (static_cast<long long>(f.m) * den >= num * f.r - den)
      scan.witness_within_one_over_r = true;
    if (!scan.sharpest ||
        static_cast<long long>(f.m) * scan.sharpest->r >
            static_cast<long long>(scan.sharpest->m) * f.r)
      scan.sharpest = f;
  }
  return scan;
}

}  // namespace foldprod
