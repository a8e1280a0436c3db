#include "foldprod/monomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "foldprod/errors.hpp"

namespace foldprod {

int total_degree(const Expo& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool grevlex_less(const Expo& a, const Expo& b) {
  if (a.size() != b.size()) throw DimensionError("exponent length mismatch");
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void enumerate(int nvars, int degree, Expo& scratch, int pos,
               std::vector<Expo>& out) {
  if (pos == nvars - 1) {
    scratch[pos] = degree;
    out.push_back(scratch);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    scratch[pos] = e;
    enumerate(nvars, degree - e, scratch, pos + 1, out);
  }
}

std::shared_mutex cache_mu;
std::map<std::pair<int, int>, std::vector<Expo>> cache;

}  // namespace

const std::vector<Expo>& monomial_basis(int nvars, int degree) {
  if (nvars < 1 || degree < 0) throw DimensionError("bad monomial basis request");
  const auto key = std::make_pair(nvars, degree);
  {
    std::shared_lock lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<Expo> basis;
  basis.reserve(graded_dim(nvars, degree));
  Expo scratch(nvars, 0);
  enumerate(nvars, degree, scratch, 0, basis);
  std::sort(basis.begin(), basis.end(),
            [](const Expo& a, const Expo& b) { return grevlex_less(b, a); });
  std::unique_lock lock(cache_mu);
  return cache.emplace(key, std::move(basis)).first->second;
}

std::size_t monomial_index(int nvars, const Expo& e) {
  const std::vector<Expo>& basis = monomial_basis(nvars, total_degree(e));
  auto it = std::lower_bound(
      basis.begin(), basis.end(), e,
      [](const Expo& a, const Expo& b) { return grevlex_less(b, a); });
  if (it == basis.end() || *it != e)
    throw DimensionError("monomial not in basis");
  return static_cast<std::size_t>(it - basis.begin());
}

unsigned long long binomial(unsigned long long n, unsigned long long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (unsigned long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::size_t graded_dim(int nvars, int degree) {
  if (degree < 0) return 0;
  return static_cast<std::size_t>(
      binomial(static_cast<unsigned long long>(degree + nvars - 1),
               static_cast<unsigned long long>(nvars - 1)));
}

}  // namespace foldprod
