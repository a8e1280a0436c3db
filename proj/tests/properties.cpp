#include <random>
#include <vector>

#include "doctest.h"
#include "foldprod/decomp.hpp"
#include "foldprod/field.hpp"
#include "foldprod/fold.hpp"
#include "foldprod/sigma.hpp"
#include "support.hpp"

using namespace foldprod;
using testsupport::random_collection;

TEST_CASE("the containment law holds on randomized collections") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 25; ++trial) {
    const int nvars = 2 + static_cast<int>(rng() % 2);
    const int support = nvars + 1 + static_cast<int>(rng() % 2);
    const bool degenerate = nvars == 3 && trial % 5 == 0;
    const FormCollection<Rat> sigma =
        random_collection<Rat>(rng, nvars, support, 2, degenerate);
    const int total = sigma.total_multiplicity();
    for (int a = 1; a <= std::min(total, 4); ++a) {
      const CheckResult result = verify_lemma21(sigma, a, a + 3);
      CHECK(result.equal);
      CHECK(result.verdict != Verdict::failed);
    }
  }
}

TEST_CASE("fold ideals are nested as the fold grows") {
  std::mt19937_64 rng(20240602);
  for (int trial = 0; trial < 8; ++trial) {
    const int nvars = 2 + static_cast<int>(rng() % 2);
    const FormCollection<Rat> sigma =
        random_collection<Rat>(rng, nvars, nvars + 1, 2, false);
    const int total = sigma.total_multiplicity();
    for (int a = 2; a <= std::min(total, 4); ++a) {
      const FoldIdeal<Rat> inner(sigma, a);
      const FoldIdeal<Rat> outer(sigma, a - 1);
      for (int d = a; d <= a + 3; ++d)
        CHECK(subspace_leq(inner.piece(d).space, outer.piece(d).space));
    }
  }
}

TEST_CASE("the one-form recursion holds on randomized instances") {
  std::mt19937_64 rng(20240603);
  int done = 0;
  while (done < 10) {
    const int nvars = 2 + static_cast<int>(rng() % 2);
    const int support = nvars + static_cast<int>(rng() % 2);
    const FormCollection<Rat> sigma =
        random_collection<Rat>(rng, nvars, support, 2, false);
    const int total = sigma.total_multiplicity();
    if (total < 2) continue;
    const int a = 2 + static_cast<int>(rng() % std::min(total - 1, 2));
    const std::size_t split = rng() % sigma.entries.size();
    CHECK(recursion_identity_check(sigma, a, split, a + 4));
    ++done;
  }
}

TEST_CASE("powers of the full fold match scaled collections") {
  std::mt19937_64 rng(20240604);
  for (int trial = 0; trial < 10; ++trial) {
    const int nvars = 2 + static_cast<int>(rng() % 2);
    const int support = nvars + static_cast<int>(rng() % 2);
    // Arbitrary multiplicities on purpose: the identity needs no genericity.
    const FormCollection<Rat> sigma =
        random_collection<Rat>(rng, nvars, support, 3, trial % 4 == 0);
    const int total = sigma.total_multiplicity();
    const int a = 1 + static_cast<int>(rng() % std::min(total, 3));
    const int m = 2;
    CHECK(power_identity_check(sigma, a, m, 2 * a * m));
  }
}

TEST_CASE("colon by one form drops the fold by one on generic collections") {
  std::mt19937_64 rng(20240605);
  int done = 0;
  while (done < 6) {
    const int nvars = 2 + static_cast<int>(rng() % 2);
    const FormCollection<Rat> sigma =
        random_collection<Rat>(rng, nvars, nvars + 1, 2, false);
    if (!is_generic_support(sigma)) continue;
    const int total = sigma.total_multiplicity();
    const int a = 2 + static_cast<int>(rng() % std::min(total - 1, 2));
    CHECK(colon_identity_check(sigma, a, a + 3));
    ++done;
  }
}

namespace {

/// The same collection with every coefficient reduced modulo the session
/// prime.  Coefficients may be fractions after canonical scaling, so the
/// reduction goes through numerator times inverse denominator.
FormCollection<Fp64> reduce_collection(const FormCollection<Rat>& rational) {
  using boost::multiprecision::mpz_int;
  const mpz_int p(Fp64::modulus());
  std::vector<std::pair<std::vector<Fp64>, int>> raw;
  for (const auto& entry : rational.entries) {
    std::vector<Fp64> coeffs;
    for (const Rat& q : entry.form.coeffs) {
      mpz_int num = numerator(q) % p;
      if (num < 0) num += p;
      const mpz_int den = denominator(q) % p;
      coeffs.push_back(Fp64(num.convert_to<long long>()) *
                       Fp64(den.convert_to<long long>()).inverse());
    }
    raw.emplace_back(std::move(coeffs), entry.multiplicity);
  }
  return build_collection<Fp64>(rational.nvars, raw);
}

}  // namespace

TEST_CASE("piece dimensions agree between the rational and prime fields") {
  testsupport::ModulusGuard guard(2147483647);
  std::mt19937_64 rng(20240606);
  for (int trial = 0; trial < 8; ++trial) {
    const int nvars = 2 + static_cast<int>(rng() % 2);
    const int support = nvars + 1;
    const FormCollection<Rat> rational =
        random_collection<Rat>(rng, nvars, support, 2, false);
    const FormCollection<Fp64> modular = reduce_collection(rational);
    const int total = rational.total_multiplicity();
    for (int a = 1; a <= std::min(total, 3); ++a) {
      const FoldIdeal<Rat> p(rational, a);
      const FoldIdeal<Fp64> q(modular, a);
      for (int d = a; d <= a + 2; ++d)
        CHECK(p.piece(d).dim() == q.piece(d).dim());
    }
  }
}
