#ifndef FOLDPROD_POLY_HPP
#define FOLDPROD_POLY_HPP

// Sparse multivariate polynomials over an exact field, plus linear forms in
// their canonical scaling.

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "foldprod/errors.hpp"
#include "foldprod/field.hpp"
#include "foldprod/monomial.hpp"

namespace foldprod {

template <ExactField K>
class Poly {
 public:
  using Terms = std::map<Expo, K>;  // zero coefficients never stored

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, K c) {
    Poly p(nvars);
    if (!(c == K{0})) p.terms_.emplace(Expo(nvars, 0), std::move(c));
    return p;
  }

  static Poly monomial(Expo e, K c = K{1}) {
    Poly p(static_cast<int>(e.size()));
    if (!(c == K{0})) p.terms_.emplace(std::move(e), std::move(c));
    return p;
  }

  static Poly linear(std::vector<K> coeffs) {
    Poly p(static_cast<int>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == K{0}) continue;
      Expo e(coeffs.size(), 0);
      e[i] = 1;
      p.terms_.emplace(std::move(e), std::move(coeffs[i]));
    }
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// Maximal total degree of a term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      const int t = total_degree(e);
      if (d == -1) d = t;
      if (t != d) return false;
    }
    return true;
  }

  void add_term(const Expo& e, const K& c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw DimensionError("term variable count mismatch");
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == K{0}) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    Poly out(a.nvars_);
    Expo e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  Poly& operator*=(const K& c) {
    if (c == K{0}) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Coefficients on monomial_basis(nvars, d); requires every term to have
  /// total degree d (the zero polynomial is fine).
  std::vector<K> coeff_vector(int d) const {
    std::vector<K> v(graded_dim(nvars_, d), K{0});
    for (const auto& [e, c] : terms_) {
      if (total_degree(e) != d)
        throw DimensionError("coeff_vector degree mismatch");
      v[monomial_index(nvars_, e)] = c;
    }
    return v;
  }

 private:
  void check_ring(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("mixed polynomial rings");
  }

  int nvars_ = 0;
  Terms terms_;
};

/**
 * A nonzero linear form stored with the canonical scaling: the first nonzero
 * coefficient equals 1.  Two proportional forms therefore compare equal.
 */
template <ExactField K>
struct LinearForm {
  std::vector<K> coeffs;

  int nvars() const { return static_cast<int>(coeffs.size()); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

template <ExactField K>
LinearForm<K> canonical_form(std::vector<K> raw) {
  std::size_t lead = raw.size();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!(raw[i] == K{0})) {
      lead = i;
      break;
    }
  }
  if (lead == raw.size()) throw FieldError("zero vector is not a linear form");
  const K inv = K{1} / raw[lead];
  raw[lead] = K{1};
  for (std::size_t i = lead + 1; i < raw.size(); ++i) raw[i] = raw[i] * inv;
  return LinearForm<K>{std::move(raw)};
}

template <ExactField K>
Poly<K> to_poly(const LinearForm<K>& f) {
  return Poly<K>::linear(f.coeffs);
}

}  // namespace foldprod

#endif
