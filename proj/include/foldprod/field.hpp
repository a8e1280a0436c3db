#ifndef FOLDPROD_FIELD_HPP
#define FOLDPROD_FIELD_HPP

/**
 * @file field.hpp
 * @brief Exact coefficient fields: multiprecision rationals and a word-size
 *        prime field.
 *
 * Everything in this library computes over an exact field.  The default is Q,
 * carried by GMP-backed rationals that are always in lowest terms with a
 * positive denominator.  Z/p is offered as a faster mode for larger runs; the
 * modulus is a session-wide setting and must be prime.
 */

#include <boost/multiprecision/gmp.hpp>

#include <concepts>
#include <cstdint>
#include <string>

#include "foldprod/errors.hpp"

namespace foldprod {

/// Arbitrary-precision rational in canonical form.
using Rat = boost::multiprecision::mpq_rational;

/// Parse "p", "-p" or "p/q".  mpq_set_str does not reduce fractions, so the
/// result is canonicalized explicitly.
Rat rat_from_string(const std::string& text);

std::string rat_to_string(const Rat& value);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/**
 * The field Z/p for a session-wide prime modulus.
 *
 * The modulus defaults to 2^31 - 1 and may be changed once, up front, via
 * set_modulus.  Values created under different moduli must never be mixed;
 * arithmetic reads the modulus without locking, so configure it before any
 * concurrent work starts.
 */
class Fp64 {
 public:
  Fp64() = default;

  Fp64(long long n) {
    const auto p = static_cast<long long>(mod_);
    long long r = n % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
  }

  static void set_modulus(std::uint64_t p);
  static std::uint64_t modulus() { return mod_; }

  std::uint64_t value() const { return v_; }

  friend Fp64 operator+(Fp64 a, Fp64 b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= mod_) s -= mod_;
    return from_raw(s);
  }
  friend Fp64 operator-(Fp64 a, Fp64 b) {
    return from_raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + mod_ - b.v_);
  }
  friend Fp64 operator*(Fp64 a, Fp64 b) {
    return from_raw(static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a.v_) * b.v_ % mod_));
  }
  friend Fp64 operator/(Fp64 a, Fp64 b) { return a * b.inverse(); }
  Fp64 operator-() const { return from_raw(v_ == 0 ? 0 : mod_ - v_); }

  Fp64& operator+=(Fp64 o) { return *this = *this + o; }
  Fp64& operator-=(Fp64 o) { return *this = *this - o; }
  Fp64& operator*=(Fp64 o) { return *this = *this * o; }
  Fp64& operator/=(Fp64 o) { return *this = *this / o; }

  Fp64 inverse() const;

  friend bool operator==(Fp64 a, Fp64 b) = default;

 private:
  static Fp64 from_raw(std::uint64_t v) {
    Fp64 x;
    x.v_ = v;
    return x;
  }

  static std::uint64_t mod_;
  std::uint64_t v_ = 0;
};

/// The scalar contract assumed by the linear algebra layer.
template <typename K>
concept ExactField = std::regular<K> && requires(K a, K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  K{0};
  K{1};
};

template <ExactField K>
std::string field_name();

template <>
inline std::string field_name<Rat>() {
  return "rational";
}

template <>
inline std::string field_name<Fp64>() {
  return "prime:" + std::to_string(Fp64::modulus());
}

template <ExactField K>
std::string scalar_to_string(const K& x) {
  if constexpr (std::same_as<K, Rat>) {
    return rat_to_string(x);
  } else {
    return std::to_string(x.value());
  }
}

}  // namespace foldprod

#endif
