#include "foldprod/field.hpp"

namespace foldprod {

std::uint64_t Fp64::mod_ = 2147483647ull;  // 2^31 - 1, prime

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  Rat q;
  try {
    q = Rat(text);
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: " + text);
  }
  if (mpz_sgn(mpq_denref(q.backend().data())) == 0)
    throw ParseError("zero denominator: " + text);
  mpq_canonicalize(q.backend().data());
  return q;
}

std::string rat_to_string(const Rat& value) { return value.str(); }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set decides primality for every 64-bit integer.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

void Fp64::set_modulus(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw FieldError("modulus " + std::to_string(p) + " is not prime");
  }
  if (p >= (1ull << 62)) {
    throw FieldError("modulus too large");
  }
  mod_ = p;
}

Fp64 Fp64::inverse() const {
  if (v_ == 0) throw FieldError("inverse of zero in Z/p");
  return from_raw(powmod(v_, mod_ - 2, mod_));
}

}  // namespace foldprod
