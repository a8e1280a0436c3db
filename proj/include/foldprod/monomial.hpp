#ifndef FOLDPROD_MONOMIAL_HPP
#define FOLDPROD_MONOMIAL_HPP

// Exponent vectors and the single monomial order used everywhere: graded
// reverse lexicographic.  The basis of each graded piece R_d is listed in
// strictly decreasing grevlex order (x0^d first, x_{n}^d last) and all
// coefficient vectors downstream index into that listing.

#include <cstddef>
#include <vector>

namespace foldprod {

using Expo = std::vector<int>;

int total_degree(const Expo& e);

/// Strict grevlex comparison: lower total degree first; within a degree,
/// a < b iff the last nonzero entry of a - b is positive.
bool grevlex_less(const Expo& a, const Expo& b);

/// Monomials of degree d in `nvars` variables, in the fixed listing order
/// (decreasing grevlex).  The returned reference is to a process-wide cache
/// and stays valid; safe to call concurrently.
const std::vector<Expo>& monomial_basis(int nvars, int degree);

/// Position of e within monomial_basis(nvars, total_degree(e)).
std::size_t monomial_index(int nvars, const Expo& e);

unsigned long long binomial(unsigned long long n, unsigned long long k);

/// dim_K R_d for R a polynomial ring in `nvars` variables.
std::size_t graded_dim(int nvars, int degree);

}  // namespace foldprod

#endif
