#pragma once

#include <optional>
#include <vector>

#include <grwalk/poly.hpp>

namespace grwalk {

// Euler totients phi(1..n), index 0 unused.
std::vector<unsigned> totient_sieve(unsigned n);

// n-th cyclotomic polynomial, n >= 1. Memoized, safe to call concurrently.
IntPoly cyclotomic(unsigned n);

// Witness that a monic integer polynomial is a product of cyclotomic
// polynomials: the multiset of indices (ascending) and the lcm of the
// corresponding root orders.
struct CyclotomicCertificate {
    std::vector<unsigned> factors;
    Integer order_lcm{1};
};

// Greedy trial division by candidate cyclotomics in ascending index order.
// A candidate index n is viable only while phi(n) <= deg(p), which bounds
// the scan by 2*deg(p)^2. Present iff p factors completely.
std::optional<CyclotomicCertificate> is_cyclotomic_product(const IntPoly& p);

// (2z)^deg(f) * f((z + 1/z) / 2) for monic f of degree >= 1. Maps the
// support of a transition-matrix spectrum to the polynomial whose roots are
// the matching walk eigenvalues e^{±i*arccos(lambda)}. Monic, palindromic,
// degree 2*deg(f).
RatPoly zhukovskij_transform(const RatPoly& f);

} // namespace grwalk
