#pragma once

#include <vector>

#include <grwalk/matrix.hpp>
#include <grwalk/poly.hpp>

namespace grwalk {

// det(xI - M), monic of degree n. Default route is fraction-free
// elimination; the Faddeev-LeVerrier route is kept as an independent
// cross-check.
RatPoly characteristic_polynomial(const RatMatrix& m);
RatPoly characteristic_polynomial_bareiss(const RatMatrix& m);
RatPoly characteristic_polynomial_faddeev(const RatMatrix& m);

struct MinimalPolynomialResult {
    IntPoly minpoly;   // primitive integer multiple, positive leading coeff
    Integer leading;   // minpoly.leading(); monic_form = minpoly / leading
    RatPoly monic_form;
    int distinct_eigenvalue_count; // over the complex numbers
};

// Krylov chains per standard basis vector, lcm of the local annihilators.
MinimalPolynomialResult minimal_polynomial(const RatMatrix& m);

struct RootMultiplicity {
    Rational value;
    int multiplicity;
    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RationalSpectrum {
    std::vector<RootMultiplicity> roots; // ascending by value
    bool complete;                       // multiplicities sum to deg(f)
};

// All rational roots of a nonzero polynomial with exact multiplicities.
RationalSpectrum rational_roots(const RatPoly& f);

} // namespace grwalk
