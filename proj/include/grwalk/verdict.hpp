#pragma once

#include <optional>
#include <string>
#include <vector>

#include <grwalk/cyclotomic.hpp>

namespace grwalk {

enum class Route {
    unitary,  // minimal polynomial of the walk operator itself
    spectral, // transition-matrix spectrum through the Zhukovskij transform
    quotient, // intersection-array quotient, no graph needed
};

std::string route_name(Route r);

struct PeriodicityVerdict {
    bool periodic = false;
    std::optional<Integer> period;              // exact, present iff periodic
    std::optional<CyclotomicCertificate> cert;  // present iff periodic
    Route route = Route::unitary;
    std::optional<std::string> failure_witness; // present iff not periodic
};

// Shared tail of the spectral/quotient routes: f is a monic polynomial whose
// roots are the distinct transition eigenvalues; include_order_two forces the
// period to be even (walk eigenvalue -1, or +-1 from the cycle space).
PeriodicityVerdict cyclotomic_support_verdict(const RatPoly& f, bool include_order_two,
                                              Route route);

// Integrality of 2^j * (coefficient of x^(deg-j)) across a monic polynomial
// with transition-spectrum roots: a cheap necessary condition for a
// cyclotomic Zhukovskij transform. Carries both coefficient lists for
// reporting.
struct CoefficientReport {
    std::vector<Rational> charpoly;  // ascending powers, monic
    std::vector<Rational> transform; // Zhukovskij transform coefficients
    bool pass = false;
    std::optional<int> failing_j; // smallest violating shift
};

// pass iff 2^j * coeff(deg - j) is an integer for every j in [j_lo, j_hi]
CoefficientReport scaled_coefficient_filter(const RatPoly& f, int j_lo, int j_hi);

} // namespace grwalk
