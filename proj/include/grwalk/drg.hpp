#pragma once

#include <optional>
#include <string>
#include <vector>

#include <grwalk/matrix.hpp>
#include <grwalk/poly.hpp>
#include <grwalk/verdict.hpp>

namespace grwalk {

class Graph;

// Intersection numbers {b_0,...,b_{d-1}; c_1,...,c_d} of a distance-regular
// graph. Validated on construction: d >= 1, all listed entries >= 1,
// c_1 = 1, and a_j = k - b_j - c_j >= 0 throughout.
class IntersectionArray {
public:
    IntersectionArray(std::vector<long long> b, std::vector<long long> c);

    int d() const { return static_cast<int>(b_.size()); }
    long long k() const { return b_[0]; }
    long long b(int j) const; // 0 <= j <= d, b(d) = 0
    long long c(int j) const; // 0 <= j <= d, c(0) = 0
    long long a(int j) const { return k() - b(j) - c(j); }
    // all a_j vanish; realizations are exactly the bipartite ones
    bool bipartite_shell() const;

    // "{b0,b1,...;c1,c2,...}"
    std::string str() const;
    static IntersectionArray parse(const std::string& text);

    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;

private:
    std::vector<long long> b_; // b_0 .. b_{d-1}
    std::vector<long long> c_; // c_1 .. c_d
};

// Distance-regularity scan over all sources; the array when every count
// matches, nullopt otherwise. Throws NotRegularError on non-regular input.
std::optional<IntersectionArray> intersection_array_of(const Graph& g);

// (d+1)x(d+1) tridiagonal distance quotient and its division by k. The
// normalized matrix has the same eigenvalues as the transition matrix of any
// realization, one per distance class.
struct QuotientPair {
    RatMatrix quotient;
    RatMatrix normalized;
};
QuotientPair quotient_matrices(const IntersectionArray& arr);

// Characteristic polynomial of the normalized quotient via the tridiagonal
// principal-minor recurrence. Monic, degree d+1, and 1 is always a root.
RatPoly quotient_charpoly(const IntersectionArray& arr);

// Coefficients of the Zhukovskij transform computed directly from the input
// coefficients by the binomial closed form, without expanding the transform.
// Input must be monic (ascending powers) and vanish at 1.
std::vector<Rational> zhukovskij_coefficients(const std::vector<Rational>& charpoly_coeffs);

// The 2^j integrality filter on the quotient characteristic polynomial.
CoefficientReport coefficient_integrality_filter(const IntersectionArray& arr);

// Periodicity decided from the intersection array alone (quotient route).
PeriodicityVerdict drg_periodicity(const IntersectionArray& arr);

struct SrgParams {
    long long n, k, lambda, mu;
    friend auto operator<=>(const SrgParams&, const SrgParams&) = default;
};

// Diameter-2 array {k, k-1-lambda; 1, mu}. Throws InfeasibleParametersError
// when the ranges or the counting identity k(k-lambda-1) = (n-k-1)mu fail.
IntersectionArray srg_array(long long n, long long k, long long lambda, long long mu);

// Counting identity plus eigenvalue multiplicity integrality.
bool srg_feasible(const SrgParams& p);

struct SrgClassification {
    SrgParams params;
    CoefficientReport filter;
    PeriodicityVerdict verdict;
};

// Every feasible diameter-2 parameter set with valency 2..k_max, classified
// by the quotient route, sorted by (n, k, lambda, mu).
std::vector<SrgClassification> classify_srg(long long k_max, int jobs = 1);

// Parameters of the periodic ones.
std::vector<SrgParams> periodic_srg_parameters(long long k_max, int jobs = 1);

} // namespace grwalk
