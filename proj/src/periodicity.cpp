#include <grwalk/periodicity.hpp>

#include <sstream>

namespace grwalk {

PeriodicityVerdict is_periodic_unitary(const Graph& g) {
    PeriodicityVerdict v;
    v.route = Route::unitary;
    const MinimalPolynomialResult mp = minimal_polynomial(grover_unitary(g));
    auto ip = try_to_int_poly(mp.monic_form);
    if (!ip) {
        v.failure_witness =
            "walk minimal polynomial " + mp.monic_form.str() + " is not integral";
        return v;
    }
    auto cert = is_cyclotomic_product(*ip);
    if (!cert) {
        v.failure_witness =
            "walk minimal polynomial " + ip->str() + " has a non-cyclotomic factor";
        return v;
    }
    v.periodic = true;
    v.period = cert->order_lcm;
    v.cert = std::move(*cert);
    return v;
}

PeriodicityVerdict is_periodic_spectral(const Graph& g) {
    const MinimalPolynomialResult mp = minimal_polynomial(transition_matrix(g));
    // the cycle space contributes +1s, and -1 appears unless the graph is a
    // tree-like bipartite shell; both force an even period when present
    const bool minus_one = cycle_space_dimension(g) + 1 - (is_bipartite(g) ? 1 : 0) > 0;
    return cyclotomic_support_verdict(mp.monic_form, minus_one, Route::spectral);
}

RationalSpectrumReport rational_spectrum_check(const Graph& g) {
    RationalSpectrumReport rep;
    const RatMatrix t = transition_matrix(g);
    const RatPoly cp = characteristic_polynomial(t);
    const RationalSpectrum spec = rational_roots(cp);
    rep.splits = spec.complete;
    rep.eigenvalues = spec.roots;
    rep.distinct_count = minimal_polynomial(t).distinct_eigenvalue_count;
    rep.diameter = diameter(g);
    rep.periodic = is_periodic_spectral(g).periodic;
    rep.applicable = rep.splits && rep.periodic;
    if (rep.applicable) {
        bool ok = true;
        for (const auto& rm : rep.eigenvalues) {
            const Rational& v = rm.value;
            if (!(v == 0 || v == 1 || v == -1 || v == make_rational(1, 2) ||
                  v == make_rational(-1, 2)))
                ok = false;
        }
        rep.values_allowed = ok;
        rep.count_bounded = rep.distinct_count <= 5;
        rep.diameter_bounded = rep.diameter < 5;
    }
    rep.diameter_below_distinct = rep.diameter < rep.distinct_count;
    return rep;
}

CoefficientReport general_coefficient_filter(const Graph& g) {
    const RatPoly cp = characteristic_polynomial(transition_matrix(g));
    return scaled_coefficient_filter(cp, 0, cp.degree());
}

} // namespace grwalk
