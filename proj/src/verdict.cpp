#include <grwalk/verdict.hpp>

#include <sstream>

#include <grwalk/drg.hpp>

namespace grwalk {

std::string route_name(Route r) {
    switch (r) {
    case Route::unitary:
        return "unitary";
    case Route::spectral:
        return "spectral";
    case Route::quotient:
        return "quotient";
    }
    return "?";
}

PeriodicityVerdict cyclotomic_support_verdict(const RatPoly& f, bool include_order_two,
                                              Route route) {
    PeriodicityVerdict v;
    v.route = route;
    const RatPoly psi = zhukovskij_transform(f);
    auto ip = try_to_int_poly(psi);
    if (!ip) {
        for (std::size_t j = 0; j < psi.coeffs().size(); ++j)
            if (!is_integer(psi.coeffs()[j])) {
                std::ostringstream out;
                out << "transform coefficient of z^" << j << " is "
                    << to_string(psi.coeffs()[j]) << ", not an integer";
                v.failure_witness = out.str();
                break;
            }
        return v;
    }
    auto cert = is_cyclotomic_product(*ip);
    if (!cert) {
        v.failure_witness = "transform " + ip->str("z") + " has a non-cyclotomic factor";
        return v;
    }
    Integer period = cert->order_lcm;
    if (include_order_two)
        period = lcm(period, Integer(2));
    v.periodic = true;
    v.period = period;
    v.cert = std::move(*cert);
    return v;
}

} // namespace grwalk
