#include <grwalk/cyclotomic.hpp>

#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace grwalk {

std::vector<unsigned> totient_sieve(unsigned n) {
    std::vector<unsigned> tot(n + 1);
    std::iota(tot.begin(), tot.end(), 0u);
    for (unsigned p = 2; p <= n; ++p) {
        if (tot[p] != p)
            continue; // not prime
        for (unsigned m = p; m <= n; m += p)
            tot[m] -= tot[m] / p;
    }
    return tot;
}

namespace {

std::mutex cyclo_mutex;
std::map<unsigned, IntPoly> cyclo_cache;

// requires all proper divisors already cached
IntPoly compute_cyclotomic_locked(unsigned n) {
    // x^n - 1
    std::vector<Integer> v(n + 1, Integer(0));
    v[0] = -1;
    v[n] = 1;
    IntPoly num(std::move(v));
    IntPoly den = IntPoly::one();
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0)
            den = den * cyclo_cache.at(d);
    auto q = num.exact_divide(den);
    assert(q.has_value());
    return *q;
}

} // namespace

IntPoly cyclotomic(unsigned n) {
    if (n == 0)
        throw InvalidParamsError("cyclotomic index must be >= 1");
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    auto it = cyclo_cache.find(n);
    if (it != cyclo_cache.end())
        return it->second;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0 && !cyclo_cache.count(d))
            cyclo_cache.emplace(d, compute_cyclotomic_locked(d));
    return cyclo_cache.at(n);
}

std::optional<CyclotomicCertificate> is_cyclotomic_product(const IntPoly& p) {
    if (p.is_zero() || !p.is_monic())
        throw InvalidParamsError("cyclotomic product test needs a monic nonzero polynomial");
    CyclotomicCertificate cert;
    const int deg = p.degree();
    if (deg == 0)
        return cert; // empty product
    const unsigned bound = 2u * static_cast<unsigned>(deg) * static_cast<unsigned>(deg);
    const std::vector<unsigned> tot = totient_sieve(bound);
    IntPoly rest = p;
    for (unsigned n = 1; n <= bound && rest.degree() > 0; ++n) {
        if (tot[n] > static_cast<unsigned>(deg))
            continue;
        if (tot[n] > static_cast<unsigned>(rest.degree()))
            continue;
        const IntPoly phi_n = cyclotomic(n);
        while (rest.degree() >= phi_n.degree()) {
            auto q = rest.exact_divide(phi_n);
            if (!q)
                break;
            rest = *q;
            cert.factors.push_back(n);
            cert.order_lcm = lcm(cert.order_lcm, Integer(n));
        }
    }
    // monic divided by monic stays monic, so full factorization ends at 1
    if (rest.degree() != 0)
        return std::nullopt;
    assert(rest == IntPoly::one());
    return cert;
}

RatPoly zhukovskij_transform(const RatPoly& f) {
    if (f.is_zero() || f.degree() < 1 || !f.is_monic())
        throw InvalidParamsError("transform needs a monic polynomial of degree >= 1");
    const int d = f.degree();
    // sum_i  c_i * 2^(d-i) * z^(d-i) * (z^2+1)^i
    const RatPoly zsq1 = RatPoly({Rational(1), Rational(0), Rational(1)});
    RatPoly zsq1_pow = RatPoly::one();
    RatPoly acc;
    Rational two_pow(1);
    for (int i = d; i >= 0; --i)
        two_pow *= 2;
    for (int i = 0; i <= d; ++i) {
        two_pow /= 2;
        if (f.coeff(i) != 0)
            acc = acc + RatPoly::monomial(d - i, f.coeff(i) * two_pow) * zsq1_pow;
        if (i < d)
            zsq1_pow = zsq1_pow * zsq1;
    }
    assert(acc.degree() == 2 * d);
    assert(acc.is_monic());
    return acc;
}

} // namespace grwalk
