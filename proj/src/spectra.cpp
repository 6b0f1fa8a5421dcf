#include <grwalk/spectra.hpp>

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <map>

namespace grwalk {

namespace {

// xI - M as a matrix of polynomials
std::vector<std::vector<RatPoly>> char_matrix(const RatMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<RatPoly>> b(n, std::vector<RatPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> c{-m.at(i, j)};
            if (i == j)
                c.push_back(Rational(1));
            b[i][j] = RatPoly(std::move(c));
        }
    return b;
}

} // namespace

RatPoly characteristic_polynomial_bareiss(const RatMatrix& m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    if (n == 0)
        return RatPoly::one();
    auto b = char_matrix(m);
    // Fraction-free elimination. Every pivot b[k][k] is the characteristic
    // polynomial of a leading submatrix, hence monic and nonzero, so no
    // pivoting is ever needed and every division below is exact.
    RatPoly prev = RatPoly::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                RatPoly num = b[k][k] * b[i][j] - b[i][k] * b[k][j];
                auto q = num.exact_divide(prev);
                assert(q.has_value());
                b[i][j] = std::move(*q);
            }
        prev = b[k][k];
    }
    return b[n - 1][n - 1];
}

RatPoly characteristic_polynomial_faddeev(const RatMatrix& m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    RatMatrix bk = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix mb = m * bk;
        Rational c = -mb.trace() / Rational(static_cast<long>(k));
        coeffs[n - k] = c;
        for (std::size_t i = 0; i < n; ++i)
            mb.at(i, i) += c;
        bk = std::move(mb);
    }
    return RatPoly(std::move(coeffs));
}

RatPoly characteristic_polynomial(const RatMatrix& m) {
    return characteristic_polynomial_bareiss(m);
}

namespace {

// Echelon basis over Q with unit pivots, ordered by pivot column.
class Echelon {
public:
    explicit Echelon(std::size_t dim) : dim_(dim) {}

    std::size_t size() const { return rows_.size(); }

    // Reduces v in place against the basis; returns the pivot column of the
    // residual, or dim if the residual is zero.
    std::size_t reduce(std::vector<Rational>& v) const {
        for (const auto& [piv, row] : rows_) {
            const Rational& c = v[piv];
            if (c == 0)
                continue;
            Rational f = c;
            for (std::size_t j = piv; j < dim_; ++j)
                if (row[j] != 0)
                    v[j] -= f * row[j];
        }
        for (std::size_t j = 0; j < dim_; ++j)
            if (v[j] != 0)
                return j;
        return dim_;
    }

    // v must already be reduced with pivot column piv < dim
    void insert(std::vector<Rational> v, std::size_t piv) {
        Rational lead = v[piv];
        for (std::size_t j = piv; j < dim_; ++j)
            if (v[j] != 0)
                v[j] /= lead;
        rows_.emplace(piv, std::move(v));
    }

private:
    std::size_t dim_;
    std::map<std::size_t, std::vector<Rational>> rows_;
};

} // namespace

MinimalPolynomialResult minimal_polynomial(const RatMatrix& m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    RatPoly g = RatPoly::one();
    Echelon span(n); // sum of the Krylov spaces handled so far
    for (std::size_t i = 0; i < n && span.size() < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = 1;
        {
            std::vector<Rational> probe = e;
            if (span.reduce(probe) == n)
                continue; // e_i lies in an already-annihilated subspace
        }
        // Krylov chain of e_i with coordinates relative to the chain,
        // local echelon rows carry (vector, coords) so that the first
        // dependent power yields the annihilator directly.
        std::vector<std::vector<Rational>> chain; // M^t e_i, independent ones
        std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> local;
        std::vector<Rational> w = e;
        RatPoly annihilator;
        while (true) {
            std::vector<Rational> res = w;
            std::vector<Rational> coords(chain.size() + 1, Rational(0));
            coords[chain.size()] = 1;
            for (const auto& [vec, vcoords] : local) {
                std::size_t piv = 0;
                while (piv < n && vec[piv] == 0)
                    ++piv;
                const Rational c = res[piv] / vec[piv];
                if (c == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (vec[j] != 0)
                        res[j] -= c * vec[j];
                for (std::size_t j = 0; j < vcoords.size(); ++j)
                    coords[j] -= c * vcoords[j];
            }
            bool zero = std::all_of(res.begin(), res.end(),
                                    [](const Rational& x) { return x == 0; });
            if (zero) {
                // w = M^t e_i depends on earlier powers: coords give the
                // monic annihilator of e_i
                annihilator = RatPoly(std::move(coords));
                assert(annihilator.is_monic());
                break;
            }
            local.emplace_back(std::move(res), coords);
            chain.push_back(w);
            w = m.apply(chain.back());
        }
        g = lcm(g, annihilator);
        for (auto& vec : chain) {
            std::size_t piv = span.reduce(vec);
            if (piv < n)
                span.insert(std::move(vec), piv);
        }
    }
    MinimalPolynomialResult out;
    out.monic_form = g;
    out.minpoly = primitive_integer_form(g);
    out.leading = out.minpoly.leading();
    out.distinct_eigenvalue_count = squarefree_part(g).degree();
    return out;
}

namespace {

std::vector<Integer> positive_divisors(const Integer& m) {
    assert(m > 0);
    std::vector<Integer> small, large;
    for (Integer d(1); d * d <= m; ++d)
        if (m % d == 0) {
            small.push_back(d);
            if (d * d != m)
                large.push_back(m / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

RationalSpectrum rational_roots(const RatPoly& f) {
    if (f.is_zero())
        throw InvalidParamsError("rational_roots of the zero polynomial");
    RationalSpectrum out;
    out.complete = false;

    RatPoly work = f;
    int zero_mult = 0;
    while (work.coeff(0) == 0 && work.degree() > 0) {
        auto q = work.exact_divide(RatPoly::monomial(1));
        assert(q.has_value());
        work = std::move(*q);
        ++zero_mult;
    }

    std::vector<Rational> roots;
    if (zero_mult > 0)
        roots.emplace_back(0);
    if (work.degree() > 0) {
        // candidates from the primitive squarefree part
        IntPoly p = primitive_integer_form(squarefree_part(work));
        if (p.degree() > 0) {
            Integer a0 = p.coeff(0);
            if (a0 < 0)
                a0 = -a0;
            Integer an = p.leading();
            assert(a0 > 0 && an > 0);
            for (const Integer& num : positive_divisors(a0))
                for (const Integer& den : positive_divisors(an)) {
                    if (gcd(num, den) != 1)
                        continue;
                    Rational r = make_rational(num, den);
                    if (p.eval(r) == 0)
                        roots.push_back(r);
                    r = -r;
                    if (p.eval(r) == 0)
                        roots.push_back(r);
                }
        }
    }
    std::sort(roots.begin(), roots.end());

    int total = 0;
    const RatPoly x = RatPoly::monomial(1);
    for (const Rational& r : roots) {
        const RatPoly lin = x - RatPoly::constant(r);
        int mult = 0;
        RatPoly rest = f;
        while (true) {
            auto q = rest.exact_divide(lin);
            if (!q)
                break;
            rest = std::move(*q);
            ++mult;
        }
        assert(mult > 0);
        out.roots.push_back({r, mult});
        total += mult;
    }
    out.complete = (total == f.degree());
    return out;
}

} // namespace grwalk
