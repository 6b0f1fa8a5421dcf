#include <grwalk/drg.hpp>

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

#include <grwalk/errors.hpp>
#include <grwalk/graph.hpp>
#include <grwalk/parallel.hpp>

namespace grwalk {

IntersectionArray::IntersectionArray(std::vector<long long> b, std::vector<long long> c)
    : b_(std::move(b)), c_(std::move(c)) {
    if (b_.empty() || b_.size() != c_.size())
        throw InvalidParamsError("intersection array needs matching nonempty b and c lists");
    for (long long x : b_)
        if (x < 1)
            throw InvalidParamsError("intersection numbers b_j must be >= 1");
    for (long long x : c_)
        if (x < 1)
            throw InvalidParamsError("intersection numbers c_j must be >= 1");
    if (c_[0] != 1)
        throw InvalidParamsError("c_1 must equal 1");
    for (int j = 0; j <= d(); ++j)
        if (a(j) < 0)
            throw InvalidParamsError("intersection array has b_j + c_j > k at j=" +
                                     std::to_string(j));
}

long long IntersectionArray::b(int j) const {
    assert(j >= 0 && j <= d());
    return j == d() ? 0 : b_[static_cast<std::size_t>(j)];
}

long long IntersectionArray::c(int j) const {
    assert(j >= 0 && j <= d());
    return j == 0 ? 0 : c_[static_cast<std::size_t>(j - 1)];
}

bool IntersectionArray::bipartite_shell() const {
    for (int j = 0; j <= d(); ++j)
        if (a(j) != 0)
            return false;
    return true;
}

std::string IntersectionArray::str() const {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < b_.size(); ++i)
        out << (i ? "," : "") << b_[i];
    out << ";";
    for (std::size_t i = 0; i < c_.size(); ++i)
        out << (i ? "," : "") << c_[i];
    out << "}";
    return out.str();
}

IntersectionArray IntersectionArray::parse(const std::string& text) {
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("bad intersection array '" + text + "': " + why);
    };
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw fail("expected {b0,...;c1,...}");
    s = s.substr(1, s.size() - 2);
    auto semi = s.find(';');
    if (semi == std::string::npos)
        throw fail("missing ';'");
    auto parse_list = [&](const std::string& part) {
        std::vector<long long> out;
        std::istringstream in(part);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.empty())
                throw fail("empty entry");
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(item, &used);
            } catch (const std::exception&) {
                throw fail("not an integer: '" + item + "'");
            }
            if (used != item.size())
                throw fail("not an integer: '" + item + "'");
            out.push_back(v);
        }
        if (out.empty())
            throw fail("empty list");
        return out;
    };
    try {
        return IntersectionArray(parse_list(s.substr(0, semi)), parse_list(s.substr(semi + 1)));
    } catch (const InvalidParamsError& e) {
        throw fail(e.what());
    }
}

std::optional<IntersectionArray> intersection_array_of(const Graph& g) {
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != g.degree(0))
            throw NotRegularError("vertices 0 and " + std::to_string(v) + " have degrees " +
                                  std::to_string(g.degree(0)) + " and " +
                                  std::to_string(g.degree(v)));
    const int n = g.vertex_count();
    const int diam = diameter(g);
    const long long unset = -1;
    std::vector<long long> bb(static_cast<std::size_t>(diam) + 1, unset);
    std::vector<long long> cc(static_cast<std::size_t>(diam) + 1, unset);
    for (int x = 0; x < n; ++x) {
        const auto dist = g.distances_from(x);
        int ecc = *std::max_element(dist.begin(), dist.end());
        if (ecc != diam)
            return std::nullopt; // distance partition depth must not depend on x
        for (int y = 0; y < n; ++y) {
            const int j = dist[static_cast<std::size_t>(y)];
            long long down = 0, up = 0;
            for (int z : g.neighbors(y)) {
                const int dz = dist[static_cast<std::size_t>(z)];
                if (dz == j - 1)
                    ++down;
                else if (dz == j + 1)
                    ++up;
            }
            auto& cj = cc[static_cast<std::size_t>(j)];
            auto& bj = bb[static_cast<std::size_t>(j)];
            if (cj == unset)
                cj = down;
            else if (cj != down)
                return std::nullopt;
            if (bj == unset)
                bj = up;
            else if (bj != up)
                return std::nullopt;
        }
    }
    std::vector<long long> b(bb.begin(), bb.end() - 1);
    std::vector<long long> c(cc.begin() + 1, cc.end());
    return IntersectionArray(std::move(b), std::move(c));
}

QuotientPair quotient_matrices(const IntersectionArray& arr) {
    const std::size_t m = static_cast<std::size_t>(arr.d()) + 1;
    RatMatrix q(m, m);
    for (int j = 0; j <= arr.d(); ++j) {
        const auto i = static_cast<std::size_t>(j);
        q.at(i, i) = make_integer(arr.a(j));
        if (j > 0)
            q.at(i, i - 1) = make_integer(arr.c(j));
        if (j < arr.d())
            q.at(i, i + 1) = make_integer(arr.b(j));
    }
    RatMatrix norm(m, m);
    const Rational invk = make_rational(Integer(1), make_integer(arr.k()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            norm.at(i, j) = q.at(i, j) * invk;
    return {std::move(q), std::move(norm)};
}

RatPoly quotient_charpoly(const IntersectionArray& arr) {
    const int d = arr.d();
    const Rational k(make_integer(arr.k()));
    const RatPoly x = RatPoly::monomial(1);
    RatPoly prev = RatPoly::one();              // 0x0 minor
    RatPoly cur = x - RatPoly::constant(Rational(make_integer(arr.a(0))) / k);
    for (int j = 1; j <= d; ++j) {
        RatPoly next = (x - RatPoly::constant(Rational(make_integer(arr.a(j))) / k)) * cur -
                       RatPoly::constant(Rational(make_integer(arr.b(j - 1)) * make_integer(arr.c(j))) / (k * k)) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    assert(cur.degree() == d + 1 && cur.is_monic());
    assert(cur.eval(Rational(1)) == 0);
    return cur;
}

std::vector<Rational> zhukovskij_coefficients(const std::vector<Rational>& charpoly_coeffs) {
    if (charpoly_coeffs.size() < 2 || charpoly_coeffs.back() != 1)
        throw InvalidParamsError("coefficient route needs a monic polynomial of degree >= 1");
    const int deg = static_cast<int>(charpoly_coeffs.size()) - 1;
    {
        Rational at_one(0);
        for (const auto& c : charpoly_coeffs)
            at_one += c;
        if (at_one != 0)
            throw InvalidParamsError("coefficient route needs a polynomial vanishing at 1");
    }
    auto rho = [&](int i) -> const Rational& { return charpoly_coeffs[static_cast<std::size_t>(i)]; };
    std::vector<Rational> alpha(2 * static_cast<std::size_t>(deg) + 1, Rational(0));
    for (int j = 0; j <= deg - 1; ++j) {
        Rational sum(0);
        for (int k2 = 0; 2 * k2 <= j; ++k2) {
            const int i = deg - (j - 2 * k2);
            sum += Rational(pow2(static_cast<unsigned long>(j - 2 * k2))) * rho(i) *
                   Rational(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k2)));
        }
        alpha[static_cast<std::size_t>(2 * deg - j)] = sum;
        alpha[static_cast<std::size_t>(j)] = sum; // palindromic
    }
    Rational mid(0);
    for (int j = 0; j <= deg - 1; ++j)
        mid += alpha[static_cast<std::size_t>(2 * deg - j)];
    alpha[static_cast<std::size_t>(deg)] = Rational(-2) * mid;
    return alpha;
}

CoefficientReport scaled_coefficient_filter(const RatPoly& f, int j_lo, int j_hi) {
    if (f.is_zero() || !f.is_monic() || f.degree() < 1)
        throw InvalidParamsError("coefficient filter needs a monic polynomial of degree >= 1");
    CoefficientReport rep;
    rep.charpoly = f.coeffs();
    rep.transform = zhukovskij_coefficients(f.coeffs());
    rep.pass = true;
    const int deg = f.degree();
    for (int j = std::max(j_lo, 0); j <= std::min(j_hi, deg); ++j) {
        Rational scaled = Rational(pow2(static_cast<unsigned long>(j))) * f.coeff(deg - j);
        if (!is_integer(scaled)) {
            rep.pass = false;
            rep.failing_j = j;
            break;
        }
    }
    return rep;
}

CoefficientReport coefficient_integrality_filter(const IntersectionArray& arr) {
    const RatPoly f = quotient_charpoly(arr);
    return scaled_coefficient_filter(f, 1, f.degree() - 1);
}

PeriodicityVerdict drg_periodicity(const IntersectionArray& arr) {
    // Any realization with valency >= 2 has an independent cycle, which puts
    // both walk eigenvalues +-1 in play; a nonzero a_j does the same for -1.
    const bool include_two = arr.k() >= 2 || !arr.bipartite_shell();
    return cyclotomic_support_verdict(quotient_charpoly(arr), include_two, Route::quotient);
}

IntersectionArray srg_array(long long n, long long k, long long lambda, long long mu) {
    if (k < 2 || lambda < 0 || lambda > k - 2 || mu < 1 || mu > k)
        throw InfeasibleParametersError("strongly regular ranges need k >= 2, 0 <= lambda <= k-2, 1 <= mu <= k");
    if (n < k + 2)
        throw InfeasibleParametersError("diameter-2 graph needs n >= k + 2");
    if (k * (k - lambda - 1) != (n - k - 1) * mu)
        throw InfeasibleParametersError("counting identity k(k-lambda-1) = (n-k-1)mu fails");
    return IntersectionArray({k, k - lambda - 1}, {1, mu});
}

bool srg_feasible(const SrgParams& p) {
    const auto [n, k, lambda, mu] = p;
    if (k < 2 || lambda < 0 || lambda > k - 2 || mu < 1 || mu > k || n < k + 2)
        return false;
    if (k * (k - lambda - 1) != (n - k - 1) * mu)
        return false;
    // multiplicities of the two non-principal eigenvalues must be
    // nonnegative integers
    const Integer diff = make_integer(lambda - mu);
    const Integer disc = diff * diff + 4 * make_integer(k - mu);
    const Integer bias = 2 * make_integer(k) + make_integer(n - 1) * diff;
    if (bias == 0)
        return (n - 1) % 2 == 0; // conference case, both multiplicities (n-1)/2
    Integer s = sqrt(disc);
    if (s * s != disc)
        return false;
    if (bias % s != 0)
        return false;
    const Integer q = bias / s;
    const Integer twice_m1 = make_integer(n - 1) - q;
    const Integer twice_m2 = make_integer(n - 1) + q;
    return twice_m1 >= 0 && twice_m2 >= 0 && twice_m1 % 2 == 0 && twice_m2 % 2 == 0;
}

std::vector<SrgClassification> classify_srg(long long k_max, int jobs) {
    std::vector<SrgParams> params;
    for (long long k = 2; k <= k_max; ++k)
        for (long long lambda = 0; lambda + 2 <= k; ++lambda)
            for (long long mu = 1; mu <= k; ++mu) {
                const long long num = k * (k - lambda - 1);
                if (num % mu != 0)
                    continue;
                const long long n = k + 1 + num / mu;
                SrgParams p{n, k, lambda, mu};
                if (srg_feasible(p))
                    params.push_back(p);
            }
    std::sort(params.begin(), params.end());
    std::vector<SrgClassification> out(params.size());
    parallel_for(params.size(), jobs, [&](std::size_t i) {
        const auto& p = params[i];
        IntersectionArray arr = srg_array(p.n, p.k, p.lambda, p.mu);
        out[i] = {p, coefficient_integrality_filter(arr), drg_periodicity(arr)};
    });
    return out;
}

std::vector<SrgParams> periodic_srg_parameters(long long k_max, int jobs) {
    std::vector<SrgParams> out;
    for (const auto& row : classify_srg(k_max, jobs))
        if (row.verdict.periodic)
            out.push_back(row.params);
    return out;
}

} // namespace grwalk
