#include <grwalk/poly.hpp>

#include <algorithm>
#include <cassert>
#include <sstream>

namespace grwalk {

namespace {

const Rational kRatZero(0);
const Integer kIntZero(0);

template <typename Coeff>
std::string render(const std::vector<Coeff>& coeffs, const std::string& var) {
    if (coeffs.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        const Coeff& c = coeffs[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        Coeff mag = neg ? Coeff(-c) : c;
        if (first) {
            if (neg)
                out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        const bool unit = (mag == 1) && i != 0;
        if (!unit)
            out << to_string(mag);
        if (i > 0) {
            if (!unit)
                out << "*";
            out << var;
            if (i > 1)
                out << "^" << i;
        }
    }
    if (first)
        return "0";
    return out.str();
}

} // namespace

// ---- RatPoly ----

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void RatPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

RatPoly RatPoly::one() {
    return RatPoly({Rational(1)});
}

RatPoly RatPoly::constant(const Rational& c) {
    return RatPoly({c});
}

RatPoly RatPoly::monomial(int power, const Rational& c) {
    assert(power >= 0);
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1, Rational(0));
    v.back() = c;
    return RatPoly(std::move(v));
}

bool RatPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

const Rational& RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return kRatZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& RatPoly::leading() const {
    assert(!coeffs_.empty());
    return coeffs_.back();
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::operator-() const {
    RatPoly r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

RatPoly RatPoly::scaled(const Rational& c) const {
    if (c == 0)
        return RatPoly();
    RatPoly r(*this);
    for (auto& x : r.coeffs_)
        x *= c;
    return r;
}

RatPoly RatPoly::monic() const {
    assert(!is_zero());
    return scaled(Rational(1) / leading());
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1)
        return RatPoly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return RatPoly(std::move(v));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        v[i] += b.coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        v[i] -= b.coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero())
        return RatPoly();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RatPoly(std::move(v));
}

PolyDivMod RatPoly::divmod(const RatPoly& divisor) const {
    assert(!divisor.is_zero());
    if (degree() < divisor.degree())
        return {RatPoly(), *this};
    std::vector<Rational> rem = coeffs_;
    const int dq = degree() - divisor.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1, Rational(0));
    const Rational& lead = divisor.leading();
    for (int k = dq; k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + divisor.degree())] / lead;
        if (c == 0)
            continue;
        quot[static_cast<std::size_t>(k)] = c;
        for (int i = 0; i <= divisor.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= c * divisor.coeff(i);
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

std::optional<RatPoly> RatPoly::exact_divide(const RatPoly& divisor) const {
    if (divisor.is_zero())
        return std::nullopt;
    PolyDivMod dm = divmod(divisor);
    if (!dm.remainder.is_zero())
        return std::nullopt;
    return dm.quotient;
}

std::string RatPoly::str(const std::string& var) const {
    return render(coeffs_, var);
}

// ---- IntPoly ----

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPoly IntPoly::one() {
    return IntPoly({Integer(1)});
}

IntPoly IntPoly::constant(const Integer& c) {
    return IntPoly({c});
}

IntPoly IntPoly::monomial(int power, const Integer& c) {
    assert(power >= 0);
    std::vector<Integer> v(static_cast<std::size_t>(power) + 1, Integer(0));
    v.back() = c;
    return IntPoly(std::move(v));
}

bool IntPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

const Integer& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return kIntZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& IntPoly::leading() const {
    assert(!coeffs_.empty());
    return coeffs_.back();
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + Rational(*it);
    return acc;
}

Integer IntPoly::content() const {
    Integer g(0);
    for (const auto& c : coeffs_)
        g = gcd(g, c);
    return g;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        v[i] += b.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        v[i] -= b.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero())
        return IntPoly();
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(v));
}

std::optional<IntPoly> IntPoly::exact_divide(const IntPoly& divisor) const {
    if (divisor.is_zero())
        return std::nullopt;
    if (degree() < divisor.degree())
        return is_zero() ? std::optional<IntPoly>(IntPoly()) : std::nullopt;
    std::vector<Integer> rem = coeffs_;
    const int dq = degree() - divisor.degree();
    std::vector<Integer> quot(static_cast<std::size_t>(dq) + 1, Integer(0));
    const Integer& lead = divisor.leading();
    for (int k = dq; k >= 0; --k) {
        Integer& top = rem[static_cast<std::size_t>(k + divisor.degree())];
        if (top == 0)
            continue;
        if (top % lead != 0)
            return std::nullopt;
        Integer c = top / lead;
        quot[static_cast<std::size_t>(k)] = c;
        for (int i = 0; i <= divisor.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= c * divisor.coeff(i);
    }
    for (const auto& c : rem)
        if (c != 0)
            return std::nullopt;
    return IntPoly(std::move(quot));
}

RatPoly IntPoly::to_rat() const {
    std::vector<Rational> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        v.emplace_back(c);
    return RatPoly(std::move(v));
}

std::string IntPoly::str(const std::string& var) const {
    return render(coeffs_, var);
}

// ---- free functions ----

RatPoly pow(const RatPoly& p, unsigned e) {
    RatPoly acc = RatPoly::one();
    RatPoly base = p;
    while (e > 0) {
        if (e & 1u)
            acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a;
    RatPoly y = b;
    while (!y.is_zero()) {
        RatPoly r = x.divmod(y).remainder;
        if (!r.is_zero())
            r = r.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

RatPoly lcm(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero())
        return RatPoly();
    RatPoly g = gcd(a, b);
    auto q = (a * b).exact_divide(g);
    assert(q.has_value());
    return q->monic();
}

RatPoly squarefree_part(const RatPoly& f) {
    assert(!f.is_zero());
    if (f.degree() == 0)
        return RatPoly::one();
    RatPoly g = gcd(f, f.derivative());
    auto q = f.exact_divide(g);
    assert(q.has_value());
    return q->monic();
}

std::optional<IntPoly> try_to_int_poly(const RatPoly& f) {
    std::vector<Integer> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        if (!is_integer(c))
            return std::nullopt;
        v.push_back(c.get_num());
    }
    return IntPoly(std::move(v));
}

IntPoly primitive_integer_form(const RatPoly& f) {
    assert(!f.is_zero());
    Integer den(1);
    for (const auto& c : f.coeffs())
        den = lcm(den, c.get_den());
    std::vector<Integer> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        Rational scaled = c * Rational(den);
        assert(is_integer(scaled));
        v.push_back(scaled.get_num());
    }
    IntPoly p(std::move(v));
    Integer c = p.content();
    if (c > 1) {
        auto q = p.exact_divide(IntPoly::constant(c));
        assert(q.has_value());
        p = *q;
    }
    if (p.leading() < 0)
        p = -p;
    return p;
}

} // namespace grwalk
