#pragma once

#include <optional>
#include <string>
#include <vector>

#include <grwalk/numbers.hpp>

namespace grwalk {

// Dense univariate polynomials, coefficient index = power of x.
// Zero polynomial has an empty coefficient vector and degree -1.

class IntPoly;
struct PolyDivMod;

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);

    static RatPoly zero() { return RatPoly(); }
    static RatPoly one();
    static RatPoly constant(const Rational& c);
    // c * x^power
    static RatPoly monomial(int power, const Rational& c = Rational(1));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    // coefficient of x^i, zero outside the stored range
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;

    RatPoly operator-() const;
    RatPoly scaled(const Rational& c) const;
    RatPoly monic() const;
    RatPoly derivative() const;

    PolyDivMod divmod(const RatPoly& divisor) const;
    // quotient when the division is exact, otherwise nullopt
    std::optional<RatPoly> exact_divide(const RatPoly& divisor) const;

    std::string str(const std::string& var = "x") const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

struct PolyDivMod {
    RatPoly quotient;
    RatPoly remainder;
};

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one();
    static IntPoly constant(const Integer& c);
    static IntPoly monomial(int power, const Integer& c = Integer(1));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    const Integer& coeff(int i) const;
    const Integer& leading() const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;

    // gcd of coefficients, nonnegative; 0 for the zero polynomial
    Integer content() const;

    IntPoly operator-() const;
    std::optional<IntPoly> exact_divide(const IntPoly& divisor) const;

    RatPoly to_rat() const;
    std::string str(const std::string& var = "x") const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

RatPoly pow(const RatPoly& p, unsigned e);
// monic gcd / lcm over the rationals
RatPoly gcd(const RatPoly& a, const RatPoly& b);
RatPoly lcm(const RatPoly& a, const RatPoly& b);
// f / gcd(f, f'), monic: same roots, each simple
RatPoly squarefree_part(const RatPoly& f);

// present iff every coefficient is an integer
std::optional<IntPoly> try_to_int_poly(const RatPoly& f);
// integer multiple of f with content 1 and positive leading coefficient
IntPoly primitive_integer_form(const RatPoly& f);

} // namespace grwalk
