#include <grwalk/matrix.hpp>

#include <cassert>

namespace grwalk {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

bool RatMatrix::is_identity() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

Rational RatMatrix::trace() const {
    assert(rows_ == cols_);
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i)
        t += at(i, i);
    return t;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    assert(v.size() == cols_);
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& m = at(i, j);
            if (m != 0)
                acc += m * v[j];
        }
        out[i] = acc;
    }
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    assert(a.cols_ == b.rows_);
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj != 0)
                    c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

RatMatrix pow(const RatMatrix& m, const Integer& e) {
    assert(m.rows() == m.cols());
    assert(e >= 0);
    RatMatrix acc = RatMatrix::identity(m.rows());
    RatMatrix base = m;
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t()))
            acc = acc * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return acc;
}

} // namespace grwalk
