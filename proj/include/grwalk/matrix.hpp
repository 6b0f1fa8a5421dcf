#pragma once

#include <cstddef>
#include <vector>

#include <grwalk/numbers.hpp>

namespace grwalk {

// Dense matrix over the rationals, row-major.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix transpose() const;
    bool is_identity() const;
    Rational trace() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

RatMatrix pow(const RatMatrix& m, const Integer& e);

} // namespace grwalk
