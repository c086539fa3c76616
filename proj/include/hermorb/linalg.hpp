#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hermorb/rational.hpp"

namespace hermorb {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;
using QVec = std::vector<Rational>;

// Dense exact matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static QMatrix identity(std::size_t n);
    static QMatrix from_int(const IntMat& m);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<Rational>& data() const { return a_; }

    bool is_zero() const;
    bool is_diagonal() const;
    QMatrix transpose() const;
    QVec row(std::size_t i) const;
    QVec flatten() const { return a_; }

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rational& s, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

QMatrix bracket(const QMatrix& x, const QMatrix& y);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<QVec>& rows);
std::size_t rank(std::vector<QVec> rows);
std::size_t rank(const QMatrix& m);
// Basis of {x : M x = 0}.
std::vector<QVec> kernel(const QMatrix& m);
// Basis of the span of the given vectors (echelon form).
std::vector<QVec> span_basis(std::vector<QVec> vecs);
// Unique x with sum_i x_i * rows[i] = target when rows are independent; nullopt if target is outside the span.
std::optional<QVec> solve_combination(const std::vector<QVec>& rows, const QVec& target);

QMatrix inverse(const QMatrix& m);

// max c.x subject to A x <= b, x >= 0, with b >= 0 (exact simplex, Bland's rule).
// Returns nullopt when the objective is unbounded.
std::optional<Rational> lp_maximize(const std::vector<QVec>& A, const QVec& b, const QVec& c);

// Rank over F_p, p = 2^61 - 1. A lower bound for the rank over Q of any
// rational matrix whose reduction mod p is the given matrix.
constexpr std::uint64_t kModPrime = (std::uint64_t{1} << 61) - 1;
std::uint64_t mod_reduce(const Rational& q);
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b);
std::uint64_t addmod(std::uint64_t a, std::uint64_t b);
std::uint64_t submod(std::uint64_t a, std::uint64_t b);
std::uint64_t invmod(std::uint64_t a);

}  // namespace hermorb
