#include "hermorb/linalg.hpp"

#include <stdexcept>

namespace hermorb {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_int(const IntMat& m) {
    QMatrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = m[i][j];
    return out;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool QMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QVec QMatrix::row(std::size_t i) const {
    return QVec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    QMatrix c(a.r_, a.c_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] + b.a_[k];
    return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    QMatrix c(a.r_, a.c_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] - b.a_[k];
    return c;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix size mismatch");
    QMatrix c(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
        }
    return c;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
    QMatrix c = a;
    for (auto& x : c.a_) x *= s;
    return c;
}

QMatrix bracket(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }

std::vector<std::size_t> rref(std::vector<QVec>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Rational inv = Rational(1) / rows[r][c];
        for (std::size_t j = c; j < ncols; ++j)
            if (!rows[r][j].is_zero()) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::size_t rank(std::vector<QVec> rows) { return rref(rows).size(); }

std::size_t rank(const QMatrix& m) {
    std::vector<QVec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rank(std::move(rows));
}

std::vector<QVec> kernel(const QMatrix& m) {
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    auto piv = rref(rows);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        QVec v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -rows[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<QVec> span_basis(std::vector<QVec> vecs) {
    rref(vecs);
    return vecs;
}

std::optional<QVec> solve_combination(const std::vector<QVec>& rows, const QVec& target) {
    // Solve x^T R = t by reducing the augmented system R^T x = t.
    const std::size_t k = rows.size();
    const std::size_t n = target.size();
    std::vector<QVec> aug(n, QVec(k + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) aug[j][i] = rows[i][j];
        aug[j][k] = target[j];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == k) return std::nullopt;
    QVec x(k);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][k];
    return x;
}

QMatrix inverse(const QMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<QVec> aug(n, QVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m(i, j);
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() != n || piv.back() != n - 1) throw std::domain_error("singular matrix");
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i][n + j];
    return inv;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 z = (unsigned __int128)a * b;
    std::uint64_t lo = static_cast<std::uint64_t>(z & kModPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kModPrime) s -= kModPrime;
    return s;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s >= kModPrime) s -= kModPrime;
    return s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kModPrime - b; }

std::uint64_t invmod(std::uint64_t a) {
    std::uint64_t result = 1, base = a, e = kModPrime - 2;
    while (e) {
        if (e & 1) result = mulmod(result, base);
        base = mulmod(base, base);
        e >>= 1;
    }
    return result;
}

std::uint64_t mod_reduce(const Rational& q) {
    auto red = [](std::int64_t x) {
        std::int64_t r = x % static_cast<std::int64_t>(kModPrime);
        if (r < 0) r += static_cast<std::int64_t>(kModPrime);
        return static_cast<std::uint64_t>(r);
    };
    return mulmod(red(q.num()), invmod(red(q.den())));
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const std::uint64_t inv = invmod(rows[r][c]);
        for (std::size_t j = c; j < ncols; ++j) rows[r][j] = mulmod(rows[r][j], inv);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const std::uint64_t f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (rows[r][j]) rows[i][j] = submod(rows[i][j], mulmod(f, rows[r][j]));
        }
        ++r;
    }
    return r;
}

}  // namespace hermorb

namespace hermorb {

std::optional<Rational> lp_maximize(const std::vector<QVec>& A, const QVec& b, const QVec& c) {
    const std::size_t m = A.size(), n = c.size();
    for (const auto& x : b)
        if (x.sign() < 0) throw std::invalid_argument("lp_maximize needs b >= 0");
    const std::size_t w = n + m + 1;
    std::vector<QVec> t(m + 1, QVec(w));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = 1;
        t[i][w - 1] = b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];
    while (true) {
        std::size_t enter = w;
        for (std::size_t j = 0; j + 1 < w; ++j)
            if (t[m][j].sign() < 0) {
                enter = j;
                break;
            }
        if (enter == w) return t[m][w - 1];
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter].sign() <= 0) continue;
            Rational ratio = t[i][w - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) return std::nullopt;
        const Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x = x / piv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < w; ++j)
                if (!t[leave][j].is_zero()) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
}

}  // namespace hermorb
