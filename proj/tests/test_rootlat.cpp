#include "doctest.h"
#include "hermorb/rootlat.hpp"

#include <stdexcept>

using namespace hermorb;

namespace {

// <alpha_i, alpha_j^vee> from the euclidean realization.
IntMat euclid_cartan(RootType t, int n) {
    auto roots = detail::euclidean_simple_roots(t, n);
    IntMat a(n, IntVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = Rational(2) * detail::euclid_dot(roots[i], roots[j]) / detail::euclid_dot(roots[j], roots[j]);
            REQUIRE(v.is_integer());
            a[i][j] = v.num();
        }
    return a;
}

Rational det(IntMat m) {
    const std::size_t n = m.size();
    std::vector<QVec> a(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

// Highest root in epsilon coordinates, written in the simple-root basis.
IntVec euclid_highest_root(RootType t, int n) {
    auto roots = detail::euclidean_simple_roots(t, n);
    QVec theta(roots[0].size());
    switch (t) {
        case RootType::A: theta[0] = 1; theta[n] = -1; break;
        case RootType::B:
        case RootType::D: theta[0] = 1; theta[1] = 1; break;
        case RootType::C: theta[0] = 2; break;
    }
    auto x = solve_combination(roots, theta);
    REQUIRE(x.has_value());
    IntVec out;
    for (auto& c : *x) {
        REQUIRE(c.is_integer());
        out.push_back(c.num());
    }
    return out;
}

struct TR {
    RootType t;
    int n;
};

std::vector<TR> all_types(int max_rank) {
    std::vector<TR> out;
    for (RootType t : {RootType::A, RootType::B, RootType::C, RootType::D})
        for (int n = min_rank(t); n <= max_rank; ++n) out.push_back({t, n});
    return out;
}

}  // namespace

TEST_CASE("cartan matrices of small rank") {
    CHECK(cartan_matrix(RootType::A, 1) == IntMat{{2}});
    CHECK(cartan_matrix(RootType::A, 2) == IntMat{{2, -1}, {-1, 2}});
    auto c3 = cartan_matrix(RootType::C, 3);
    CHECK(c3[1][2] == -1);
    CHECK(c3[2][1] == -2);
}

TEST_CASE("cartan matrices agree with the euclidean realization and have the classical determinant") {
    for (auto [t, n] : all_types(9)) {
        CAPTURE(type_letter(t));
        CAPTURE(n);
        auto a = cartan_matrix(t, n);
        CHECK(a == euclid_cartan(t, n));
        for (int i = 0; i < n; ++i) CHECK(a[i][i] == 2);
        Rational expected = t == RootType::A ? n + 1 : t == RootType::D ? 4 : 2;
        CHECK(det(a) == expected);
    }
}

TEST_CASE("rank bounds") {
    CHECK_THROWS_AS(cartan_matrix(RootType::A, 0), std::invalid_argument);
    CHECK_THROWS_AS(cartan_matrix(RootType::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(cartan_matrix(RootType::C, 1), std::invalid_argument);
    CHECK_THROWS_AS(cartan_matrix(RootType::D, 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_root_type("E"), std::invalid_argument);
}

TEST_CASE("highest roots") {
    CHECK(highest_root(RootType::A, 4).coords() == IntVec{1, 1, 1, 1});
    CHECK(highest_root(RootType::B, 4)[0] == 1);
    auto c = highest_root(RootType::C, 4).coords();
    CHECK(c == IntVec{2, 2, 2, 1});
    for (auto [t, n] : all_types(9)) {
        CAPTURE(type_letter(t));
        CAPTURE(n);
        auto theta = highest_root(t, n);
        CHECK(theta.basis() == Basis::SimpleRoots);
        CHECK(theta.coords() == euclid_highest_root(t, n));
        for (auto x : theta.coords()) CHECK(x >= 1);
        // dominant: pairing with every simple coroot is nonnegative
        auto w = to_fund_weights(cartan_matrix(t, n), theta);
        for (auto x : w.coords()) CHECK(x >= 0);
    }
}

TEST_CASE("abelian unipotent radicals") {
    CHECK(abelian_radical_roots(RootType::A, 3) == std::vector<int>{1, 2, 3});
    CHECK(abelian_radical_roots(RootType::D, 5) == std::vector<int>{1, 4, 5});
    CHECK(abelian_radical_roots(RootType::B, 4) == std::vector<int>{1});
    CHECK(abelian_radical_roots(RootType::C, 4) == std::vector<int>{4});
    for (auto [t, n] : all_types(9)) {
        auto theta = highest_root(t, n);
        std::vector<int> ones;
        for (int i = 0; i < n; ++i)
            if (theta[i] == 1) ones.push_back(i + 1);
        CHECK(abelian_radical_roots(t, n) == ones);
    }
}

TEST_CASE("lattice vectors only combine within one basis") {
    LatticeVector a(Basis::SimpleRoots, {1, 2}), b(Basis::SimpleRoots, {0, 1});
    LatticeVector w(Basis::FundWeights, {1, 0});
    CHECK((a + b).coords() == IntVec{1, 3});
    CHECK((a - b).coords() == IntVec{1, 1});
    CHECK((a * 3).coords() == IntVec{3, 6});
    CHECK(b.leq(a));
    CHECK_FALSE(a.leq(b));
    CHECK_THROWS(a + w);
    CHECK_THROWS(a.leq(w));
}

TEST_CASE("products of root systems are block diagonal") {
    RootSystem rs({{RootType::A, 2}, {RootType::C, 2}});
    CHECK(rs.total_rank() == 4);
    CHECK(rs.offset(1) == 2);
    auto a = rs.cartan();
    CHECK(a[1][2] == 0);
    CHECK(a[2][3] == -1);
    CHECK(a[3][2] == -2);
    CHECK(rs.str() == "A2xC2");
}

TEST_CASE("fundamental coweights invert the cartan matrix") {
    for (auto [t, n] : all_types(7))
        for (int p = 1; p <= n; ++p) {
            auto cw = fundamental_coweight(t, n, p);
            auto a = cartan_matrix(t, n);
            // <alpha_i, omega_p^vee> = sum_j a_ij^T ... pairing of alpha_i with coroot alpha_j^vee is a[i][j]
            for (int i = 0; i < n; ++i) {
                Rational s;
                for (int j = 0; j < n; ++j) s += Rational(a[i][j]) * cw[j];
                CHECK(s == Rational(i + 1 == p ? 1 : 0));
            }
        }
}
