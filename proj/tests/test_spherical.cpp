#include "doctest.h"
#include "hermorb/semigroup.hpp"
#include "hermorb/spherical.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

using namespace hermorb;

namespace {

IntVec row_of(const SphericalSystem& s, const std::string& name) {
    for (std::size_t i = 0; i < s.n_sigma(); ++i)
        if (s.sigma_names[i] == name) return s.sigma_in_colors[i];
    FAIL("no spherical root named " << name);
    return {};
}

int color_index(const SphericalSystem& s, const std::string& name) {
    for (std::size_t i = 0; i < s.n_colors(); ++i)
        if (s.colors[i] == name) return static_cast<int>(i);
    return -1;
}

IntVec add(IntVec a, const IntVec& b, std::int64_t k = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
    return a;
}

std::size_t row_rank(const IntMat& m) {
    std::vector<QVec> rows;
    for (const auto& r : m) rows.emplace_back(r.begin(), r.end());
    return rank(rows);
}

std::vector<SphericalSystem> encoded_systems() {
    std::vector<SphericalSystem> out{system_ax111()};
    for (int p = 4; p <= 7; ++p) {
        out.push_back(system_case_1_4(p));
        out.push_back(system_case_1_5(p));
    }
    for (int p = 1; p <= 7; ++p)
        for (int q = 1; q <= 7; ++q)
            for (int r = 0; r <= 4; ++r)
                for (int s = 0; s <= 4; ++s) {
                    if (r + s + 2 <= p && r + s + 1 <= q) out.push_back(system_case_1_6(p, q, r, s));
                    if (r + s + 1 <= p && r + s + 2 <= q) out.push_back(system_case_1_7(p, q, r, s));
                }
    for (int r = 1; r <= 3; ++r)
        for (int t = 1; t <= 3; ++t)
            for (int s = 1; s <= 3; ++s) out.push_back(system_ay_a_ay(r, t, s));
    return out;
}

}  // namespace

TEST_CASE("a^x(1,1,1)") {
    auto s = system_ax111();
    CHECK(s.ambient.str() == "A1xA1xA1");
    CHECK(s.n_colors() == 3);
    CHECK(s.sigma_in_colors[2] == IntVec{1, 1, -1});
    CHECK(add(s.sigma_in_colors[0], s.sigma_in_colors[1]) == IntVec{0, 0, 2});
    CHECK(s.color_weights == std::vector<IntVec>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    // omega(L_sigma_1) = -omega(D1) + omega(D2) + omega(D3)
    IntVec w(3, 0);
    for (std::size_t c = 0; c < 3; ++c) w = add(w, s.color_weights[c], s.sigma_in_colors[0][c]);
    CHECK(w == IntVec{2, 0, 0});
    CHECK_FALSE(s.designated1.has_value());
    CHECK_FALSE(s.designated2.has_value());
}

TEST_CASE("case 1.4") {
    auto s = system_case_1_4(5);
    REQUIRE(s.n_colors() == 5);
    REQUIRE(s.n_sigma() == 3);
    const IntVec s1 = s.sigma_in_colors[0], s2 = s.sigma_in_colors[1], s3 = s.sigma_in_colors[2];
    CHECK(s1 == IntVec{1, 1, -1, 0, 0});
    CHECK(s3 == IntVec{1, -1, 1, -1, 0});
    CHECK(add(s1, s3) == IntVec{2, 0, 0, -1, 0});  // 2D1 - D4
    CHECK(add(s1, s2) == IntVec{0, 2, 0, 0, -1});  // 2D2 - D5
    CHECK(*s.designated1 == IntVec{1, 0, 0, 0, 0});
    CHECK(*s.designated2 == IntVec{0, 1, 0, 0, 0});
    CHECK(system_case_1_4(4).n_colors() == 4);
    CHECK_THROWS_AS(system_case_1_4(3), std::invalid_argument);
    CHECK_THROWS_AS(system_case_1_5(3), std::invalid_argument);
}

TEST_CASE("case 1.5 is case 1.4 with the two factors exchanged") {
    for (int q = 4; q <= 7; ++q) {
        auto a = system_case_1_4(q), b = system_case_1_5(q);
        REQUIRE(a.n_colors() == b.n_colors());
        REQUIRE(a.n_sigma() == b.n_sigma());
        std::vector<int> cp(a.n_colors()), sp(a.n_sigma());
        std::iota(cp.begin(), cp.end(), 0);
        bool found = false;
        do {
            std::iota(sp.begin(), sp.end(), 0);
            do {
                bool same = true;
                for (std::size_t i = 0; i < sp.size() && same; ++i)
                    for (std::size_t c = 0; c < cp.size() && same; ++c)
                        same = a.sigma_in_colors[i][c] == b.sigma_in_colors[sp[i]][cp[c]];
                // the exchange swaps p1 and p2
                for (std::size_t c = 0; c < cp.size() && same; ++c)
                    same = (*a.designated1)[c] == (*b.designated2)[cp[c]] &&
                           (*a.designated2)[c] == (*b.designated1)[cp[c]];
                found = found || same;
            } while (!found && std::next_permutation(sp.begin(), sp.end()));
        } while (!found && std::next_permutation(cp.begin(), cp.end()));
        CHECK(found);
    }
}

TEST_CASE("case 1.6") {
    SUBCASE("d^k_1 = a^k_1 - a^k_2") {
        std::mt19937 rng(7);
        for (auto [p, q, r, s] : std::vector<std::array<int, 4>>{{5, 5, 1, 1}, {6, 6, 2, 1}, {7, 6, 2, 2}, {5, 4, 1, 2}}) {
            auto sys = system_case_1_6(p, q, r, s);
            const int c1 = color_index(sys, "D^1_1"), c2 = color_index(sys, "D^2_1");
            REQUIRE(c1 >= 0);
            REQUIRE(c2 >= 0);
            for (int trial = 0; trial < 50; ++trial) {
                IntVec a(sys.n_sigma());
                for (auto& x : a) x = static_cast<std::int64_t>(rng() % 7) - 3;
                auto v = sys.to_colors(a);
                CHECK(v[c1] == a[0] - a[1]);
                CHECK(v[c2] == a[2 * r] - a[2 * r + 1]);
            }
        }
    }
    SUBCASE("s = 0 moves the second designated color") {
        auto sys = system_case_1_6(5, 5, 1, 0);
        IntVec d2(sys.n_colors(), 0);
        d2[color_index(sys, "D^2_2")] = 1;
        d2[color_index(sys, "D^2_3")] = 1;
        CHECK(*sys.designated2 == d2);
        CHECK(color_index(sys, "D^2_1") == -1);
    }
    SUBCASE("tau exists iff r+s < q-1") {
        for (int q = 2; q <= 6; ++q)
            for (int r = 0; r + 1 <= q; ++r)
                for (int s = 0; r + s + 1 <= q; ++s) {
                    auto sys = system_case_1_6(r + s + 3, q, r, s);
                    bool tau = std::count(sys.sigma_names.begin(), sys.sigma_names.end(), "tau") == 1;
                    CHECK(tau == (r + s < q - 1));
                    CHECK(sys.n_sigma() == static_cast<std::size_t>(2 * r + 2 * s + (tau ? 1 : 0)));
                }
    }
    SUBCASE("parameter constraints") {
        CHECK_THROWS_AS(system_case_1_6(3, 5, 1, 1), std::invalid_argument);
        CHECK_THROWS_AS(system_case_1_6(5, 2, 1, 1), std::invalid_argument);
        CHECK_THROWS_AS(system_case_1_6(5, 5, -1, 0), std::invalid_argument);
        CHECK_THROWS_AS(system_case_1_7(5, 3, 1, 1), std::invalid_argument);
    }
}

TEST_CASE("a^y(r,r)+a(t)+a^y(s,s)") {
    for (int r = 1; r <= 3; ++r)
        for (int t = 1; t <= 3; ++t)
            for (int s = 1; s <= 3; ++s) {
                auto sys = system_ay_a_ay(r, t, s);
                const std::size_t nd = 2 * r + 2 * s + 4;
                CHECK(sys.n_colors() == nd);
                IntVec a1(nd, 0);
                a1[0] = 1, a1[1] = 1, a1[2] = -1;
                CHECK(row_of(sys, "alpha_1") == a1);
                IntVec as(nd, 0);
                as[nd - 3] = -1, as[nd - 2] = 1, as[nd - 1] = 1;
                CHECK(row_of(sys, "alpha''_" + std::to_string(s)) == as);
            }
    CHECK_THROWS_AS(system_ay_a_ay(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(system_ay_a_ay(1, 0, 1), std::invalid_argument);
}

TEST_CASE("quotient by the distinguished set Delta_1 u Delta_2") {
    for (int r = 1; r <= 3; ++r)
        for (int t = 1; t <= 3; ++t)
            for (int s = 1; s <= 3; ++s) {
                auto sys = system_ay_a_ay(r, t, s);
                auto dist = ay_a_ay_distinguished(r, t, s);
                // Delta_1 = {D_2i}, Delta_2 = {D_{2r+2i+3}}, 1-based
                std::vector<int> expected;
                for (int i = 1; i <= r; ++i) expected.push_back(2 * i - 1);
                for (int i = 1; i <= s; ++i) expected.push_back(2 * r + 2 * i + 2);
                CHECK(dist == expected);
                auto qs = quotient_by_colors(sys, dist);
                CHECK(qs.n_colors() == sys.n_colors() - dist.size());
                // Sigma/Delta' in simple-root coordinates of A_r x A_{r+s+t} x A_s
                const int n = r + (r + s + t) + s;
                auto a = [&](int i) { return i - 1; };
                auto ap = [&](int i) { return r + i - 1; };
                auto app = [&](int i) { return r + (r + s + t) + i - 1; };
                std::vector<IntVec> want;
                auto root = [&](std::vector<int> idx) {
                    IntVec v(n, 0);
                    for (int i : idx) v[i] = 1;
                    want.push_back(v);
                };
                for (int i = 2; i <= r; ++i) root({a(i), ap(i - 1)});
                std::vector<int> mid;
                for (int i = r + 1; i <= r + t; ++i) mid.push_back(ap(i));
                root(mid);
                for (int i = 1; i <= s - 1; ++i) root({ap(r + t + 1 + i), app(i)});
                std::vector<IntVec> got;
                for (const auto& v : qs.sigma) got.push_back(v.coords());
                std::sort(got.begin(), got.end());
                std::sort(want.begin(), want.end());
                CHECK(got == want);
                CHECK(row_rank(qs.sigma_in_colors) == qs.n_sigma());
            }
}

TEST_CASE("quotients outside the catalog are rejected") {
    auto ax = system_ax111();
    auto same = quotient_by_colors(ax, {});
    CHECK(same.sigma_in_colors == ax.sigma_in_colors);
    CHECK(same.colors == ax.colors);
    for (int c = 0; c < 3; ++c) CHECK_THROWS_AS(quotient_by_colors(ax, {c}), std::invalid_argument);
    auto ay = system_ay_a_ay(2, 1, 2);
    CHECK_THROWS_AS(quotient_by_colors(ay, {0}), std::invalid_argument);
}

TEST_CASE("every encoded system validates and embeds Z Sigma in Z Delta") {
    for (const auto& s : encoded_systems()) {
        CAPTURE(s.id);
        CHECK_NOTHROW(s.validate());
        CHECK(row_rank(s.sigma_in_colors) == s.n_sigma());
        CHECK(s.sigma_names.size() == s.n_sigma());
        for (const auto& v : s.sigma) CHECK(v.size() == static_cast<std::size_t>(s.ambient.total_rank()));
        for (const auto* d : {&s.designated1, &s.designated2})
            if (d->has_value())
                for (auto x : **d) CHECK(x >= 0);
    }
}

TEST_CASE("validate catches broken systems") {
    auto s = system_case_1_4(5);
    s.designated1 = IntVec{-1, 0, 0, 0, 0};
    CHECK_THROWS_AS(s.validate(), std::logic_error);
    s = system_case_1_4(5);
    s.sigma_in_colors[2] = s.sigma_in_colors[0];
    CHECK_THROWS_AS(s.validate(), std::logic_error);
}
