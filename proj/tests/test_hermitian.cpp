#include "doctest.h"
#include "hermorb/hermitian.hpp"

#include <numeric>
#include <stdexcept>

using namespace hermorb;

namespace {

// m from the table: A_n: (n+1)/gcd(p, n+1); B, C: 2; D: 2 for alpha_1, and for
// alpha_{n-1}, alpha_n 2 if n is even and 4 if n is odd.
int table_m(RootType t, int n, int p) {
    switch (t) {
        case RootType::A: return (n + 1) / std::gcd(p, n + 1);
        case RootType::B:
        case RootType::C: return 2;
        case RootType::D: return p == 1 ? 2 : (n % 2 == 0 ? 2 : 4);
    }
    return 0;
}

std::vector<SymmetricPairSpec> all_pairs(int max_rank) {
    std::vector<SymmetricPairSpec> out;
    for (RootType t : {RootType::A, RootType::B, RootType::C, RootType::D})
        for (int n = min_rank(t); n <= max_rank; ++n) {
            try {
                for (auto& p : enumerate_pairs(t, n)) out.push_back(p);
            } catch (const std::invalid_argument&) {
            }
        }
    return out;
}

}  // namespace

TEST_CASE("type A pairs") {
    auto pairs = enumerate_pairs(RootType::A, 5);
    REQUIRE(pairs.size() == 5);
    const auto& sp = pairs[1];  // alpha_2: SL(6)/S(GL(2)xGL(4))
    CHECK(sp.p_index == 2);
    CHECK(sp.group_name() == "SL(6)/S(GL(2)xGL(4))");
    REQUIRE(sp.k_levi.size() == 2);
    CHECK(sp.k_levi[0] == Component{RootType::A, 1});
    CHECK(sp.k_levi[1] == Component{RootType::A, 3});
    CHECK(sp.m == 3);
    // p = V(omega_1 + omega'_{q-1}) + V(omega_{p-1} + omega'_1)
    auto [w1, w2] = p_module_weights(sp);
    CHECK(w1.weight.coords() == IntVec{1, 0, 0, 1});
    CHECK(w2.weight.coords() == IntVec{1, 1, 0, 0});
    CHECK(w1.charge == 3);
    CHECK(w2.charge == -3);
}

TEST_CASE("the q = 2 pair of case 1.4 has p1 = V(omega_1 + omega')") {
    auto sp = make_pair(RootType::A, 5, 4);  // SL(6)/S(GL(4)xGL(2))
    auto [w1, w2] = p_module_weights(sp);
    CHECK(w1.weight.coords() == IntVec{1, 0, 0, 1});
    CHECK(w1.charge == sp.m);
}

TEST_CASE("type C and D pairs") {
    auto c = make_pair(RootType::C, 4, 4);
    CHECK(c.group_name() == "Sp(8)/GL(4)");
    auto [c1, c2] = p_module_weights(c);
    CHECK(c1.weight.coords() == IntVec{2, 0, 0});  // V(2 omega_1)
    CHECK(c2.weight.coords() == IntVec{0, 0, 2});  // V(2 omega_{n-1})

    auto d = make_pair(RootType::D, 6, 6);
    CHECK(d.key() == "D:6:gl");
    auto [d1, d2] = p_module_weights(d);
    CHECK(d1.weight.coords() == IntVec{0, 1, 0, 0, 0});  // V(omega_2)
    CHECK(d2.weight.coords() == IntVec{0, 0, 0, 1, 0});  // V(omega_{n-2})

    auto b = enumerate_pairs(RootType::B, 4);
    REQUIRE(b.size() == 1);
    CHECK(b[0].m == 2);
    auto [b1, b2] = p_module_weights(b[0]);
    CHECK(b1.weight.coords() == IntVec{1, 0, 0});
    CHECK(b2.weight.coords() == IntVec{1, 0, 0});
    CHECK(b1.charge == -b2.charge);
}

TEST_CASE("center orders") {
    CHECK(make_pair(RootType::A, 5, 2).m == 3);
    CHECK(make_pair(RootType::B, 5, 1).m == 2);
    CHECK(make_pair(RootType::D, 7, 7).m == 4);
    CHECK(make_pair(RootType::D, 6, 6).m == 2);
}

TEST_CASE("every pair: table m, lattice m, dual weights, opposite charges") {
    auto pairs = all_pairs(10);
    CHECK(pairs.size() > 40);
    for (const auto& sp : pairs) {
        CAPTURE(sp.key());
        CHECK(sp.m == table_m(sp.g_type, sp.rank, sp.p_index));
        CHECK(sp.m == center_order_from_lattice(sp.g_type, sp.rank, sp.p_index));
        auto [w1, w2] = p_module_weights(sp);
        CHECK(dual_weight(sp.k_levi, w1.weight) == w2.weight);
        CHECK(w1.charge == sp.m);
        CHECK(w2.charge == -sp.m);
        CHECK(pair_from_key(sp.key()).p_index == sp.p_index);
        CHECK(pair_from_key(sp.key()).key() == sp.key());
    }
}

TEST_CASE("m * omega_p^vee is the least multiple in the coroot lattice") {
    for (const auto& sp : all_pairs(8)) {
        auto cw = fundamental_coweight(sp.g_type, sp.rank, sp.p_index);
        auto integral = [&](int k) {
            for (auto& c : cw)
                if (!(Rational(k) * c).is_integer()) return false;
            return true;
        };
        CHECK(integral(sp.m));
        for (int k = 1; k < sp.m; ++k) CHECK_FALSE(integral(k));
    }
}

TEST_CASE("family bounds and bad keys") {
    CHECK_THROWS_AS(enumerate_pairs(RootType::B, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_pair(RootType::D, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_pair(RootType::C, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(pair_from_key("E:6"), std::invalid_argument);
    CHECK_THROWS_AS(pair_from_key("A:5"), std::invalid_argument);
    CHECK_THROWS_AS(pair_from_key("B:4:gl"), std::invalid_argument);
    CHECK(pair_from_key("A:3:p=2").group_name() == "SL(4)/S(GL(2)xGL(2))");
    CHECK(pair_from_key("C:4").p_index == 4);
    CHECK(pair_from_key("D:6:vec").p_index == 1);
}
