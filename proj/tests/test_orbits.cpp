#include "doctest.h"
#include "hermorb/orbits.hpp"

#include <set>
#include <stdexcept>

using namespace hermorb;

namespace {

std::vector<OrbitRecord> all_orbits(int max_rank) {
    std::vector<OrbitRecord> out;
    for (RootType t : {RootType::A, RootType::B, RootType::C, RootType::D})
        for (int n = min_rank(t); n <= max_rank; ++n) {
            std::vector<SymmetricPairSpec> pairs;
            try {
                pairs = enumerate_pairs(t, n);
            } catch (const std::invalid_argument&) {
                continue;
            }
            for (const auto& p : pairs)
                for (auto& o : list_orbits(p, n + 1)) out.push_back(o);
        }
    return out;
}

const std::vector<OrbitRecord>& orbits_up_to_8() {
    static const auto v = all_orbits(8);
    return v;
}

// Jordan type from the ranks of the powers: #blocks of size >= k is rank(e^{k-1}) - rank(e^k).
std::map<int, int> jordan_from_ranks(const QMatrix& e) {
    std::vector<std::size_t> rk{e.rows()};
    QMatrix pw = QMatrix::identity(e.rows());
    while (rk.back() > 0) {
        pw = pw * e;
        rk.push_back(rank(pw));
    }
    std::map<int, int> out;
    for (std::size_t k = 1; k < rk.size(); ++k) {
        long at_least_k = static_cast<long>(rk[k - 1] - rk[k]);
        long at_least_k1 = k + 1 < rk.size() ? static_cast<long>(rk[k] - rk[k + 1]) : 0;
        if (at_least_k - at_least_k1 > 0) out[static_cast<int>(k)] = static_cast<int>(at_least_k - at_least_k1);
    }
    return out;
}

int height_by_basis(const Realization& R, const QMatrix& e) {
    int best = 0;
    for (const auto& x : R.p_basis) {
        QMatrix y = x;
        int n = 0;
        while (true) {
            y = bracket(e, y);
            if (y.is_zero()) break;
            ++n;
        }
        best = std::max(best, n);
    }
    return best;
}

std::set<std::string> case_set(const std::vector<OrbitRecord>& v) {
    std::set<std::string> s;
    for (const auto& o : v) s.insert(o.case_id + "/" + o.params_str() + (o.variant.empty() ? "" : "/" + o.variant));
    return s;
}

}  // namespace

TEST_CASE("orbit lists") {
    auto sl22 = case_set(list_orbits(make_pair(RootType::A, 3, 2), 2));
    for (const char* c : {"1.1/r=1", "1.1/r=2", "1.2/r=1", "1.2/r=2", "1.3/r=1,s=1"}) CHECK(sl22.count(c) == 1);
    for (const auto& c : sl22) CHECK(c.rfind("1.5", 0) != 0);

    auto so10 = case_set(list_orbits(make_pair(RootType::D, 5, 1), 3));
    CHECK(so10 == std::set<std::string>{"4.1/-/I", "4.1/-/II", "4.2/-", "4.3/-/I", "4.3/-/II", "4.4/-"});

    auto sp4 = case_set(list_orbits(make_pair(RootType::C, 2, 2), 3));
    CHECK(sp4 == std::set<std::string>{"3.1/r=1", "3.1/r=2", "3.2/r=1", "3.2/r=2", "3.3/r=1,s=1"});
}

TEST_CASE("orbit records: ids round-trip, exponents sum to the dimension") {
    for (const auto& o : orbits_up_to_8()) {
        CAPTURE(o.id());
        CHECK(orbit_from_id(o.id()).id() == o.id());
        int total = 0;
        for (const auto& sp : o.signed_partition) {
            CHECK(sp.multiplicity >= 0);
            total += sp.part * sp.multiplicity;
        }
        auto real = realization_for(o.pair);
        CHECK(total * real->jordan_factor == static_cast<int>(real->dim));
    }
    CHECK(orbit_from_id("A:5:p=3/1.6/r=1,s=0").signed_partition.size() == 3);
    CHECK_THROWS_AS(make_orbit(make_pair(RootType::A, 5, 3), "1.6", 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_orbit(make_pair(RootType::A, 5, 3), "9.9", 1, 1), std::invalid_argument);
}

TEST_CASE("case 1.1 with (p,q,r) = (2,2,1)") {
    auto o = make_orbit(make_pair(RootType::A, 3, 2), "1.1", 1);
    auto t = build_triple(o);
    QMatrix e(4, 4), h(4, 4);
    e(0, 3) = 1;  // e'_2 -> e_1
    h(0, 0) = 1;
    h(3, 3) = -1;
    CHECK(t.e == e);
    CHECK(t.h == h);
    CHECK(adh_grading(t) == std::map<int, int>{{-1, 2}, {0, 3}, {1, 2}});
    auto cd = centralizer_dim(t);
    CHECK(cd.dim_K_e == 4);
    CHECK(cd.dim_Ke == 3);
    CHECK(p_height(t) == 2);
}

TEST_CASE("verify_triple rejects a broken triple") {
    auto t = build_triple(make_orbit(make_pair(RootType::A, 3, 2), "1.3", 1, 1));
    CHECK(verify_triple(t).all());
    MatrixTriple bad = t;
    bad.f = QMatrix(t.f.rows(), t.f.cols());
    auto r = verify_triple(bad);
    CHECK_FALSE(r.sl2_ok);
    bad = t;
    bad.e = t.h;
    CHECK_FALSE(verify_triple(bad).e_in_p);
}

TEST_CASE("case 1.4 with p = 5: f carries the factor 2") {
    auto t = build_triple(make_orbit(make_pair(RootType::A, 6, 5), "1.4"));
    CHECK(verify_triple(t).all());
    bool has_two = false;
    for (const auto& x : t.f.data()) {
        CHECK((x.is_zero() || x == Rational(1) || x == Rational(2)));
        has_two = has_two || x == Rational(2);
    }
    CHECK(has_two);
    for (const auto& x : t.e.data()) CHECK((x.is_zero() || x == Rational(1)));
    CHECK(p_height(t) == 3);
}

TEST_CASE("case 1.4 with p = 4: ad h has even eigenvalues in [-4, 4]") {
    auto t = build_triple(make_orbit(make_pair(RootType::A, 5, 4), "1.4"));
    for (auto [i, d] : adh_grading(t)) {
        CHECK(i % 2 == 0);
        CHECK(i >= -4);
        CHECK(i <= 4);
    }
}

TEST_CASE("case 2.3: h is central in k") {
    for (int n = 3; n <= 6; ++n) {
        auto pair = make_pair(RootType::B, n, 1);
        for (auto& o : list_orbits(pair, 4)) {
            if (o.case_id != "2.3") continue;
            auto g = adh_grading(build_triple(o));
            CHECK(g.size() == 1);
            CHECK(g.at(0) == static_cast<int>(realization_for(pair)->k_basis.size()));
        }
    }
}

TEST_CASE("case 2.2: e has Jordan type (3, 1^k) and both components") {
    auto pair = make_pair(RootType::B, 4, 1);
    auto o = make_orbit(pair, "2.2");
    auto t = build_triple(o);
    CHECK(jordan_from_ranks(t.e) == std::map<int, int>{{1, 6}, {3, 1}});
    auto bc = bicone_witness(t);
    CHECK(bc.e1_nonzero);
    CHECK(bc.e2_nonzero);
}

TEST_CASE("case 3.1 with (n, r) = (2, 2): L_e = O(2) and Q^u = 0") {
    auto t = build_triple(make_orbit(make_pair(RootType::C, 2, 2), "3.1", 2));
    auto g = adh_grading(t);
    int qu = 0;
    for (auto [i, d] : g)
        if (i > 0) qu += d;
    CHECK(centralizer_dim(t).dim_K_e == 1 + qu);
    auto bc = bicone_witness(t);
    CHECK(bc.e1_nonzero);
    CHECK_FALSE(bc.e2_nonzero);
}

TEST_CASE("case 1.3 has both bicone components") {
    auto bc = bicone_witness(build_triple(make_orbit(make_pair(RootType::A, 4, 2), "1.3", 1, 1)));
    CHECK(bc.both_components_nonzero());
    CHECK(bc.charges_ok);
}

TEST_CASE("case 5.4 with n = 4") {
    auto pair = make_pair(RootType::D, 4, 4);
    auto t = build_triple(make_orbit(pair, "5.4"));
    CHECK(verify_triple(t).all());
    CHECK(p_height(t) == 3);
    CHECK(is_spherical(t).spherical);
}

TEST_CASE("zero element") {
    auto pair = make_pair(RootType::A, 5, 3);
    auto real = realization_for(pair);
    QMatrix zero(real->dim, real->dim);
    CHECK(is_spherical(*real, zero).spherical);
    CHECK(p_height(*real, zero) == 0);
    CHECK(centralizer_dim(*real, zero).dim_K_e == static_cast<int>(real->k_basis.size()));
    CHECK(centralizer_dim(*real, zero).dim_Ke == 0);
}

TEST_CASE("a regular nilpotent of SL(6)/S(GL(3)xGL(3)) is not spherical") {
    auto real = realization_for(make_pair(RootType::A, 5, 3));
    // e'_3 -> e_3 -> e'_2 -> e_2 -> e'_1 -> e_1 -> 0, signed partition (+6)
    QMatrix e(6, 6);
    for (int j = 0; j < 3; ++j) e(j, 3 + j) = 1;
    for (int j = 1; j < 3; ++j) e(3 + j - 1, j) = 1;
    CHECK(real->in_p(e));
    CHECK(jordan_from_ranks(e) == std::map<int, int>{{6, 1}});
    auto rep = is_spherical(*real, e);
    CHECK(rep.dim_Ke == 15);
    CHECK_FALSE(rep.spherical);
}

TEST_CASE("every orbit up to rank 8: triple, Jordan type, signs, grading, height, sphericity, bicone") {
    const auto& orbits = orbits_up_to_8();
    CHECK(orbits.size() > 300);
    for (const auto& o : orbits) {
        CAPTURE(o.id());
        auto t = build_triple(o);
        const auto& R = *t.real;
        CHECK(verify_triple(t).all());

        std::map<int, int> from_partition;
        for (const auto& sp : o.signed_partition)
            if (sp.multiplicity > 0) from_partition[sp.part] += sp.multiplicity * R.jordan_factor;
        CHECK(jordan_from_ranks(t.e) == from_partition);
        CHECK(jordan_type(t.e) == from_partition);
        CHECK(signed_jordan_type(t) == expected_signed_jordan_type(o));

        auto g = adh_grading(t);
        int total = 0;
        for (auto [i, d] : g) {
            total += d;
            CHECK(g.count(-i) == 1);
            if (g.count(-i)) CHECK(g.at(-i) == d);
        }
        CHECK(total == static_cast<int>(R.k_basis.size()));

        auto cd = centralizer_dim(t);
        CHECK(cd.dim_Ke + cd.dim_K_e == static_cast<int>(R.k_basis.size()));

        int ht = p_height(t);
        CHECK(ht == height_by_basis(R, t.e));
        CHECK((ht == 2 || ht == 3));
        CHECK((ht == 3) == expected_height_three(o));

        auto sph = is_spherical(t);
        CHECK(sph.spherical);
        CHECK(sph.dim_Ke == cd.dim_Ke);

        auto bc = bicone_witness(t);
        CHECK(bc.h_weight_on_e_is_2);
        CHECK(bc.charges_ok);
    }
}

TEST_CASE("orthogonal cases with Jordan type (3, 1^k) have height 2") {
    // In so(N) with e of type (3, 1^k), g = Lambda^2 V splits into sl2-modules of
    // dimension <= 3, so (ad e)^3 vanishes on all of g.
    for (const auto& o : orbits_up_to_8()) {
        if (o.case_id != "2.2" && o.case_id != "4.2") continue;
        CAPTURE(o.id());
        auto t = build_triple(o);
        const auto& R = *t.real;
        CHECK(jordan_from_ranks(t.e).at(3) == 1);
        bool cube_zero = true;
        for (const auto* basis : {&R.k_basis, &R.p_basis})
            for (const auto& x : *basis)
                cube_zero = cube_zero && bracket(t.e, bracket(t.e, bracket(t.e, x))).is_zero();
        CHECK(cube_zero);
        CHECK(p_height(t) == 2);
    }
}

TEST_CASE("case 5.2: the shifted index n-2r+i-1 breaks the sl2 relations") {
    auto pair = make_pair(RootType::D, 6, 6);
    const int n = 6, r = 2;
    auto t = build_triple(make_orbit(pair, "5.2", r));
    CHECK(verify_triple(t).all());
    // basis e_1..e_n, phi_1..phi_n; e_i ^ e_j in the upper block, phi_i ^ phi_j in the lower one
    auto up = [&](QMatrix& m, int i, int j) {
        m(i - 1, n + j - 1) += 1;
        m(j - 1, n + i - 1) -= 1;
    };
    auto dn = [&](QMatrix& m, int i, int j) {
        m(n + j - 1, i - 1) += 1;
        m(n + i - 1, j - 1) -= 1;
    };
    MatrixTriple lit = t;
    lit.e = QMatrix(2 * n, 2 * n);
    lit.f = QMatrix(2 * n, 2 * n);
    for (int i = 1; i <= r; ++i) {
        dn(lit.e, n - 2 * r + i - 1, n - i + 1);
        up(lit.f, n - 2 * r + i - 1, n - i + 1);
    }
    CHECK_FALSE(verify_triple(lit).sl2_ok);
    MatrixTriple fixed = lit;
    fixed.e = QMatrix(2 * n, 2 * n);
    fixed.f = QMatrix(2 * n, 2 * n);
    for (int i = 1; i <= r; ++i) {
        dn(fixed.e, n - 2 * r + i, n - i + 1);
        up(fixed.f, n - 2 * r + i, n - i + 1);
    }
    CHECK(fixed.e == t.e);
    CHECK(verify_triple(fixed).sl2_ok);
}
