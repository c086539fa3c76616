#include "hermorb/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace hermorb {

bool SemigroupTriple::operator<(const SemigroupTriple& o) const {
    return std::tie(n1, n2, E) < std::tie(o.n1, o.n2, o.E);
}

namespace {

std::vector<QVec> sigma_rows(const SphericalSystem& sys) {
    std::vector<QVec> rows;
    for (const auto& r : sys.sigma_in_colors) rows.emplace_back(r.begin(), r.end());
    return rows;
}

IntVec sub(IntVec a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

IntVec add(IntVec a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

bool nonneg(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

bool is_zero_vec(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

bool leq_vec(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

void check_len(const SphericalSystem& sys, const ColorVector& v) {
    if (v.size() != sys.n_colors())
        throw std::invalid_argument("color vector of length " + std::to_string(v.size()) + " for system " + sys.id +
                                    " with " + std::to_string(sys.n_colors()) + " colors");
}

}  // namespace

std::optional<IntVec> sigma_coordinates(const SphericalSystem& sys, const ColorVector& v) {
    check_len(sys, v);
    if (sys.sigma.empty()) {
        if (is_zero_vec(v)) return IntVec{};
        return std::nullopt;
    }
    auto x = solve_combination(sigma_rows(sys), QVec(v.begin(), v.end()));
    if (!x) return std::nullopt;
    IntVec out;
    for (const auto& q : *x) {
        if (!q.is_integer()) return std::nullopt;
        out.push_back(q.num());
    }
    return out;
}

bool leq_sigma(const SphericalSystem& sys, const ColorVector& D, const ColorVector& E) {
    check_len(sys, D);
    auto a = sigma_coordinates(sys, sub(E, D));
    return a && nonneg(*a);
}

std::vector<IntVec> sigma_elements_below(const SphericalSystem& sys, const ColorVector& E0) {
    check_len(sys, E0);
    const std::size_t k = sys.n_sigma(), n = sys.n_colors();
    if (!nonneg(E0)) return {};
    if (k == 0) return {IntVec{}};
    const auto& S = sys.sigma_in_colors;
    // A a <= E0 with A = S^T
    std::vector<QVec> A(n, QVec(k));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < k; ++i) A[j][i] = S[i][j];
    QVec b(E0.begin(), E0.end());
    IntVec ub(k);
    for (std::size_t i = 0; i < k; ++i) {
        QVec c(k);
        c[i] = 1;
        auto m = lp_maximize(A, b, c);
        if (!m) throw std::domain_error("system " + sys.id + " has infinitely many elements below a color vector");
        ub[i] = m->floor();
    }
    // min_rest[i][j]: least possible contribution of variables i.. to column j
    std::vector<IntVec> min_rest(k + 1, IntVec(n, 0));
    for (std::size_t i = k; i-- > 0;)
        for (std::size_t j = 0; j < n; ++j) min_rest[i][j] = min_rest[i + 1][j] + std::min<std::int64_t>(0, S[i][j]) * ub[i];
    std::vector<IntVec> out;
    IntVec a(k, 0), partial(n, 0);
    std::function<void(std::size_t)> dfs = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j)
            if (partial[j] + min_rest[i][j] > E0[j]) return;
        if (i == k) {
            out.push_back(a);
            return;
        }
        for (std::int64_t v = 0; v <= ub[i]; ++v) {
            a[i] = v;
            dfs(i + 1);
            for (std::size_t j = 0; j < n; ++j) partial[j] += S[i][j];
        }
        for (std::size_t j = 0; j < n; ++j) partial[j] -= S[i][j] * (ub[i] + 1);
        a[i] = 0;
    };
    dfs(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<ColorVector> dominated_element(const SphericalSystem& sys, const ColorVector& E) {
    for (const auto& a : sigma_elements_below(sys, E)) {
        if (is_zero_vec(a)) continue;
        return sub(E, sys.to_colors(a));
    }
    return std::nullopt;
}

bool is_minuscule(const SphericalSystem& sys, const ColorVector& E) { return !dominated_element(sys, E).has_value(); }

std::vector<IntVec> covering_differences(const SphericalSystem& sys, int bound) {
    if (bound < 1) throw std::invalid_argument("covering_differences needs bound >= 1");
    const std::size_t k = sys.n_sigma();
    std::vector<IntVec> out;
    IntVec a(k, 0);
    std::function<void(std::size_t)> gen = [&](std::size_t i) {
        if (i < k) {
            for (int v = 0; v <= bound; ++v) {
                a[i] = v;
                gen(i + 1);
            }
            a[i] = 0;
            return;
        }
        if (is_zero_vec(a)) return;
        const IntVec g = sys.to_colors(a);
        IntVec D(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) D[j] = std::max<std::int64_t>(0, -g[j]);
        // cover iff no 0 < a1 < a with D + a1 >= 0
        bool cover = true;
        IntVec a1(k, 0);
        std::function<void(std::size_t)> split = [&](std::size_t t) {
            if (!cover) return;
            if (t < k) {
                for (std::int64_t v = 0; v <= a[t]; ++v) {
                    a1[t] = v;
                    split(t + 1);
                }
                a1[t] = 0;
                return;
            }
            if (is_zero_vec(a1) || a1 == a) return;
            if (nonneg(add(D, sys.to_colors(a1)))) cover = false;
        };
        split(0);
        if (cover) out.push_back(a);
    };
    gen(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t height(const ColorVector& E) {
    std::int64_t h = 0;
    for (auto x : E) h += x;
    return h;
}

PositivePart positive_part_height(const ColorVector& E) {
    PositivePart p{E, height(E)};
    for (auto& x : p.plus) x = std::max<std::int64_t>(0, x);
    return p;
}

std::vector<ColorVector> sections_decomposition(const SphericalSystem& sys, const ColorVector& E) {
    std::vector<ColorVector> out;
    for (const auto& a : sigma_elements_below(sys, E)) out.push_back(sub(E, sys.to_colors(a)));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

namespace {

std::pair<IntVec, IntVec> designated_pair(const SphericalSystem& sys) {
    if (!sys.designated1 || !sys.designated2)
        throw std::invalid_argument("system " + sys.id + " lacks designated colors");
    return {*sys.designated1, *sys.designated2};
}

IntVec triple_key(const SemigroupTriple& t) {
    IntVec k{t.n1, t.n2};
    k.insert(k.end(), t.E.begin(), t.E.end());
    return k;
}

// Irreducible elements of a finite subset of a semigroup that is closed under
// differences inside the subset: x is reducible iff x - g is a member for an
// irreducible g != x of smaller total.
std::vector<IntVec> hilbert_reduce(std::vector<IntVec> members) {
    std::set<IntVec> mem(members.begin(), members.end());
    std::sort(members.begin(), members.end(), [](const IntVec& a, const IntVec& b) {
        const auto ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a < b;
    });
    std::vector<IntVec> irr;
    for (const auto& x : members) {
        bool reducible = false;
        for (const auto& g : irr) {
            if (g == x || !leq_vec(g, x)) continue;
            if (mem.count(sub(x, g))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) irr.push_back(x);
    }
    std::sort(irr.begin(), irr.end());
    return irr;
}

}  // namespace

std::vector<SemigroupTriple> gamma_semigroup_members(const SphericalSystem& sys, int max_degree) {
    auto [d1, d2] = designated_pair(sys);
    check_len(sys, d1);
    std::vector<SemigroupTriple> out;
    for (int n1 = 0; n1 <= max_degree; ++n1)
        for (int n2 = 0; n1 + n2 <= max_degree; ++n2) {
            if (n1 + n2 == 0) continue;
            IntVec E0(sys.n_colors());
            for (std::size_t j = 0; j < E0.size(); ++j) E0[j] = n1 * d1[j] + n2 * d2[j];
            for (const auto& a : sigma_elements_below(sys, E0)) out.push_back({n1, n2, sub(E0, sys.to_colors(a)), a});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SemigroupTriple> gamma_semigroup(const SphericalSystem& sys, int max_degree) {
    const auto members = gamma_semigroup_members(sys, max_degree);
    std::vector<IntVec> keys;
    std::map<IntVec, SemigroupTriple> by_key;
    for (const auto& m : members) {
        keys.push_back(triple_key(m));
        by_key.emplace(keys.back(), m);
    }
    std::vector<SemigroupTriple> out;
    for (const auto& k : hilbert_reduce(keys)) out.push_back(by_key.at(k));
    std::sort(out.begin(), out.end());
    return out;
}

bool in_gamma_sigma(const SphericalSystem& sys, const IntVec& a) {
    auto [d1, d2] = designated_pair(sys);
    if (!nonneg(a)) return false;
    const IntVec g = sys.to_colors(a);
    for (std::size_t j = 0; j < g.size(); ++j)
        if (g[j] > 0 && d1[j] == 0 && d2[j] == 0) return false;
    return true;
}

std::vector<IntVec> gamma_sigma_semigroup(const SphericalSystem& sys, int bound) {
    designated_pair(sys);
    const std::size_t k = sys.n_sigma();
    std::vector<IntVec> members;
    IntVec a(k, 0);
    std::function<void(std::size_t)> gen = [&](std::size_t i) {
        if (i < k) {
            for (int v = 0; v <= bound; ++v) {
                a[i] = v;
                gen(i + 1);
            }
            a[i] = 0;
            return;
        }
        if (!is_zero_vec(a) && in_gamma_sigma(sys, a)) members.push_back(a);
    };
    gen(0);
    return hilbert_reduce(members);
}

std::optional<IntVec> nonneg_combination(const std::vector<IntVec>& gens, const IntVec& target) {
    std::set<std::pair<std::size_t, IntVec>> dead;
    IntVec coeff(gens.size(), 0);
    std::function<bool(std::size_t, const IntVec&)> go = [&](std::size_t i, const IntVec& rest) -> bool {
        if (is_zero_vec(rest)) return true;
        if (i == gens.size()) return false;
        if (dead.count({i, rest})) return false;
        if (!is_zero_vec(gens[i]) && nonneg(gens[i])) {
            IntVec r = rest;
            std::int64_t c = 0;
            while (nonneg(r)) {
                coeff[i] = c;
                if (go(i + 1, r)) return true;
                r = sub(r, gens[i]);
                ++c;
            }
        } else if (go(i + 1, rest)) {
            coeff[i] = 0;
            return true;
        }
        coeff[i] = 0;
        dead.insert({i, rest});
        return false;
    };
    if (!nonneg(target)) return std::nullopt;
    for (const auto& g : gens)
        if (!nonneg(g)) throw std::invalid_argument("nonneg_combination needs nonnegative generators");
    if (go(0, target)) return coeff;
    return std::nullopt;
}

SphericalSystem system_for_case(const std::string& c, const CaseParams& pr) {
    if (c == "1.4") return system_case_1_4(pr.p);
    if (c == "1.5") return system_case_1_5(pr.q);
    if (c == "1.6") return system_case_1_6(pr.p, pr.q, pr.r, pr.s);
    if (c == "1.7") return system_case_1_7(pr.p, pr.q, pr.r, pr.s);
    throw std::invalid_argument("no spherical system encoded for case " + c);
}

namespace {

void fill_sigma(const SphericalSystem& sys, SemigroupTriple& t) {
    auto [d1, d2] = designated_pair(sys);
    IntVec v(sys.n_colors());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = t.n1 * d1[j] + t.n2 * d2[j] - t.E[j];
    auto a = sigma_coordinates(sys, v);
    if (!a || !nonneg(*a)) throw std::logic_error("closed-form triple is not in the semigroup of " + sys.id);
    t.sigma_coords = *a;
}

std::vector<SemigroupTriple> closed_form_16(const Case16Layout& L) {
    std::vector<SemigroupTriple> out;
    for (int i = 1; i <= L.r + 1; ++i) out.push_back({i, 0, L.tilde(1, 2 * i), {}});
    for (int j = 1; j <= L.s + 1; ++j) out.push_back({0, j, L.tilde(2, 2 * j), {}});
    for (int i = 1; i <= L.r + 1; ++i)
        for (int j = 1; j <= L.s + 1; ++j) {
            if (L.boundary && i + j >= L.r + L.s + 2) continue;
            out.push_back({i, j, add(L.tilde(1, 2 * i - 1), L.tilde(2, 2 * j - 1)), {}});
        }
    return out;
}

}  // namespace

std::vector<SemigroupTriple> closed_form_generators(const std::string& c, const CaseParams& pr) {
    const SphericalSystem sys = system_for_case(c, pr);
    std::vector<SemigroupTriple> out;
    if (c == "1.4" || c == "1.5") {
        const int n = c == "1.4" ? pr.p : pr.q;
        auto col = [&](int d) {
            IntVec v(sys.n_colors(), 0);
            v[(n == 4 && d == 5) ? 3 : d - 1] = 1;
            return v;
        };
        out = {{1, 0, col(1), {}}, {0, 1, col(2), {}}, {1, 1, col(3), {}}, {2, 0, col(4), {}}, {0, 2, col(5), {}}};
        if (c == "1.5")
            for (auto& t : out) std::swap(t.n1, t.n2);
    } else if (c == "1.6") {
        out = closed_form_16(case_1_6_layout(pr.p, pr.q, pr.r, pr.s));
    } else {
        out = closed_form_16(case_1_6_layout(pr.q, pr.p, pr.s, pr.r));
        for (auto& t : out) std::swap(t.n1, t.n2);
    }
    for (auto& t : out) fill_sigma(sys, t);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Index of sigma^k_j (j >= 1) or of tau (j = 0) in the 1.6 ordering.
std::size_t sigma_index(const Case16Layout& L, int k, int j) {
    if (j == 0) return 2 * L.r + 2 * L.s;
    return k == 1 ? j - 1 : 2 * L.r + j - 1;
}

IntVec gamma_k_i(const Case16Layout& L, std::size_t n, int k, int i) {
    IntVec g(n, 0);
    for (int u = 1; u <= i - 1; ++u) {
        g[sigma_index(L, k, 2 * u - 1)] += i - u;
        g[sigma_index(L, k, 2 * u)] += i - u;
    }
    return g;
}

IntVec gamma_i_j(const Case16Layout& L, std::size_t n, int i, int j) {
    IntVec g = add(gamma_k_i(L, n, 1, i), gamma_k_i(L, n, 2, j));
    for (int u = i; u <= L.r; ++u) g[sigma_index(L, 1, 2 * u)] += 1;
    for (int v = j; v <= L.s; ++v) g[sigma_index(L, 2, 2 * v)] += 1;
    if (!L.boundary) g[sigma_index(L, 1, 0)] += 1;
    return g;
}

// Per-side coefficients of gamma on D^k_h before identification.
std::vector<std::int64_t> side_coeffs(const Case16Layout& L, int k, const IntVec& a) {
    const int R = 2 * L.rk(k);
    std::vector<std::int64_t> v(R + 4, 0);
    auto acc = [&](int j, std::int64_t c) {
        if (c == 0) return;
        const auto row = L.virtual_row(k, j);
        for (std::size_t h = 0; h < row.size(); ++h) v[h] += c * row[h];
    };
    for (int j = 1; j <= R; ++j) acc(j, a[sigma_index(L, k, j)]);
    if (!L.boundary) acc(0, a[sigma_index(L, k, 0)]);
    return v;
}

// -c_{i,j} from the interval construction on partial sums of the two totals.
std::vector<IntVec> interval_matrix(const IntVec& rows, const IntVec& cols) {
    IntVec n1{0}, n2{0};
    for (auto x : rows) n1.push_back(n1.back() + x);
    for (auto x : cols) n2.push_back(n2.back() + x);
    std::vector<IntVec> m(rows.size(), IntVec(cols.size(), 0));
    for (std::size_t i = 1; i <= rows.size(); ++i)
        for (std::size_t j = 1; j <= cols.size(); ++j)
            m[i - 1][j - 1] = std::max<std::int64_t>(0, std::min(n1[i], n2[j]) - std::max(n1[i - 1], n2[j - 1]));
    return m;
}

Witness witness_16(const Case16Layout& L, const SphericalSystem& sys, const IntVec& a) {
    const std::size_t n = sys.n_sigma();
    Witness w;
    auto term = [&](std::string label, std::int64_t c, IntVec g) {
        if (c < 0) throw std::logic_error("negative coefficient for " + label + " in witness construction");
        if (c != 0) w.terms.push_back({std::move(label), c, std::move(g)});
    };
    auto lab_k = [](int k, int i) { return "gamma^" + std::to_string(k) + "_" + std::to_string(i); };
    auto lab_ij = [](int i, int j) { return "gamma_{" + std::to_string(i) + "," + std::to_string(j) + "}"; };
    const int r1 = L.r, r2 = L.s;
    const auto v1 = side_coeffs(L, 1, a), v2 = side_coeffs(L, 2, a);
    if (!L.boundary) {
        // tilde d^k_h: h <= 2r_k+1 read directly, h = 2r_k+2 from D^k_{2r_k+3}
        auto td = [&](int k, int h) {
            const auto& v = k == 1 ? v1 : v2;
            const int R = 2 * L.rk(k);
            return h == R + 2 ? v[R + 3] : v[h];
        };
        for (int k = 1; k <= 2; ++k)
            for (int i = 2; i <= L.rk(k) + 1; ++i) term(lab_k(k, i), -td(k, 2 * i), gamma_k_i(L, n, k, i));
        IntVec rows, cols;
        for (int i = 1; i <= r1 + 1; ++i) rows.push_back(-td(1, 2 * i - 1));
        for (int j = 1; j <= r2 + 1; ++j) cols.push_back(-td(2, 2 * j - 1));
        const auto m = interval_matrix(rows, cols);
        for (int i = 1; i <= r1 + 1; ++i)
            for (int j = 1; j <= r2 + 1; ++j) term(lab_ij(i, j), m[i - 1][j - 1], gamma_i_j(L, n, i, j));
    } else {
        // d^k_h for h <= 2r_k+1, with the other side's D_{2r'+3} identified into D^k_{2r_k+1}
        auto d = [&](int k, int h) {
            const auto& v = k == 1 ? v1 : v2;
            const auto& o = k == 1 ? v2 : v1;
            const int R = 2 * L.rk(k), Ro = 2 * L.rk(3 - k);
            return h == R + 1 ? v[h] + o[Ro + 3] : v[h];
        };
        auto A = [&](int k, int h) { return h >= 1 ? a[sigma_index(L, k, h)] : 0; };
        const std::int64_t x1 = A(1, 2 * r1), x2 = A(2, 2 * r2);
        std::int64_t c1, c2;
        // Row/column totals must agree, which forces c^1 - c^2 = a^2_{2r2} - a^1_{2r1}.
        if (x1 <= x2) {
            const std::int64_t b = std::min(A(1, 2 * r1 - 1), A(2, 2 * r2 - 1) - x2 + x1);
            c1 = -b;
            c2 = x1 - x2 - b;
            w.b = b;
        } else {
            const std::int64_t b = std::min(A(2, 2 * r2 - 1), A(1, 2 * r1 - 1) - x1 + x2);
            c2 = -b;
            c1 = x2 - x1 - b;
            w.b = b;
        }
        w.c1 = c1;
        w.c2 = c2;
        for (int i = 2; i <= r1; ++i) term(lab_k(1, i), -d(1, 2 * i), gamma_k_i(L, n, 1, i));
        if (r1 >= 1) term(lab_k(1, r1 + 1), -c1, gamma_k_i(L, n, 1, r1 + 1));
        for (int j = 2; j <= r2; ++j) term(lab_k(2, j), -d(2, 2 * j), gamma_k_i(L, n, 2, j));
        if (r2 >= 1) term(lab_k(2, r2 + 1), -c2, gamma_k_i(L, n, 2, r2 + 1));
        IntVec rows, cols;
        for (int i = 1; i <= r1; ++i) rows.push_back(-d(1, 2 * i - 1));
        rows.push_back(-(d(1, 2 * r1 + 1) - c2));
        for (int j = 1; j <= r2; ++j) cols.push_back(-d(2, 2 * j - 1));
        cols.push_back(-(d(2, 2 * r2 + 1) - c1));
        const auto m = interval_matrix(rows, cols);
        if (m[r1][r2] != 0) throw std::logic_error("witness construction puts weight on the excluded gamma_{r1+1,r2+1}");
        for (int i = 1; i <= r1 + 1; ++i)
            for (int j = 1; j <= r2 + 1; ++j)
                if (i + j < r1 + r2 + 2) term(lab_ij(i, j), m[i - 1][j - 1], gamma_i_j(L, n, i, j));
    }
    return w;
}

}  // namespace

Witness witness_decomposition(const std::string& c, const CaseParams& pr, const IntVec& gamma) {
    const SphericalSystem sys = system_for_case(c, pr);
    if (gamma.size() != sys.n_sigma()) throw std::invalid_argument("gamma has wrong number of sigma-coordinates");
    if (!in_gamma_sigma(sys, gamma)) throw std::invalid_argument("gamma is not in the semigroup of " + sys.id);
    Witness w;
    if (c == "1.4" || c == "1.5") {
        const std::int64_t a1 = gamma[0], a2 = gamma[1], a3 = gamma[2];
        if (a1 - a2 - a3 != 0) w.terms.push_back({"sigma_1", a1 - a2 - a3, {1, 0, 0}});
        if (a2 != 0) w.terms.push_back({"sigma_1+sigma_2", a2, {1, 1, 0}});
        if (a3 != 0) w.terms.push_back({"sigma_1+sigma_3", a3, {1, 0, 1}});
    } else if (c == "1.6") {
        w = witness_16(case_1_6_layout(pr.p, pr.q, pr.r, pr.s), sys, gamma);
    } else {
        w = witness_16(case_1_6_layout(pr.q, pr.p, pr.s, pr.r), sys, gamma);
    }
    w.recombined.assign(gamma.size(), 0);
    for (const auto& t : w.terms)
        for (std::size_t i = 0; i < gamma.size(); ++i) w.recombined[i] += t.coeff * t.generator[i];
    if (w.recombined != gamma) throw std::logic_error("witness construction does not recombine to gamma");
    return w;
}

NormalityResult normality_check(const SphericalSystem& sys) {
    NormalityResult res{true, {}};
    int which = 0;
    for (const auto* d : {&sys.designated1, &sys.designated2}) {
        ++which;
        NormalityWitness w{which, d->has_value() && !is_zero_vec(**d), true, std::nullopt};
        if (w.present) {
            w.dominated = dominated_element(sys, **d);
            w.minuscule = !w.dominated.has_value();
            res.normal = res.normal && w.minuscule;
        }
        res.witnesses.push_back(w);
    }
    return res;
}

std::vector<WeightedTriple> weight_semigroup(const SphericalSystem& sys, const IntVec& lambda1, const IntVec& lambda2,
                                             const std::vector<IntVec>& color_weights, int max_degree) {
    if (color_weights.size() != sys.n_colors())
        throw std::invalid_argument("weight_semigroup needs a weight for every color");
    const std::size_t wl = lambda1.size();
    if (lambda2.size() != wl) throw std::invalid_argument("lambda1 and lambda2 differ in length");
    for (const auto& w : color_weights)
        if (w.size() != wl) throw std::invalid_argument("color weight of wrong length");
    auto [d1, d2] = designated_pair(sys);
    std::vector<WeightedTriple> out;
    for (const auto& t : gamma_semigroup(sys, max_degree)) {
        IntVec wt(wl);
        for (std::size_t i = 0; i < wl; ++i) wt[i] = t.n1 * lambda1[i] + t.n2 * lambda2[i];
        for (std::size_t c = 0; c < sys.n_colors(); ++c) {
            const std::int64_t coef = t.n1 * d1[c] + t.n2 * d2[c] - t.E[c];
            for (std::size_t i = 0; i < wl; ++i) wt[i] -= coef * color_weights[c][i];
        }
        out.push_back({t, wt});
    }
    return out;
}

}  // namespace hermorb
