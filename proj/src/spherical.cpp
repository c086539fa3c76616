#include "hermorb/spherical.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace hermorb {

namespace {

std::vector<Component> nonzero_components(std::initializer_list<Component> comps) {
    std::vector<Component> out;
    for (const auto& c : comps)
        if (c.rank > 0) out.push_back(c);
    return out;
}

LatticeVector simple_root_sum(int total, std::initializer_list<int> idx) {
    IntVec v(total, 0);
    for (int i : idx) v.at(i) += 1;
    return {Basis::SimpleRoots, v};
}

LatticeVector simple_root_range(int total, int from, int to) {
    IntVec v(total, 0);
    for (int i = from; i <= to; ++i) v.at(i) += 1;
    return {Basis::SimpleRoots, v};
}

std::string param(const char* name, int v) { return std::string(name) + "=" + std::to_string(v); }

}  // namespace

void SphericalSystem::validate() const {
    const int rk = ambient.total_rank();
    if (sigma_in_colors.size() != sigma.size() || sigma_names.size() != sigma.size())
        throw std::logic_error(id + ": sigma data has inconsistent lengths");
    for (const auto& s : sigma) {
        if (s.basis() != Basis::SimpleRoots || static_cast<int>(s.size()) != rk)
            throw std::logic_error(id + ": spherical root not in simple-root coordinates of the ambient");
        bool nonzero = false;
        for (auto x : s.coords()) {
            if (x < 0) throw std::logic_error(id + ": spherical root with negative coordinate");
            nonzero = nonzero || x != 0;
        }
        if (!nonzero) throw std::logic_error(id + ": zero spherical root");
    }
    for (const auto& row : sigma_in_colors)
        if (row.size() != colors.size()) throw std::logic_error(id + ": sigma_in_colors row of wrong length");
    if (!sigma.empty() && rank(QMatrix::from_int(sigma_in_colors)) != sigma.size())
        throw std::logic_error(id + ": sigma_in_colors is not of full row rank");
    for (const auto* d : {&designated1, &designated2}) {
        if (!d->has_value()) continue;
        if ((*d)->size() != colors.size()) throw std::logic_error(id + ": designated color of wrong length");
        for (auto x : **d)
            if (x < 0) throw std::logic_error(id + ": designated color not in N Delta");
    }
    if (!color_weights.empty() && color_weights.size() != colors.size())
        throw std::logic_error(id + ": color weights incomplete");
    if (s_p)
        for (int i : *s_p)
            if (i < 1 || i > rk) throw std::logic_error(id + ": S^p index out of range");
}

IntVec SphericalSystem::to_colors(const IntVec& a) const {
    if (a.size() != sigma.size()) throw std::invalid_argument("sigma coordinate vector of wrong length");
    IntVec out(colors.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < colors.size(); ++j) out[j] += a[i] * sigma_in_colors[i][j];
    return out;
}

SphericalSystem system_ax111() {
    SphericalSystem s{"ax111",
                      RootSystem({{RootType::A, 1}, {RootType::A, 1}, {RootType::A, 1}}),
                      std::vector<int>{},
                      {simple_root_sum(3, {0}), simple_root_sum(3, {1}), simple_root_sum(3, {2})},
                      {"alpha", "alpha'", "alpha''"},
                      {"D1", "D2", "D3"},
                      {{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}},
                      std::nullopt,
                      std::nullopt,
                      {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
    s.validate();
    return s;
}

SphericalSystem system_case_1_4(int p) {
    if (p < 4) throw std::invalid_argument("case 1.4 needs p >= 4");
    const int total = p;  // A_{p-1} x A_1
    SphericalSystem s;
    s.id = "1.4(" + param("p", p) + ")";
    s.ambient = RootSystem(nonzero_components({{RootType::A, p - 1}, {RootType::A, 1}}));
    s.sigma = {simple_root_sum(total, {p - 1}), simple_root_sum(total, {0}), simple_root_sum(total, {p - 2})};
    s.sigma_names = {"alpha'", "alpha_1", "alpha_" + std::to_string(p - 1)};
    IntMat rows = {{1, 1, -1, 0, 0}, {-1, 1, 1, 0, -1}, {1, -1, 1, -1, 0}};
    if (p == 4) {
        s.colors = {"D1", "D2", "D3", "D4=D5"};
        for (auto& r : rows) {
            r[3] += r[4];
            r.pop_back();
        }
    } else {
        s.colors = {"D1", "D2", "D3", "D4", "D5"};
    }
    s.sigma_in_colors = rows;
    IntVec d1(s.colors.size(), 0), d2(s.colors.size(), 0);
    d1[0] = 1;
    d2[1] = 1;
    s.designated1 = d1;
    s.designated2 = d2;
    s.validate();
    return s;
}

namespace {

// Exchange the two factors A_{a} x A_{b} -> A_{b} x A_{a} in simple-root coordinates.
LatticeVector swap_factors(const LatticeVector& v, int a) {
    IntVec c(v.coords().begin() + a, v.coords().end());
    c.insert(c.end(), v.coords().begin(), v.coords().begin() + a);
    return {v.basis(), c};
}

SphericalSystem mirror(SphericalSystem s, int first_rank, const std::string& id) {
    s.id = id;
    const auto comps = s.ambient.components();
    std::vector<Component> swapped(comps.rbegin(), comps.rend());
    s.ambient = RootSystem(swapped);
    for (auto& v : s.sigma) v = swap_factors(v, first_rank);
    std::swap(s.designated1, s.designated2);
    s.validate();
    return s;
}

}  // namespace

SphericalSystem system_case_1_5(int q) {
    if (q < 4) throw std::invalid_argument("case 1.5 needs q >= 4");
    return mirror(system_case_1_4(q), q - 1, "1.5(" + param("q", q) + ")");
}

IntVec Case16Layout::tilde(int k, int h) const {
    const int R = 2 * rk(k);
    IntVec v(n_colors, 0);
    auto add = [&](int hh) {
        const int c = column[k - 1].at(hh);
        if (c >= 0) v[c] += 1;
    };
    add(h);
    if (h == R + 1 || h == R + 2) add(h + 1);
    return v;
}

std::vector<std::int64_t> Case16Layout::virtual_row(int k, int j) const {
    const int R = 2 * rk(k);
    std::vector<std::int64_t> v(R + 4, 0);
    if (j == 0) {
        v[R + 1] = -1;
        v[R + 3] = 1;
    } else {
        if (j - 1 >= 1) v[j - 1] -= 1;
        v[j] += 1;
        v[j + 1] += 1;
        v[j < R ? j + 2 : R + 3] -= 1;
    }
    // D^k_{2r_k+2} from the lattice spanned by tilde D^k_{2r_k+1}, tilde D^k_{2r_k+2}
    v[R + 2] = v[R + 1] + v[R + 3];
    return v;
}

IntVec Case16Layout::map_row(int k, const std::vector<std::int64_t>& virt) const {
    IntVec row(n_colors, 0);
    for (std::size_t h = 1; h < virt.size(); ++h) {
        const int c = column[k - 1][h];
        if (c >= 0) row[c] += virt[h];
    }
    return row;
}

Case16Layout case_1_6_layout(int p, int q, int r, int s) {
    if (r < 0 || s < 0 || r + s + 2 > p || r + s + 1 > q)
        throw std::invalid_argument("case 1.6 needs r,s >= 0, r+s+2 <= p, r+s+1 <= q");
    Case16Layout L{p, q, r, s, r + s == q - 1, false, {}, 0};
    const int R[2] = {2 * r, 2 * s};
    L.column.assign(2, {});
    for (int k = 0; k < 2; ++k) L.column[k].assign(R[k] + 4, -1);
    int next = 0;
    for (int k = 0; k < 2; ++k) {
        for (int h = 1; h <= R[k] + 3; ++h) {
            if (h == 1 && R[k] == 0) continue;  // no D^k_1 when r_k = 0
            if (L.boundary && h == R[k] + 3) continue;
            if (k == 1 && h == R[1] + 2 && p == r + s + 2) {
                L.column[1][h] = L.column[0][R[0] + 2];
                continue;
            }
            L.column[k][h] = next++;
        }
    }
    if (L.boundary) {
        L.column[0][R[0] + 3] = L.column[1][R[1] + 1];
        L.column[1][R[1] + 3] = L.column[0][R[0] + 1];
    }
    L.n_colors = next;
    return L;
}

SphericalSystem system_case_1_6(int p, int q, int r, int s) {
    const Case16Layout L = case_1_6_layout(p, q, r, s);
    SphericalSystem sys;
    sys.id = "1.6(" + param("p", p) + "," + param("q", q) + "," + param("r", r) + "," + param("s", s) + ")";
    sys.ambient = RootSystem(nonzero_components({{RootType::A, p - 1}, {RootType::A, q - 1}}));
    const int total = p - 1 + q - 1;
    auto a = [&](int i) { return i - 1; };
    auto ap = [&](int i) { return p - 1 + i - 1; };

    sys.colors.assign(L.n_colors, "");
    for (int k = 1; k <= 2; ++k)
        for (int h = 1; h < static_cast<int>(L.column[k - 1].size()); ++h) {
            const int c = L.column[k - 1][h];
            if (c < 0) continue;
            const std::string nm = "D^" + std::to_string(k) + "_" + std::to_string(h);
            sys.colors[c] = sys.colors[c].empty() ? nm : sys.colors[c] + "=" + nm;
        }

    for (int k = 1; k <= 2; ++k) {
        const int R = 2 * L.rk(k);
        for (int j = 1; j <= R; ++j) {
            sys.sigma_in_colors.push_back(L.map_row(k, L.virtual_row(k, j)));
            const int i = (j + 1) / 2;
            if (k == 1) {
                sys.sigma.push_back(j % 2 ? simple_root_sum(total, {a(p - i)}) : simple_root_sum(total, {ap(i)}));
                sys.sigma_names.push_back(j % 2 ? "alpha_" + std::to_string(p - i) : "alpha'_" + std::to_string(i));
            } else {
                sys.sigma.push_back(j % 2 ? simple_root_sum(total, {a(i)}) : simple_root_sum(total, {ap(q - i)}));
                sys.sigma_names.push_back(j % 2 ? "alpha_" + std::to_string(i) : "alpha'_" + std::to_string(q - i));
            }
        }
    }
    if (!L.boundary) {
        IntVec row = L.map_row(1, L.virtual_row(1, 0));
        const IntVec row2 = L.map_row(2, L.virtual_row(2, 0));
        for (std::size_t c = 0; c < row.size(); ++c) row[c] += row2[c];
        sys.sigma_in_colors.push_back(row);
        sys.sigma.push_back(simple_root_range(total, ap(r + 1), ap(q - s - 1)));
        sys.sigma_names.push_back("tau");
    }
    sys.designated1 = L.tilde(1, 2);
    sys.designated2 = L.tilde(2, 2);
    sys.validate();
    return sys;
}

SphericalSystem system_case_1_7(int p, int q, int r, int s) {
    if (r < 0 || s < 0 || r + s + 1 > p || r + s + 2 > q)
        throw std::invalid_argument("case 1.7 needs r,s >= 0, r+s+1 <= p, r+s+2 <= q");
    return mirror(system_case_1_6(q, p, s, r), q - 1,
                  "1.7(" + param("p", p) + "," + param("q", q) + "," + param("r", r) + "," + param("s", s) + ")");
}

SphericalSystem system_ay_a_ay(int r, int t, int s) {
    if (r < 1 || t < 1 || s < 1) throw std::invalid_argument("a^y(r,r)+a(t)+a^y(s,s) needs r, t, s >= 1");
    SphericalSystem sys;
    sys.id = "ay_a_ay(" + param("r", r) + "," + param("t", t) + "," + param("s", s) + ")";
    sys.ambient = RootSystem({{RootType::A, r}, {RootType::A, r + s + t}, {RootType::A, s}});
    const int total = 2 * r + 2 * s + t;
    const int nd = 2 * r + 2 * s + 4;
    auto a = [&](int i) { return i - 1; };
    auto ap = [&](int i) { return r + i - 1; };
    auto app = [&](int i) { return 2 * r + s + t + i - 1; };
    for (int i = 1; i <= nd; ++i) sys.colors.push_back("D" + std::to_string(i));
    auto row = [&](std::initializer_list<std::pair<int, int>> entries) {
        IntVec v(nd, 0);
        for (auto [d, c] : entries) v.at(d - 1) += c;
        sys.sigma_in_colors.push_back(v);
    };
    for (int i = 1; i <= r; ++i) {
        sys.sigma.push_back(simple_root_sum(total, {a(i)}));
        sys.sigma_names.push_back("alpha_" + std::to_string(i));
        if (i == 1) row({{1, 1}, {2, 1}, {3, -1}});
        else row({{2 * i - 2, -1}, {2 * i - 1, 1}, {2 * i, 1}, {2 * i + 1, -1}});
    }
    for (int i = 1; i <= r; ++i) {
        sys.sigma.push_back(simple_root_sum(total, {ap(i)}));
        sys.sigma_names.push_back("alpha'_" + std::to_string(i));
        row({{2 * i - 1, -1}, {2 * i, 1}, {2 * i + 1, 1}, {2 * i + 2, -1}});
    }
    sys.sigma.push_back(simple_root_range(total, ap(r + 1), ap(r + t)));
    {
        std::string a = "alpha'_" + std::to_string(r + 1), b = "alpha'_" + std::to_string(r + t);
        sys.sigma_names.push_back(t == 1 ? a : t == 2 ? a + "+" + b : a + "+...+" + b);
    }
    row({{2 * r + 1, -1}, {2 * r + 2, 1}, {2 * r + 3, 1}, {2 * r + 4, -1}});
    for (int i = 1; i <= s; ++i) {
        sys.sigma.push_back(simple_root_sum(total, {ap(r + t + i)}));
        sys.sigma_names.push_back("alpha'_" + std::to_string(r + t + i));
        row({{2 * r + 2 * i + 1, -1}, {2 * r + 2 * i + 2, 1}, {2 * r + 2 * i + 3, 1}, {2 * r + 2 * i + 4, -1}});
    }
    for (int i = 1; i <= s; ++i) {
        sys.sigma.push_back(simple_root_sum(total, {app(i)}));
        sys.sigma_names.push_back("alpha''_" + std::to_string(i));
        if (i < s) row({{2 * r + 2 * i + 2, -1}, {2 * r + 2 * i + 3, 1}, {2 * r + 2 * i + 4, 1}, {2 * r + 2 * i + 5, -1}});
        else row({{2 * r + 2 * s + 2, -1}, {2 * r + 2 * s + 3, 1}, {2 * r + 2 * s + 4, 1}});
    }
    std::vector<int> sp;
    for (int i = r + 2; i <= r + t - 1; ++i) sp.push_back(ap(i) + 1);
    sys.s_p = sp;
    sys.validate();
    return sys;
}

std::vector<int> ay_a_ay_distinguished(int r, int t, int s) {
    (void)t;
    std::vector<int> out;
    for (int i = 1; i <= r; ++i) out.push_back(2 * i - 1);
    for (int i = 1; i <= s; ++i) out.push_back(2 * r + 2 * i + 2);
    return out;
}

SphericalSystem quotient_by_colors(const SphericalSystem& sys, const std::vector<int>& colors) {
    if (colors.empty()) return sys;
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("repeated color in quotient set");
    int r = 0, t = 0, s = 0;
    if (std::sscanf(sys.id.c_str(), "ay_a_ay(r=%d,t=%d,s=%d)", &r, &t, &s) != 3 ||
        sorted != ay_a_ay_distinguished(r, t, s))
        throw std::invalid_argument("color set is not a catalogued distinguished set of " + sys.id);
    // Sigma indices: alpha_i -> i-1, alpha'_i (i<=r) -> r+i-1, tau -> 2r,
    // alpha'_{r+t+i} -> 2r+i, alpha''_i -> 2r+s+i.
    std::vector<std::vector<int>> combos;
    for (int i = 1; i <= r - 1; ++i) combos.push_back({i, r + i - 1});
    combos.push_back({2 * r});
    for (int i = 1; i <= s - 1; ++i) combos.push_back({2 * r + i + 1, 2 * r + s + i});

    SphericalSystem q;
    q.id = sys.id + "/Delta'";
    q.ambient = sys.ambient;
    std::vector<int> keep;
    for (int c = 0; c < static_cast<int>(sys.n_colors()); ++c)
        if (!std::binary_search(sorted.begin(), sorted.end(), c)) {
            keep.push_back(c);
            q.colors.push_back(sys.colors[c]);
        }
    for (const auto& combo : combos) {
        IntVec full(sys.n_colors(), 0);
        LatticeVector root = LatticeVector::zero(Basis::SimpleRoots, sys.ambient.total_rank());
        std::string name;
        for (int idx : combo) {
            for (std::size_t j = 0; j < full.size(); ++j) full[j] += sys.sigma_in_colors[idx][j];
            root = root + sys.sigma[idx];
            name += (name.empty() ? "" : "+") + sys.sigma_names[idx];
        }
        for (int c : sorted)
            if (full[c] != 0) throw std::invalid_argument("quotient root has nonzero coordinate on a removed color");
        IntVec row;
        for (int c : keep) row.push_back(full[c]);
        q.sigma.push_back(root);
        q.sigma_names.push_back(name);
        q.sigma_in_colors.push_back(row);
    }
    q.validate();
    return q;
}

}  // namespace hermorb
