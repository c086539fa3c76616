#include "hermorb/hermitian.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace hermorb {

const char* family_name(Family f) {
    switch (f) {
        case Family::SLpq: return "SLpq";
        case Family::SO_odd: return "SO_odd";
        case Family::Sp: return "Sp";
        case Family::SO_even_vector: return "SO_even_vector";
        case Family::SO_even_gl: return "SO_even_gl";
    }
    return "?";
}

namespace {

Family family_of(RootType t, int n, int p) {
    switch (t) {
        case RootType::A: return Family::SLpq;
        case RootType::B: return Family::SO_odd;
        case RootType::C: return Family::Sp;
        case RootType::D: return p == 1 ? Family::SO_even_vector : Family::SO_even_gl;
    }
    (void)n;
    return Family::SLpq;
}

bool within_family_bounds(Family f, int n) {
    switch (f) {
        case Family::SLpq: return n >= 1;
        case Family::SO_odd: return n > 2;
        case Family::Sp: return n >= 2;
        case Family::SO_even_vector: return n > 4;
        case Family::SO_even_gl: return n >= 4;
    }
    return false;
}

// Simple-root indices (0-based) of each connected component of S minus alpha_p,
// listed in Bourbaki order of the component.
std::vector<std::pair<Component, std::vector<int>>> levi_components(RootType t, int n, int p) {
    std::vector<std::pair<Component, std::vector<int>>> out;
    auto chain = [](int lo, int hi) {
        std::vector<int> v;
        for (int i = lo; i <= hi; ++i) v.push_back(i);
        return v;
    };
    switch (t) {
        case RootType::A:
            if (p > 1) out.push_back({{RootType::A, p - 1}, chain(0, p - 2)});
            if (p < n) out.push_back({{RootType::A, n - p}, chain(p, n - 1)});
            break;
        case RootType::B:
            if (n - 1 >= 2) out.push_back({{RootType::B, n - 1}, chain(1, n - 1)});
            else out.push_back({{RootType::A, 1}, chain(1, n - 1)});
            break;
        case RootType::C: out.push_back({{RootType::A, n - 1}, chain(0, n - 2)}); break;
        case RootType::D:
            if (p == 1) {
                out.push_back({{RootType::D, n - 1}, chain(1, n - 1)});
            } else if (p == n) {
                out.push_back({{RootType::A, n - 1}, chain(0, n - 2)});
            } else {
                auto idx = chain(0, n - 3);
                idx.push_back(n - 1);
                out.push_back({{RootType::A, n - 1}, idx});
            }
            break;
    }
    return out;
}

}  // namespace

int SymmetricPairSpec::block_p() const {
    return g_type == RootType::A ? p_index : rank;
}

int SymmetricPairSpec::block_q() const {
    return g_type == RootType::A ? rank + 1 - p_index : rank;
}

std::string SymmetricPairSpec::key() const {
    std::string base = std::string(1, type_letter(g_type)) + ":" + std::to_string(rank);
    switch (family) {
        case Family::SLpq: return base + ":p=" + std::to_string(p_index);
        case Family::SO_odd:
        case Family::Sp: return base;
        case Family::SO_even_vector: return base + ":vec";
        case Family::SO_even_gl:
            return p_index == rank ? base + ":gl" : base + ":p=" + std::to_string(p_index);
    }
    return base;
}

std::string SymmetricPairSpec::group_name() const {
    const int n = rank;
    switch (family) {
        case Family::SLpq:
            return "SL(" + std::to_string(n + 1) + ")/S(GL(" + std::to_string(block_p()) + ")xGL(" +
                   std::to_string(block_q()) + "))";
        case Family::SO_odd:
            return "SO(" + std::to_string(2 * n + 1) + ")/SO(" + std::to_string(2 * n - 1) + ")xSO(2)";
        case Family::Sp: return "Sp(" + std::to_string(2 * n) + ")/GL(" + std::to_string(n) + ")";
        case Family::SO_even_vector:
            return "SO(" + std::to_string(2 * n) + ")/SO(" + std::to_string(2 * n - 2) + ")xSO(2)";
        case Family::SO_even_gl: return "SO(" + std::to_string(2 * n) + ")/GL(" + std::to_string(n) + ")";
    }
    return "";
}

LatticeVector dual_weight(const std::vector<Component>& comps, const LatticeVector& w) {
    IntVec out(w.coords());
    std::size_t off = 0;
    for (const auto& c : comps) {
        const std::size_t k = c.rank;
        if (c.type == RootType::A) {
            for (std::size_t i = 0; i < k; ++i) out[off + i] = w[off + k - 1 - i];
        } else if (c.type == RootType::D && k % 2 == 1) {
            std::swap(out[off + k - 2], out[off + k - 1]);
        }
        off += k;
    }
    return {w.basis(), out};
}

SymmetricPairSpec make_pair(RootType t, int n, int p) {
    check_rank(t, n);
    auto ab = abelian_radical_roots(t, n);
    if (std::find(ab.begin(), ab.end(), p) == ab.end())
        throw std::invalid_argument("alpha_" + std::to_string(p) + " does not give an abelian unipotent radical");
    const Family fam = family_of(t, n, p);
    if (!within_family_bounds(fam, n))
        throw std::invalid_argument(std::string("rank ") + std::to_string(n) + " below the bound of family " +
                                    family_name(fam));
    auto comps = levi_components(t, n, p);
    const IntMat a = cartan_matrix(t, n);
    const auto theta = highest_root(t, n);
    std::vector<Component> levi;
    IntVec w;
    for (const auto& [comp, idx] : comps) {
        levi.push_back(comp);
        for (int j : idx) {
            std::int64_t s = 0;
            for (int i = 0; i < n; ++i) s += theta[i] * a[i][j];
            w.push_back(s);
        }
    }
    SymmetricPairSpec spec{t, n, p, fam, levi, 0, LatticeVector(Basis::FundWeights, w)};
    spec.m = center_order(spec);
    return spec;
}

std::vector<SymmetricPairSpec> enumerate_pairs(RootType t, int n) {
    check_rank(t, n);
    std::vector<SymmetricPairSpec> out;
    for (int p : abelian_radical_roots(t, n)) {
        if (within_family_bounds(family_of(t, n, p), n)) out.push_back(make_pair(t, n, p));
    }
    if (out.empty())
        throw std::invalid_argument(std::string("rank ") + std::to_string(n) + " below the family bound for type " +
                                    type_letter(t));
    return out;
}

SymmetricPairSpec pair_from_key(const std::string& key) {
    static const std::regex re(R"(^([ABCD]):(\d+)(?::(p=(\d+)|vec|gl))?$)");
    std::smatch m;
    if (!std::regex_match(key, m, re)) throw std::invalid_argument("malformed pair key: " + key);
    const RootType t = parse_root_type(m[1]);
    const int n = std::stoi(m[2]);
    int p = 0;
    const std::string tag = m[3];
    if (tag.empty()) {
        if (t == RootType::B) p = 1;
        else if (t == RootType::C) p = n;
        else throw std::invalid_argument("pair key needs a marked root: " + key);
    } else if (tag == "vec") {
        if (t != RootType::D) throw std::invalid_argument("'vec' only applies to type D: " + key);
        p = 1;
    } else if (tag == "gl") {
        if (t != RootType::D) throw std::invalid_argument("'gl' only applies to type D: " + key);
        p = n;
    } else {
        p = std::stoi(m[4]);
    }
    return make_pair(t, n, p);
}

int center_order(const SymmetricPairSpec& s) {
    const int n = s.rank;
    switch (s.g_type) {
        case RootType::A: return (n + 1) / std::gcd(s.p_index, n + 1);
        case RootType::B:
        case RootType::C: return 2;
        case RootType::D:
            if (s.p_index == 1) return 2;
            return n % 2 == 0 ? 2 : 4;
    }
    return 0;
}

int center_order_from_lattice(RootType t, int n, int p) {
    std::int64_t m = 1;
    for (const auto& c : fundamental_coweight(t, n, p)) m = std::lcm(m, c.den());
    return static_cast<int>(m);
}

std::pair<KWeight, KWeight> p_module_weights(const SymmetricPairSpec& s) {
    KWeight p1{s.p1_highest_weight, s.m};
    KWeight p2{dual_weight(s.k_levi, s.p1_highest_weight), -s.m};
    return {p1, p2};
}

}  // namespace hermorb
