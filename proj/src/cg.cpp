#include "hermorb/cg.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hermorb {

bool in_tensor_semigroup(int m, int n, int k) {
    if (m < 0 || n < 0 || k < 0) return false;
    if ((m + n + k) % 2 != 0) return false;
    return std::abs(m - n) <= k && k <= m + n;
}

bool in_tensor_semigroup(const TTriple& t) { return in_tensor_semigroup(t[0], t[1], t[2]); }

std::string ttriple_str(const TTriple& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

QMatrix sl2_raising(int m) {
    QMatrix e(m + 1, m + 1);
    for (int i = 1; i <= m; ++i) e(i - 1, i) = i;
    return e;
}

QMatrix sl2_lowering(int m) {
    QMatrix f(m + 1, m + 1);
    for (int i = 0; i < m; ++i) f(i + 1, i) = m - i;
    return f;
}

QMatrix sl2_cartan(int m) {
    QMatrix h(m + 1, m + 1);
    for (int i = 0; i <= m; ++i) h(i, i) = m - 2 * i;
    return h;
}

namespace {

QMatrix kron(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

struct Module {
    QMatrix e, f;
    std::vector<int> weight;
};

Module simple_module(int m) {
    Module M{sl2_raising(m), sl2_lowering(m), {}};
    for (int i = 0; i <= m; ++i) M.weight.push_back(m - 2 * i);
    return M;
}

Module tensor_module(int m, int n) {
    Module M{tensor_op(sl2_raising(m), sl2_raising(n)), tensor_op(sl2_lowering(m), sl2_lowering(n)), {}};
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) M.weight.push_back(m - 2 * i + n - 2 * j);
    return M;
}

// Basis of weight-preserving maps X : src -> dst with X e = e X and X f = f X.
std::vector<QMatrix> equivariant_maps(const Module& src, const Module& dst) {
    const std::size_t S = src.weight.size(), D = dst.weight.size();
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t a = 0; a < D; ++a)
        for (std::size_t b = 0; b < S; ++b)
            if (dst.weight[a] == src.weight[b]) {
                index[{a, b}] = vars.size();
                vars.emplace_back(a, b);
            }
    std::vector<QVec> eqs;
    for (const QMatrix* pair : {&src.e, &src.f}) {
        const QMatrix& xs = *pair;
        const QMatrix& xd = (pair == &src.e) ? dst.e : dst.f;
        // (X xs - xd X)[a][b] = 0
        for (std::size_t a = 0; a < D; ++a)
            for (std::size_t b = 0; b < S; ++b) {
                QVec row(vars.size());
                bool any = false;
                for (std::size_t c = 0; c < S; ++c) {
                    if (xs(c, b).is_zero()) continue;
                    auto it = index.find({a, c});
                    if (it == index.end()) continue;
                    row[it->second] += xs(c, b);
                    any = true;
                }
                for (std::size_t c = 0; c < D; ++c) {
                    if (xd(a, c).is_zero()) continue;
                    auto it = index.find({c, b});
                    if (it == index.end()) continue;
                    row[it->second] -= xd(a, c);
                    any = true;
                }
                if (any) eqs.push_back(std::move(row));
            }
    }
    QMatrix sys(eqs.size(), vars.size());
    for (std::size_t i = 0; i < eqs.size(); ++i)
        for (std::size_t j = 0; j < vars.size(); ++j) sys(i, j) = eqs[i][j];
    std::vector<QMatrix> out;
    for (const auto& v : kernel(sys)) {
        QMatrix X(D, S);
        for (std::size_t j = 0; j < vars.size(); ++j) X(vars[j].first, vars[j].second) = v[j];
        out.push_back(std::move(X));
    }
    return out;
}

QMatrix normalize_first(QMatrix X) {
    for (const auto& x : X.data())
        if (!x.is_zero()) return (Rational(1) / x) * X;
    throw std::logic_error("zero equivariant map");
}

QMatrix normalize_last(QMatrix X) {
    const auto& d = X.data();
    for (auto it = d.rbegin(); it != d.rend(); ++it)
        if (!it->is_zero()) return (Rational(1) / *it) * X;
    throw std::logic_error("zero equivariant map");
}

void check_triple(int m, int n, int k) {
    if (!in_tensor_semigroup(m, n, k))
        throw std::invalid_argument("(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) +
                                    ") is not in the tensor semigroup");
}

using Key = std::tuple<int, int, int>;

std::mutex g_cache_mutex;
std::map<Key, CGProjection> g_projections;
std::map<Key, QMatrix> g_injections;
std::map<Key, QMatrix> g_injections_solved;

}  // namespace

QMatrix tensor_op(const QMatrix& a, const QMatrix& b) {
    return kron(a, QMatrix::identity(b.rows())) + kron(QMatrix::identity(a.rows()), b);
}

QMatrix invariant_form(int m) {
    std::vector<Rational> fact(m + 1, Rational(1));
    for (int i = 1; i <= m; ++i) fact[i] = fact[i - 1] * Rational(i);
    QMatrix B(m + 1, m + 1);
    for (int i = 0; i <= m; ++i) B(i, m - i) = (i % 2 == 0 ? 1 : -1) * fact[i] * fact[m - i];
    return B;
}

bool is_equivariant(const QMatrix& map, int src_m, int src_n, int dst_m, int dst_n) {
    auto module = [](int a, int b) { return b < 0 ? simple_module(a) : tensor_module(a, b); };
    Module s = module(src_m, src_n), d = module(dst_m, dst_n);
    return map * s.e == d.e * map && map * s.f == d.f * map;
}

const CGProjection& cg_projection(int m, int n, int k) {
    check_triple(m, n, k);
    Key key{m, n, k};
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_projections.find(key);
        if (it != g_projections.end()) return it->second;
    }
    auto maps = equivariant_maps(tensor_module(m, n), simple_module(k));
    if (maps.size() != 1) throw std::logic_error("equivariant projection is not unique");
    CGProjection p{m, n, k, normalize_first(maps[0])};
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_projections.emplace(key, std::move(p)).first->second;
}

const QMatrix& cg_injection(int m, int n, int k) {
    check_triple(m, n, k);
    Key key{m, n, k};
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_injections.find(key);
        if (it != g_injections.end()) return it->second;
    }
    const QMatrix& pi = cg_projection(m, n, k).matrix;
    // iota(v) = Psi_{m,n}^{-1}(pi^T(Psi_k(v))), Psi(v) = B^T v in the dual basis.
    QMatrix psi_mn = kron(invariant_form(m), invariant_form(n)).transpose();
    QMatrix psi_k = invariant_form(k).transpose();
    QMatrix iota = inverse(psi_mn) * pi.transpose() * psi_k;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_injections.emplace(key, std::move(iota)).first->second;
}

const QMatrix& cg_injection_solved(int m, int n, int k) {
    check_triple(m, n, k);
    Key key{m, n, k};
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_injections_solved.find(key);
        if (it != g_injections_solved.end()) return it->second;
    }
    auto maps = equivariant_maps(simple_module(k), tensor_module(m, n));
    if (maps.size() != 1) throw std::logic_error("equivariant injection is not unique");
    QMatrix iota = normalize_last(maps[0]);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_injections_solved.emplace(key, std::move(iota)).first->second;
}

namespace {

bool componentwise_ok(const TTriple& k, const TTriple& m, const TTriple& n) {
    if (!in_tensor_semigroup(k) || !in_tensor_semigroup(m) || !in_tensor_semigroup(n)) return false;
    for (int i = 0; i < 3; ++i)
        if (!in_tensor_semigroup(m[i], n[i], k[i])) return false;
    return true;
}

}  // namespace

QMatrix product_criterion_matrix(const TTriple& k, const TTriple& m, const TTriple& n, bool solved_injection) {
    if (!componentwise_ok(k, m, n)) throw std::invalid_argument("V(k) does not occur in V(m) (x) V(n)");
    const QMatrix& i1 = solved_injection ? cg_injection_solved(m[0], n[0], k[0]) : cg_injection(m[0], n[0], k[0]);
    const QMatrix& i2 = solved_injection ? cg_injection_solved(m[1], n[1], k[1]) : cg_injection(m[1], n[1], k[1]);
    const QMatrix& pm = cg_projection(m[0], m[1], m[2]).matrix;
    const QMatrix& pn = cg_projection(n[0], n[1], n[2]).matrix;
    const QMatrix& pk = cg_projection(m[2], n[2], k[2]).matrix;

    const int dm = m[0] + 1, dn = n[0] + 1, dm1 = m[1] + 1, dn1 = n[1] + 1;
    const int dm2 = m[2] + 1, dn2 = n[2] + 1;
    const int dk = k[0] + 1, dk1 = k[1] + 1;
    QMatrix out(k[2] + 1, static_cast<std::size_t>(dk) * dk1);
    QVec mid(static_cast<std::size_t>(dm2) * dn2);
    for (int a = 0; a < dk; ++a)
        for (int b = 0; b < dk1; ++b) {
            std::fill(mid.begin(), mid.end(), Rational(0));
            // i1(e_a) in V(m)(x)V(n), i2(e_b) in V(m')(x)V(n'); regroup as (V(m)(x)V(m'))(x)(V(n)(x)V(n')).
            for (int i = 0; i < dm; ++i)
                for (int j = 0; j < dn; ++j) {
                    const Rational& u = i1(i * dn + j, a);
                    if (u.is_zero()) continue;
                    for (int i1_ = 0; i1_ < dm1; ++i1_)
                        for (int j1 = 0; j1 < dn1; ++j1) {
                            const Rational& u1 = i2(i1_ * dn1 + j1, b);
                            if (u1.is_zero()) continue;
                            Rational c = u * u1;
                            const int col_m = i * dm1 + i1_, col_n = j * dn1 + j1;
                            for (int x = 0; x < dm2; ++x) {
                                const Rational& px = pm(x, col_m);
                                if (px.is_zero()) continue;
                                for (int y = 0; y < dn2; ++y) {
                                    const Rational& py = pn(y, col_n);
                                    if (py.is_zero()) continue;
                                    mid[x * dn2 + y] += c * px * py;
                                }
                            }
                        }
                }
            for (int z = 0; z <= k[2]; ++z) {
                Rational acc;
                for (std::size_t c = 0; c < mid.size(); ++c)
                    if (!mid[c].is_zero() && !pk(z, c).is_zero()) acc += pk(z, c) * mid[c];
                out(z, a * dk1 + b) = acc;
            }
        }
    return out;
}

bool product_contains(const TTriple& k, const TTriple& m, const TTriple& n) {
    if (!componentwise_ok(k, m, n)) return false;
    static std::mutex mu;
    static std::map<std::array<int, 9>, bool> cache;
    std::array<int, 9> key{k[0], k[1], k[2], m[0], m[1], m[2], n[0], n[1], n[2]};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    bool a = !product_criterion_matrix(k, m, n, false).is_zero();
    bool b = !product_criterion_matrix(k, m, n, true).is_zero();
    if (a != b) throw std::logic_error("product criterion depends on the normalization of the injections");
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = a;
    return a;
}

std::vector<TTriple> gamma_module(const TTriple& m) {
    if (!in_tensor_semigroup(m)) throw std::invalid_argument(ttriple_str(m) + " is not in the tensor semigroup");
    std::vector<TTriple> out;
    for (int a = m[0]; a >= 0; a -= 2)
        for (int b = m[1]; b >= 0; b -= 2)
            for (int c = m[2]; c >= 0; c -= 2) {
                TTriple t{a, b, c};
                if (in_tensor_semigroup(t)) out.push_back(t);
            }
    return out;
}

GammaProductResult verify_gamma_product(const TTriple& m, const TTriple& n) {
    GammaProductResult res;
    TTriple sum{m[0] + n[0], m[1] + n[1], m[2] + n[2]};
    auto gm = gamma_module(m), gn = gamma_module(n);
    for (const auto& k : gamma_module(sum)) {
        bool found = false;
        for (const auto& a : gm) {
            for (const auto& b : gn)
                if (product_contains(k, a, b)) {
                    res.cover[k] = {a, b};
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found) {
            res.ok = false;
            res.missing.push_back(k);
        }
    }
    return res;
}

std::vector<TTriple> tensor_semigroup_elements(int bound) {
    std::vector<TTriple> out;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
            for (int c = 0; c <= bound; ++c)
                if (in_tensor_semigroup(a, b, c)) out.push_back({a, b, c});
    return out;
}

CGVerifyReport cg_verify(int max_entry) {
    if (max_entry < 0) throw std::invalid_argument("max_entry must be nonnegative");
    CGVerifyReport rep;
    rep.max_entry = max_entry;
    auto elems = tensor_semigroup_elements(max_entry);
    for (const auto& m : elems)
        for (const auto& n : elems) {
            ++rep.pairs_checked;
            auto r = verify_gamma_product(m, n);
            if (!r.ok) {
                rep.ok = false;
                rep.failures.emplace_back(m, n);
            }
        }
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i; j < elems.size(); ++j) {
            const auto& m = elems[i];
            const auto& n = elems[j];
            for (int a = std::abs(m[0] - n[0]); a <= m[0] + n[0]; a += 2)
                for (int b = std::abs(m[1] - n[1]); b <= m[1] + n[1]; b += 2)
                    for (int c = std::abs(m[2] - n[2]); c <= m[2] + n[2]; c += 2) {
                        TTriple k{a, b, c};
                        if (!in_tensor_semigroup(k)) continue;
                        if (!product_contains(k, m, n)) rep.degenerate.push_back({k, m, n});
                    }
        }
    return rep;
}

}  // namespace hermorb
