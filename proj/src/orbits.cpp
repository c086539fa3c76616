#include "hermorb/orbits.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hermorb {

std::string signed_partition_str(const std::vector<SignedPart>& sp) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const auto& x : sp) {
        if (x.multiplicity == 0) continue;
        if (!first) os << ",";
        first = false;
        os << (x.sign > 0 ? "+" : "-") << x.part;
        if (x.multiplicity != 1) os << "^" << x.multiplicity;
    }
    os << ")";
    return os.str();
}

std::string OrbitRecord::params_str() const {
    std::string s;
    if (r >= 0) s += "r=" + std::to_string(r);
    if (this->s >= 0) s += (s.empty() ? "" : ",") + std::string("s=") + std::to_string(this->s);
    return s.empty() ? "-" : s;
}

std::string OrbitRecord::id() const {
    std::string out = pair.key() + "/" + case_id + "/" + params_str();
    if (!variant.empty()) out += "/" + variant;
    return out;
}

bool Realization::in_g(const QMatrix& x) const {
    if (x.rows() != dim || x.cols() != dim) return false;
    if (form.rows() == 0) {
        Rational tr;
        for (std::size_t i = 0; i < dim; ++i) tr += x(i, i);
        return tr.is_zero();
    }
    return (x.transpose() * form + form * x).is_zero();
}

bool Realization::in_k(const QMatrix& x) const {
    if (!in_g(x)) return false;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (grading[i] != grading[j] && !x(i, j).is_zero()) return false;
    return true;
}

bool Realization::in_p(const QMatrix& x) const {
    if (!in_g(x)) return false;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (grading[i] == grading[j] && !x(i, j).is_zero()) return false;
    return true;
}

namespace {

using PosPred = std::function<bool(std::size_t, std::size_t)>;

// Basis of {X in g : X_ij = 0 unless allowed(i,j)}.
std::vector<QMatrix> subspace_basis(std::size_t n, const QMatrix& form, const PosPred& allowed) {
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    std::vector<std::vector<long>> slot(n, std::vector<long>(n, -1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (allowed(i, j)) {
                slot[i][j] = static_cast<long>(pos.size());
                pos.emplace_back(i, j);
            }
    std::vector<QVec> cons;
    if (form.rows() == 0) {
        QVec row(pos.size());
        bool any = false;
        for (std::size_t i = 0; i < n; ++i)
            if (slot[i][i] >= 0) { row[slot[i][i]] = 1; any = true; }
        if (any) cons.push_back(row);
    } else {
        // (X^T G + G X)_{ab} = sum_c X_ca G_cb + sum_c G_ac X_cb
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) {
                QVec row(pos.size());
                bool any = false;
                for (std::size_t c = 0; c < n; ++c) {
                    if (slot[c][a] >= 0 && !form(c, b).is_zero()) { row[slot[c][a]] += form(c, b); any = true; }
                    if (slot[c][b] >= 0 && !form(a, c).is_zero()) { row[slot[c][b]] += form(a, c); any = true; }
                }
                if (any) cons.push_back(row);
            }
    }
    QMatrix cm(cons.size(), pos.size());
    for (std::size_t i = 0; i < cons.size(); ++i)
        for (std::size_t j = 0; j < pos.size(); ++j) cm(i, j) = cons[i][j];
    std::vector<QVec> ker;
    if (cons.empty()) {
        for (std::size_t j = 0; j < pos.size(); ++j) {
            QVec v(pos.size());
            v[j] = 1;
            ker.push_back(v);
        }
    } else {
        ker = kernel(cm);
    }
    std::vector<QMatrix> out;
    for (const auto& v : ker) {
        QMatrix x(n, n);
        for (std::size_t k = 0; k < pos.size(); ++k) x(pos[k].first, pos[k].second) = v[k];
        out.push_back(std::move(x));
    }
    return out;
}

QMatrix antidiag(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
    return m;
}

std::shared_ptr<Realization> build_realization(const SymmetricPairSpec& pair) {
    auto R = std::make_shared<Realization>();
    R->family = pair.family;
    R->n = pair.rank;
    const int n = pair.rank;
    PosPred lower;
    switch (pair.family) {
        case Family::SLpq: {
            const int p = pair.block_p(), q = pair.block_q();
            R->p = p;
            R->q = q;
            R->dim = p + q;
            R->grading.assign(p, 1);
            R->grading.insert(R->grading.end(), q, -1);
            R->center = QMatrix(R->dim, R->dim);
            for (int i = 0; i < p; ++i) R->center(i, i) = Rational(q, p + q);
            for (int j = 0; j < q; ++j) R->center(p + j, p + j) = Rational(-p, p + q);
            lower = [](std::size_t i, std::size_t j) { return i > j; };
            R->description = "sl(p+q) on basis e_1..e_p, e'_1..e'_q; k = s(gl_p + gl_q) block diagonal";
            break;
        }
        case Family::SO_odd:
        case Family::SO_even_vector: {
            const bool odd = pair.family == Family::SO_odd;
            const std::size_t w = odd ? 2 * n - 1 : 2 * n - 2;
            R->dim = w + 2;
            R->form = QMatrix(R->dim, R->dim);
            auto aw = antidiag(w);
            for (std::size_t i = 0; i < w; ++i)
                for (std::size_t j = 0; j < w; ++j) R->form(i, j) = aw(i, j);
            R->form(w, w + 1) = R->form(w + 1, w) = 1;
            R->grading.assign(w, 1);
            R->grading.insert(R->grading.end(), 2, -1);
            R->center = QMatrix(R->dim, R->dim);
            R->center(w, w) = 1;
            R->center(w + 1, w + 1) = -1;
            lower = [](std::size_t i, std::size_t j) { return i > j; };
            R->description = odd ? "so(2n+1) on e_1..e_{n-1}, e_0, e_{-n+1}..e_{-1}, e'_1, e'_{-1}; beta(e_i,e_j)=delta_{i,-j}"
                                 : "so(2n) on e_1..e_{n-1}, e_{-n+1}..e_{-1}, e'_1, e'_{-1}; beta(e_i,e_j)=delta_{i,-j}";
            break;
        }
        case Family::Sp:
        case Family::SO_even_gl: {
            const bool sp = pair.family == Family::Sp;
            R->dim = 2 * n;
            R->form = QMatrix(R->dim, R->dim);
            for (int i = 0; i < n; ++i) {
                R->form(n + i, i) = 1;
                R->form(i, n + i) = sp ? -1 : 1;
            }
            R->form_symmetric = !sp;
            R->grading.assign(n, 1);
            R->grading.insert(R->grading.end(), n, -1);
            R->center = QMatrix(R->dim, R->dim);
            for (int i = 0; i < n; ++i) {
                R->center(i, i) = Rational(1, 2);
                R->center(n + i, n + i) = Rational(-1, 2);
            }
            const std::size_t nn = n;
            lower = [nn](std::size_t i, std::size_t j) {
                if (i < nn && j < nn) return i > j;
                if (i >= nn && j >= nn) return i < j;
                return false;
            };
            if (!sp) R->jordan_factor = 2;
            R->description = sp ? "sp(2n) on e_1..e_n, phi_1..phi_n; gl(n) as diag(A,-A^T); p = symmetric off-diagonal blocks"
                                : "so(2n) on e_1..e_n, phi_1..phi_n; gl(n) as diag(A,-A^T); p = alternating off-diagonal blocks";
            break;
        }
    }
    const auto& g = R->grading;
    const std::size_t N = R->dim;
    auto same = [&g](std::size_t i, std::size_t j) { return g[i] == g[j]; };
    R->k_basis = subspace_basis(N, R->form, same);
    R->b_basis = subspace_basis(N, R->form, [&](std::size_t i, std::size_t j) { return same(i, j) && !lower(i, j); });
    R->nminus_basis = subspace_basis(N, R->form, [&](std::size_t i, std::size_t j) { return same(i, j) && lower(i, j); });
    R->p_basis = subspace_basis(N, R->form, [&](std::size_t i, std::size_t j) { return !same(i, j); });
    return R;
}

}  // namespace

std::shared_ptr<const Realization> realization_for(const SymmetricPairSpec& pair) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const Realization>> cache;
    // SO(2n)/GL(n) for alpha_{n-1} and alpha_n share one realization.
    std::string key = std::string(family_name(pair.family)) + ":" + std::to_string(pair.rank) + ":" +
                      std::to_string(pair.block_p());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto built = build_realization(pair);
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(key, built);
    return it->second;
}

namespace {

std::vector<SignedPart> parts(std::initializer_list<SignedPart> l) {
    std::vector<SignedPart> v;
    for (const auto& x : l)
        if (x.multiplicity > 0) v.push_back(x);
    return v;
}

std::string family_prefix(Family f) {
    switch (f) {
        case Family::SLpq: return "1";
        case Family::SO_odd: return "2";
        case Family::Sp: return "3";
        case Family::SO_even_vector: return "4";
        case Family::SO_even_gl: return "5";
    }
    return "?";
}

bool needs_variant(const std::string& c) { return c == "2.1" || c == "2.3" || c == "4.1" || c == "4.3"; }

int param_count(const std::string& c) {
    static const std::set<std::string> two = {"1.3", "1.6", "1.7", "3.3", "5.3"};
    static const std::set<std::string> one = {"1.1", "1.2", "3.1", "3.2", "5.1", "5.2"};
    if (two.count(c)) return 2;
    if (one.count(c)) return 1;
    return 0;
}

}  // namespace

OrbitRecord make_orbit(const SymmetricPairSpec& pair, const std::string& c, int r, int s, const std::string& variant) {
    if (c.size() < 3 || c.substr(0, 1) != family_prefix(pair.family))
        throw std::invalid_argument("case " + c + " does not belong to pair " + pair.key());
    const int np = param_count(c);
    if ((np >= 1) != (r >= 0) || (np == 2) != (s >= 0))
        throw std::invalid_argument("wrong parameters for case " + c);
    if (needs_variant(c) != !variant.empty() || (!variant.empty() && variant != "I" && variant != "II"))
        throw std::invalid_argument("case " + c + " variant must be " + (needs_variant(c) ? "I or II" : "empty"));
    OrbitRecord o{pair, c, r, s, variant, {}};
    auto bad = [&]() { return std::invalid_argument("parameters out of range for " + o.id()); };
    const int n = pair.rank;
    if (pair.family == Family::SLpq) {
        const int p = pair.block_p(), q = pair.block_q();
        if (c == "1.1" || c == "1.2") {
            if (r < 1 || r > std::min(p, q)) throw bad();
            o.signed_partition = parts({{2, c == "1.1" ? 1 : -1, r}, {1, 1, p - r}, {1, -1, q - r}});
        } else if (c == "1.3") {
            if (r < 1 || s < 1 || r + s > std::min(p, q)) throw bad();
            o.signed_partition = parts({{2, 1, r}, {2, -1, s}, {1, 1, p - r - s}, {1, -1, q - r - s}});
        } else if (c == "1.4") {
            if (q != 2 || p < 4) throw bad();
            o.signed_partition = parts({{3, 1, 2}, {1, 1, p - 4}});
        } else if (c == "1.5") {
            if (p != 2 || q < 4) throw bad();
            o.signed_partition = parts({{3, -1, 2}, {1, -1, q - 4}});
        } else if (c == "1.6") {
            if (r < 0 || s < 0 || r + s + 2 > p || r + s + 1 > q) throw bad();
            o.signed_partition =
                parts({{3, 1, 1}, {2, 1, r}, {2, -1, s}, {1, 1, p - r - s - 2}, {1, -1, q - r - s - 1}});
        } else if (c == "1.7") {
            if (r < 0 || s < 0 || r + s + 1 > p || r + s + 2 > q) throw bad();
            o.signed_partition =
                parts({{3, -1, 1}, {2, 1, r}, {2, -1, s}, {1, 1, p - r - s - 1}, {1, -1, q - r - s - 2}});
        } else {
            throw std::invalid_argument("unknown case " + c);
        }
    } else if (pair.family == Family::SO_odd || pair.family == Family::SO_even_vector) {
        const int w = pair.family == Family::SO_odd ? 2 * n - 1 : 2 * n - 2;
        const std::string k = c.substr(2);
        if (k == "1") o.signed_partition = parts({{2, 1, 2}, {1, 1, w - 2}});
        else if (k == "2") o.signed_partition = parts({{3, 1, 1}, {1, 1, w - 2}, {1, -1, 1}});
        else if (k == "3") o.signed_partition = parts({{3, -1, 1}, {1, 1, w - 1}});
        else if (k == "4") o.signed_partition = parts({{3, 1, 2}, {1, 1, w - 4}});
        else throw std::invalid_argument("unknown case " + c);
    } else if (pair.family == Family::Sp) {
        if (c == "3.1" || c == "3.2") {
            if (r < 1 || r > n) throw bad();
            o.signed_partition = parts({{2, c == "3.1" ? 1 : -1, r}, {1, 1, 2 * n - 2 * r}});
        } else if (c == "3.3") {
            if (r < 1 || s < 1 || r + s > n) throw bad();
            o.signed_partition = parts({{2, 1, r}, {2, -1, s}, {1, 1, 2 * n - 2 * r - 2 * s}});
        } else {
            throw std::invalid_argument("unknown case " + c);
        }
    } else {
        if (c == "5.1" || c == "5.2") {
            if (r < 1 || 2 * r > n) throw bad();
            o.signed_partition = parts({{2, c == "5.1" ? 1 : -1, r}, {1, 1, n - 2 * r}});
        } else if (c == "5.3") {
            if (r < 1 || s < 1 || 2 * r + 2 * s > n) throw bad();
            o.signed_partition = parts({{2, 1, r}, {2, -1, s}, {1, 1, n - 2 * r - 2 * s}});
        } else if (c == "5.4") {
            o.signed_partition = parts({{3, 1, 1}, {1, 1, n - 3}});
        } else {
            throw std::invalid_argument("unknown case " + c);
        }
    }
    return o;
}

std::vector<OrbitRecord> list_orbits(const SymmetricPairSpec& pair, int max_params) {
    std::vector<OrbitRecord> out;
    auto try_add = [&](const std::string& c, int r, int s, const std::string& v) {
        try {
            out.push_back(make_orbit(pair, c, r, s, v));
        } catch (const std::invalid_argument&) {
        }
    };
    const std::string pre = family_prefix(pair.family);
    std::vector<std::string> cases;
    switch (pair.family) {
        case Family::SLpq: cases = {"1.1", "1.2", "1.3", "1.4", "1.5", "1.6", "1.7"}; break;
        case Family::SO_odd: cases = {"2.1", "2.2", "2.3", "2.4"}; break;
        case Family::Sp: cases = {"3.1", "3.2", "3.3"}; break;
        case Family::SO_even_vector: cases = {"4.1", "4.2", "4.3", "4.4"}; break;
        case Family::SO_even_gl: cases = {"5.1", "5.2", "5.3", "5.4"}; break;
    }
    const int lo_r = 0;
    for (const auto& c : cases) {
        const int np = param_count(c);
        if (np == 0) {
            if (needs_variant(c)) {
                try_add(c, -1, -1, "I");
                try_add(c, -1, -1, "II");
            } else {
                try_add(c, -1, -1, "");
            }
        } else if (np == 1) {
            for (int r = lo_r; r <= max_params; ++r) try_add(c, r, -1, "");
        } else {
            for (int r = lo_r; r <= max_params; ++r)
                for (int s = lo_r; s <= max_params; ++s) try_add(c, r, s, "");
        }
    }
    return out;
}

OrbitRecord orbit_from_id(const std::string& id) {
    std::vector<std::string> parts_;
    std::stringstream ss(id);
    std::string tok;
    while (std::getline(ss, tok, '/')) parts_.push_back(tok);
    if (parts_.size() < 3 || parts_.size() > 4) throw std::invalid_argument("malformed orbit id: " + id);
    auto pair = pair_from_key(parts_[0]);
    int r = -1, s = -1;
    if (parts_[2] != "-") {
        std::stringstream ps(parts_[2]);
        std::string kv;
        while (std::getline(ps, kv, ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("malformed parameters in orbit id: " + id);
            const std::string k = kv.substr(0, eq);
            const int v = std::stoi(kv.substr(eq + 1));
            if (k == "r") r = v;
            else if (k == "s") s = v;
            else throw std::invalid_argument("unknown parameter '" + k + "' in orbit id: " + id);
        }
    }
    return make_orbit(pair, parts_[1], r, s, parts_.size() == 4 ? parts_[3] : "");
}

namespace {

// Writes the catalogued tensors into matrices of the defining representation.
struct Canvas {
    const Realization& R;
    QMatrix h, e, f;
    explicit Canvas(const Realization& r) : R(r), h(r.dim, r.dim), e(r.dim, r.dim), f(r.dim, r.dim) {}
};

// SL(p+q): e_i (x) phi'_j and phi_i (x) e'_j
void ep(const Realization& R, QMatrix& m, int i, int j, Rational c) { m(i - 1, R.p + j - 1) += c; }
void pe(const Realization& R, QMatrix& m, int i, int j, Rational c) { m(R.p + j - 1, i - 1) += c; }

// Orthogonal families: labels +-1..+-(n-1) and 0 on W, +-1 on C^2.
std::size_t wpos(const Realization& R, int l) {
    const int n = R.n;
    const bool odd = R.family == Family::SO_odd;
    if (l > 0) return l - 1;
    if (l == 0) {
        if (!odd) throw std::logic_error("no e_0 in even orthogonal case");
        return n - 1;
    }
    const int off = n - 1 + (odd ? 1 : 0);
    return off + (n - 1 + l);
}
std::size_t ppos(const Realization& R, int j) { return R.dim - 2 + (j == 1 ? 0 : 1); }

// x (x) phi'_j as the skew map: e'_j -> x and w -> -beta(w,x) e'_{-j}
void tens(const Realization& R, QMatrix& m, const std::vector<std::pair<int, Rational>>& x, int j, Rational c) {
    for (const auto& [l, a] : x) {
        m(wpos(R, l), ppos(R, j)) += c * a;
        m(ppos(R, -j), wpos(R, -l)) -= c * a;
    }
}

// Sp / SO(2n)/GL(n): products in S^2 or Lambda^2 of C^n and its dual.
void sym(const Realization& R, QMatrix& m, int i, int j, Rational c) {
    const int n = R.n;
    m(i - 1, n + j - 1) += c / 2;
    m(j - 1, n + i - 1) += c / 2;
}
void symd(const Realization& R, QMatrix& m, int i, int j, Rational c) {
    const int n = R.n;
    m(n + i - 1, j - 1) += c / 2;
    m(n + j - 1, i - 1) += c / 2;
}
void wedge(const Realization& R, QMatrix& m, int i, int j, Rational c) {
    const int n = R.n;
    m(i - 1, n + j - 1) += c;
    m(j - 1, n + i - 1) -= c;
}
void wedged(const Realization& R, QMatrix& m, int i, int j, Rational c) {
    const int n = R.n;
    m(n + j - 1, i - 1) += c;
    m(n + i - 1, j - 1) -= c;
}

void build_sl(Canvas& cv, const OrbitRecord& o) {
    const auto& R = cv.R;
    const int p = R.p, q = R.q, r = o.r, s = o.s;
    auto he = [&](int i, Rational v) { cv.h(i - 1, i - 1) = v; };
    auto hep = [&](int j, Rational v) { cv.h(p + j - 1, p + j - 1) = v; };
    const std::string& c = o.case_id;
    if (c == "1.1" || c == "1.3") {
        for (int i = 1; i <= r; ++i) {
            ep(R, cv.e, i, q - r + i, 1);
            pe(R, cv.f, i, q - r + i, 1);
            he(i, 1);
            hep(q - r + i, -1);
        }
    }
    if (c == "1.2" || c == "1.3") {
        const int k = c == "1.2" ? r : s;
        for (int i = 1; i <= k; ++i) {
            pe(R, cv.e, p - k + i, i, 1);
            ep(R, cv.f, p - k + i, i, 1);
            he(p - k + i, -1);
            hep(i, 1);
        }
    }
    if (c == "1.4") {
        ep(R, cv.e, 1, 1, 1); ep(R, cv.e, 2, 2, 1); pe(R, cv.e, p - 1, 1, 1); pe(R, cv.e, p, 2, 1);
        pe(R, cv.f, 1, 1, 2); pe(R, cv.f, 2, 2, 2); ep(R, cv.f, p - 1, 1, 2); ep(R, cv.f, p, 2, 2);
        he(1, 2); he(2, 2); he(p - 1, -2); he(p, -2);
    }
    if (c == "1.5") {
        ep(R, cv.e, 1, q - 1, 1); ep(R, cv.e, 2, q, 1); pe(R, cv.e, 1, 1, 1); pe(R, cv.e, 2, 2, 1);
        pe(R, cv.f, 1, q - 1, 2); pe(R, cv.f, 2, q, 2); ep(R, cv.f, 1, 1, 2); ep(R, cv.f, 2, 2, 2);
        hep(1, 2); hep(2, 2); hep(q - 1, -2); hep(q, -2);
    }
    if (c == "1.6") {
        ep(R, cv.e, 1, q - r, 1);
        pe(R, cv.e, p, q - r, 1);
        pe(R, cv.f, 1, q - r, 2);
        ep(R, cv.f, p, q - r, 2);
        for (int i = 1; i <= r; ++i) {
            ep(R, cv.e, i + 1, q - r + i, 1);
            pe(R, cv.f, i + 1, q - r + i, 1);
        }
        for (int i = 1; i <= s; ++i) {
            pe(R, cv.e, p - s + i - 1, i, 1);
            ep(R, cv.f, p - s + i - 1, i, 1);
        }
        he(1, 2);
        for (int i = 2; i <= r + 1; ++i) he(i, 1);
        for (int i = p - s; i <= p - 1; ++i) he(i, -1);
        he(p, -2);
        for (int i = 1; i <= s; ++i) hep(i, 1);
        for (int i = q - r + 1; i <= q; ++i) hep(i, -1);
    }
    if (c == "1.7") {
        for (int i = 1; i <= r; ++i) {
            ep(R, cv.e, i, q - r + i - 1, 1);
            pe(R, cv.f, i, q - r + i - 1, 1);
        }
        ep(R, cv.e, p - s, q, 1);
        pe(R, cv.e, p - s, 1, 1);
        pe(R, cv.f, p - s, q, 2);
        ep(R, cv.f, p - s, 1, 2);
        for (int i = 1; i <= s; ++i) {
            pe(R, cv.e, p - s + i, i + 1, 1);
            ep(R, cv.f, p - s + i, i + 1, 1);
        }
        for (int i = 1; i <= r; ++i) he(i, 1);
        for (int i = p - s + 1; i <= p; ++i) he(i, -1);
        hep(1, 2);
        for (int i = 2; i <= s + 1; ++i) hep(i, 1);
        for (int i = q - r; i <= q - 1; ++i) hep(i, -1);
        hep(q, -2);
    }
}

void build_orth(Canvas& cv, const OrbitRecord& o) {
    const auto& R = cv.R;
    const int n = R.n;
    auto hw = [&](int l, Rational v) { cv.h(wpos(R, l), wpos(R, l)) = v; };
    auto hp = [&](int j, Rational v) { cv.h(ppos(R, j), ppos(R, j)) = v; };
    const std::string k = o.case_id.substr(2);
    const bool I = o.variant == "I";
    using X = std::vector<std::pair<int, Rational>>;
    if (k == "1") {
        tens(R, cv.e, X{{1, 1}}, I ? -1 : 1, 1);
        tens(R, cv.f, X{{-1, 1}}, I ? 1 : -1, -1);
        hw(1, 1); hw(-1, -1);
        hp(1, I ? 1 : -1); hp(-1, I ? -1 : 1);
    } else if (k == "2") {
        tens(R, cv.e, X{{1, 1}}, 1, 1);
        tens(R, cv.e, X{{1, 1}}, -1, -1);
        tens(R, cv.f, X{{-1, 1}}, 1, 1);
        tens(R, cv.f, X{{-1, 1}}, -1, -1);
        hw(1, 2); hw(-1, -2);
    } else if (k == "3") {
        const X v = R.family == Family::SO_odd ? X{{0, 1}} : X{{n - 1, 1}, {-(n - 1), -1}};
        const Rational fc = R.family == Family::SO_odd ? Rational(-2) : Rational(1);
        tens(R, cv.e, v, I ? -1 : 1, 1);
        tens(R, cv.f, v, I ? 1 : -1, fc);
        hp(1, I ? 2 : -2); hp(-1, I ? -2 : 2);
    } else if (k == "4") {
        tens(R, cv.e, X{{1, 1}}, -1, 1);
        tens(R, cv.e, X{{2, 1}}, 1, -1);
        tens(R, cv.f, X{{-2, 1}}, -1, 2);
        tens(R, cv.f, X{{-1, 1}}, 1, -2);
        hw(1, 2); hw(2, 2); hw(-1, -2); hw(-2, -2);
    }
}

void build_gl(Canvas& cv, const OrbitRecord& o) {
    const auto& R = cv.R;
    const int n = R.n, r = o.r, s = o.s;
    const bool sp = R.family == Family::Sp;
    auto up = [&](QMatrix& m, int i, int j, Rational c) { sp ? sym(R, m, i, j, c) : wedge(R, m, i, j, c); };
    auto dn = [&](QMatrix& m, int i, int j, Rational c) { sp ? symd(R, m, i, j, c) : wedged(R, m, i, j, c); };
    auto he = [&](int i, Rational v) {
        cv.h(i - 1, i - 1) = v;
        cv.h(n + i - 1, n + i - 1) = -v;
    };
    const std::string k = o.case_id.substr(2);
    if (sp) {
        if (k == "1" || k == "3")
            for (int i = 1; i <= r; ++i) {
                up(cv.e, i, r - i + 1, 1);
                dn(cv.f, i, r - i + 1, 1);
                he(i, 1);
            }
        if (k == "2" || k == "3") {
            const int t = k == "2" ? r : s;
            for (int i = 1; i <= t; ++i) {
                dn(cv.e, n - t + i, n - i + 1, 1);
                up(cv.f, n - t + i, n - i + 1, 1);
                he(n - t + i, -1);
            }
        }
        return;
    }
    if (k == "1" || k == "3") {
        for (int i = 1; i <= r; ++i) {
            up(cv.e, i, 2 * r - i + 1, 1);
            dn(cv.f, i, 2 * r - i + 1, 1);
        }
        for (int i = 1; i <= 2 * r; ++i) he(i, 1);
    }
    if (k == "2" || k == "3") {
        const int t = k == "2" ? r : s;
        for (int i = 1; i <= t; ++i) {
            dn(cv.e, n - 2 * t + i, n - i + 1, 1);
            up(cv.f, n - 2 * t + i, n - i + 1, 1);
        }
        for (int i = n - 2 * t + 1; i <= n; ++i) he(i, -1);
    }
    if (k == "4") {
        up(cv.e, 1, 2, 1);
        dn(cv.e, 2, n, 1);
        dn(cv.f, 1, 2, 2);
        up(cv.f, 2, n, 2);
        he(1, 2);
        he(n, -2);
    }
}

}  // namespace

MatrixTriple build_triple(const OrbitRecord& o) {
    auto R = realization_for(o.pair);
    // Re-validate ranges.
    make_orbit(o.pair, o.case_id, o.r, o.s, o.variant);
    Canvas cv(*R);
    switch (R->family) {
        case Family::SLpq: build_sl(cv, o); break;
        case Family::SO_odd:
        case Family::SO_even_vector: build_orth(cv, o); break;
        case Family::Sp:
        case Family::SO_even_gl: build_gl(cv, o); break;
    }
    return {cv.h, cv.e, cv.f, R};
}

TripleReport verify_triple(const MatrixTriple& t) {
    TripleReport rep{false, false, false, false};
    const std::size_t n = t.h.rows();
    if (t.h.cols() != n || t.e.rows() != n || t.e.cols() != n || t.f.rows() != n || t.f.cols() != n) return rep;
    rep.sl2_ok = bracket(t.h, t.e) == Rational(2) * t.e && bracket(t.h, t.f) == Rational(-2) * t.f &&
                 bracket(t.e, t.f) == t.h;
    if (t.real && t.real->dim == n) {
        rep.h_in_k = t.real->in_k(t.h);
        rep.e_in_p = t.real->in_p(t.e);
        rep.f_in_p = t.real->in_p(t.f);
    }
    return rep;
}

std::map<int, int> adh_grading(const MatrixTriple& t) {
    const auto& R = *t.real;
    const std::size_t N = R.dim;
    if (!t.h.is_diagonal()) throw std::domain_error("h is not diagonal in the chosen basis");
    std::vector<std::int64_t> d(N);
    for (std::size_t i = 0; i < N; ++i) {
        if (!t.h(i, i).is_integer()) throw std::domain_error("h has non-integral eigenvalues");
        d[i] = t.h(i, i).num();
    }
    std::set<std::int64_t> lambdas;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) lambdas.insert(d[i] - d[j]);
    std::map<int, int> out;
    for (auto lam : lambdas) {
        std::vector<QVec> rows;
        for (const auto& x : R.k_basis) {
            QVec v;
            bool any = false;
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j)
                    if (d[i] - d[j] == lam) {
                        v.push_back(x(i, j));
                        any = any || !x(i, j).is_zero();
                    }
            if (any) rows.push_back(std::move(v));
        }
        const int dim = static_cast<int>(rank(std::move(rows)));
        if (dim > 0) out[static_cast<int>(lam)] = dim;
    }
    return out;
}

namespace {

std::size_t image_rank(const std::vector<QMatrix>& basis, const QMatrix& e) {
    std::vector<QVec> rows;
    rows.reserve(basis.size());
    for (const auto& x : basis) {
        QMatrix b = bracket(x, e);
        if (!b.is_zero()) rows.push_back(b.flatten());
    }
    return rank(std::move(rows));
}

using ModMat = std::vector<std::vector<std::uint64_t>>;

ModMat to_mod(const QMatrix& m) {
    ModMat out(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = mod_reduce(m(i, j));
    return out;
}

ModMat mod_mul(const ModMat& a, const ModMat& b) {
    const std::size_t n = a.size(), k = b.size(), m = b[0].size();
    ModMat c(n, std::vector<std::uint64_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (!a[i][l]) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[l][j]) c[i][j] = addmod(c[i][j], mulmod(a[i][l], b[l][j]));
        }
    return c;
}

bool mod_zero(const ModMat& a) {
    for (const auto& r : a)
        for (auto x : r)
            if (x) return false;
    return true;
}

// exp(t Y) for nilpotent Y over F_p
ModMat mod_exp(const ModMat& y, std::uint64_t t) {
    const std::size_t n = y.size();
    ModMat result(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) result[i][i] = 1;
    ModMat ty = y;
    for (auto& r : ty)
        for (auto& x : r) x = mulmod(x, t);
    ModMat term = result;
    for (std::uint64_t k = 1; k <= n; ++k) {
        term = mod_mul(term, ty);
        const std::uint64_t ik = invmod(k);
        for (auto& r : term)
            for (auto& x : r) x = mulmod(x, ik);
        if (mod_zero(term)) break;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) result[i][j] = addmod(result[i][j], term[i][j]);
    }
    return result;
}

}  // namespace

CentralizerDims centralizer_dim(const Realization& R, const QMatrix& e) {
    const int dimk = static_cast<int>(R.k_basis.size());
    const int img = static_cast<int>(image_rank(R.k_basis, e));
    return {dimk - img, img};
}

CentralizerDims centralizer_dim(const MatrixTriple& t) { return centralizer_dim(*t.real, t.e); }

SphericityReport is_spherical(const Realization& R, const QMatrix& e) {
    SphericityReport rep{};
    rep.dim_Ke = centralizer_dim(R, e).dim_Ke;
    rep.b_orbit_dim_at_rep = static_cast<int>(image_rank(R.b_basis, e));
    rep.b_orbit_dim_generic = rep.b_orbit_dim_at_rep;
    std::vector<ModMat> nminus, borel;
    for (const auto& y : R.nminus_basis) nminus.push_back(to_mod(y));
    for (const auto& b : R.b_basis) borel.push_back(to_mod(b));
    const ModMat e0 = to_mod(e);
    constexpr int kTrials = 4;
    for (int trial = 0; trial < kTrials && rep.b_orbit_dim_generic < rep.dim_Ke; ++trial) {
        std::mt19937_64 rng(0x5eedULL * 1000003ULL + static_cast<unsigned>(trial));
        std::uniform_int_distribution<std::uint64_t> dist(1, kModPrime - 1);
        ModMat x = e0;
        for (const auto& y : nminus) {
            const std::uint64_t t = dist(rng);
            x = mod_mul(mod_mul(mod_exp(y, t), x), mod_exp(y, kModPrime - t));
        }
        std::vector<std::vector<std::uint64_t>> rows;
        for (const auto& b : borel) {
            ModMat bx = mod_mul(b, x), xb = mod_mul(x, b);
            std::vector<std::uint64_t> v;
            v.reserve(x.size() * x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t j = 0; j < x.size(); ++j) v.push_back(submod(bx[i][j], xb[i][j]));
            rows.push_back(std::move(v));
        }
        rep.trials = trial + 1;
        rep.b_orbit_dim_generic = std::max(rep.b_orbit_dim_generic, static_cast<int>(rank_mod_p(rows)));
    }
    rep.spherical = rep.b_orbit_dim_generic == rep.dim_Ke;
    return rep;
}

SphericityReport is_spherical(const MatrixTriple& t) { return is_spherical(*t.real, t.e); }

int p_height(const Realization& R, const QMatrix& e) {
    const std::size_t N = R.dim;
    std::vector<QVec> cur;
    for (const auto& x : R.p_basis) cur.push_back(x.flatten());
    int n = 0;
    while (true) {
        std::vector<QVec> next;
        for (const auto& v : cur) {
            QMatrix x(N, N);
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) x(i, j) = v[i * N + j];
            QMatrix b = bracket(e, x);
            if (!b.is_zero()) next.push_back(b.flatten());
        }
        next = span_basis(std::move(next));
        if (next.empty()) return n;
        ++n;
        cur = std::move(next);
        if (n > static_cast<int>(4 * N)) throw std::logic_error("ad(e) is not nilpotent");
    }
}

int p_height(const MatrixTriple& t) { return p_height(*t.real, t.e); }

BiconeReport bicone_witness(const MatrixTriple& t) {
    const auto& R = *t.real;
    const std::size_t N = R.dim;
    QMatrix e1(N, N), e2(N, N);
    bool clean = true;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (t.e(i, j).is_zero()) continue;
            const Rational w = R.center(i, i) - R.center(j, j);
            if (w == Rational(1)) e1(i, j) = t.e(i, j);
            else if (w == Rational(-1)) e2(i, j) = t.e(i, j);
            else clean = false;
        }
    BiconeReport rep{};
    rep.h_weight_on_e_is_2 = bracket(t.h, t.e) == Rational(2) * t.e;
    rep.e1_nonzero = !e1.is_zero();
    rep.e2_nonzero = !e2.is_zero();
    rep.chi_charge_p1 = rep.e1_nonzero && bracket(R.center, e1) == e1 ? 1 : 0;
    rep.chi_charge_p2 = rep.e2_nonzero && bracket(R.center, e2) == Rational(-1) * e2 ? -1 : 0;
    rep.charges_ok = clean && bracket(R.center, e1) == e1 && bracket(R.center, e2) == Rational(-1) * e2;
    return rep;
}

std::map<int, int> jordan_type(const QMatrix& e) {
    std::vector<std::size_t> ranks{e.rows()};
    QMatrix pw = QMatrix::identity(e.rows());
    while (ranks.back() > 0) {
        pw = pw * e;
        const std::size_t rk = rank(pw);
        if (rk == ranks.back()) throw std::domain_error("matrix is not nilpotent");
        ranks.push_back(rk);
    }
    // blocks of size >= k: ranks[k-1] - ranks[k]
    std::map<int, int> out;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        const long ge_k = static_cast<long>(ranks[k - 1]) - static_cast<long>(ranks[k]);
        const long ge_k1 = k + 1 < ranks.size() ? static_cast<long>(ranks[k]) - static_cast<long>(ranks[k + 1]) : 0;
        if (ge_k - ge_k1 > 0) out[static_cast<int>(k)] = static_cast<int>(ge_k - ge_k1);
    }
    return out;
}

std::map<int, std::pair<int, int>> signed_jordan_type(const MatrixTriple& t) {
    const auto& R = *t.real;
    const std::size_t N = R.dim;
    std::map<int, std::pair<int, int>> out;
    for (const auto& [k, mult] : jordan_type(t.e)) {
        int counts[2] = {0, 0};
        for (int sgn : {1, -1}) {
            std::vector<std::size_t> cols;
            for (std::size_t i = 0; i < N; ++i)
                if (R.grading[i] == sgn && t.h(i, i) == Rational(k - 1)) cols.push_back(i);
            QMatrix sub(N, cols.size());
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t c = 0; c < cols.size(); ++c) sub(i, c) = t.e(i, cols[c]);
            counts[sgn > 0 ? 0 : 1] = static_cast<int>(cols.size() - rank(sub));
        }
        out[k] = {counts[0], counts[1]};
        (void)mult;
    }
    return out;
}

std::map<int, int> expected_jordan_type(const OrbitRecord& o) {
    auto R = realization_for(o.pair);
    std::map<int, int> out;
    for (const auto& sp : o.signed_partition)
        if (sp.multiplicity > 0) out[sp.part] += sp.multiplicity * R->jordan_factor;
    return out;
}

std::map<int, std::pair<int, int>> expected_signed_jordan_type(const OrbitRecord& o) {
    auto R = realization_for(o.pair);
    std::map<int, std::pair<int, int>> out;
    for (const auto& sp : o.signed_partition) {
        auto& slot = out[sp.part];
        const bool odd = sp.part % 2 == 1;
        bool signed_part = true;
        int m = sp.multiplicity;
        switch (R->family) {
            case Family::SLpq: break;
            case Family::SO_odd:
            case Family::SO_even_vector: signed_part = odd; break;
            case Family::Sp: signed_part = !odd; break;
            case Family::SO_even_gl:
                signed_part = !odd;
                m *= 2;
                break;
        }
        if (signed_part) {
            (sp.sign > 0 ? slot.first : slot.second) += m;
        } else {
            slot.first += m / 2;
            slot.second += m / 2;
        }
    }
    return out;
}

bool expected_height_three(const OrbitRecord& o) {
    static const std::set<std::string> three = {"1.4", "1.5", "1.6", "1.7", "2.4", "4.4", "5.4"};
    return three.count(o.case_id) > 0;
}

}  // namespace hermorb
