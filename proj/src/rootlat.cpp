#include "hermorb/rootlat.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hermorb {

char type_letter(RootType t) {
    switch (t) {
        case RootType::A: return 'A';
        case RootType::B: return 'B';
        case RootType::C: return 'C';
        case RootType::D: return 'D';
    }
    return '?';
}

RootType parse_root_type(const std::string& s) {
    if (s == "A" || s == "a") return RootType::A;
    if (s == "B" || s == "b") return RootType::B;
    if (s == "C" || s == "c") return RootType::C;
    if (s == "D" || s == "d") return RootType::D;
    throw std::invalid_argument("unsupported root system type: " + s);
}

int min_rank(RootType t) {
    switch (t) {
        case RootType::A: return 1;
        case RootType::B:
        case RootType::C: return 2;
        case RootType::D: return 3;
    }
    return 1;
}

void check_rank(RootType t, int rank) {
    if (rank < min_rank(t))
        throw std::invalid_argument(std::string("rank ") + std::to_string(rank) +
                                    " out of range for type " + type_letter(t));
}

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::SimpleRoots: return "simple_roots";
        case Basis::FundWeights: return "fund_weights";
        case Basis::Colors: return "colors";
        case Basis::SphericalRoots: return "spherical_roots";
    }
    return "?";
}

void LatticeVector::require_same(const LatticeVector& o) const {
    if (basis_ != o.basis_ || coords_.size() != o.coords_.size())
        throw std::invalid_argument("lattice vectors in different bases");
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
    require_same(o);
    IntVec c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return {basis_, c};
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
    require_same(o);
    IntVec c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return {basis_, c};
}

LatticeVector LatticeVector::operator*(std::int64_t s) const {
    IntVec c(coords_);
    for (auto& x : c) x *= s;
    return {basis_, c};
}

bool LatticeVector::operator==(const LatticeVector& o) const {
    return basis_ == o.basis_ && coords_ == o.coords_;
}

bool LatticeVector::leq(const LatticeVector& o) const {
    require_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] > o.coords_[i]) return false;
    return true;
}

std::string LatticeVector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
    os << ")";
    return os.str();
}

RootSystem::RootSystem(std::vector<Component> components) : components_(std::move(components)) {
    for (const auto& c : components_) check_rank(c.type, c.rank);
}

int RootSystem::total_rank() const {
    int n = 0;
    for (const auto& c : components_) n += c.rank;
    return n;
}

int RootSystem::offset(std::size_t c) const {
    int n = 0;
    for (std::size_t i = 0; i < c; ++i) n += components_[i].rank;
    return n;
}

IntMat RootSystem::cartan() const {
    const int n = total_rank();
    IntMat m(n, IntVec(n, 0));
    for (std::size_t c = 0; c < components_.size(); ++c) {
        const int off = offset(c);
        auto block = cartan_matrix(components_[c].type, components_[c].rank);
        for (int i = 0; i < components_[c].rank; ++i)
            for (int j = 0; j < components_[c].rank; ++j) m[off + i][off + j] = block[i][j];
    }
    return m;
}

std::string RootSystem::str() const {
    std::string s;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) s += "x";
        s += type_letter(components_[i].type);
        s += std::to_string(components_[i].rank);
    }
    return s;
}

IntMat cartan_matrix(RootType t, int n) {
    check_rank(t, n);
    IntMat a(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    switch (t) {
        case RootType::A: break;
        case RootType::B: a[n - 2][n - 1] = -2; break;
        case RootType::C: a[n - 1][n - 2] = -2; break;
        case RootType::D:
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
            break;
    }
    return a;
}

LatticeVector highest_root(RootType t, int n) {
    check_rank(t, n);
    IntVec c(n, 1);
    switch (t) {
        case RootType::A: break;
        case RootType::B:
            for (int i = 1; i < n; ++i) c[i] = 2;
            break;
        case RootType::C:
            for (int i = 0; i + 1 < n; ++i) c[i] = 2;
            break;
        case RootType::D:
            for (int i = 1; i + 2 < n; ++i) c[i] = 2;
            break;
    }
    return {Basis::SimpleRoots, c};
}

std::vector<int> abelian_radical_roots(RootType t, int n) {
    auto theta = highest_root(t, n);
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (theta[i] == 1) out.push_back(i + 1);
    return out;
}

LatticeVector to_fund_weights(const IntMat& a, const LatticeVector& v) {
    if (v.basis() != Basis::SimpleRoots) throw std::invalid_argument("expected simple-root coordinates");
    const std::size_t n = v.size();
    IntVec w(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[j] += v[i] * a[i][j];
    return {Basis::FundWeights, w};
}

QVec fundamental_coweight(RootType t, int n, int p) {
    if (p < 1 || p > n) throw std::invalid_argument("simple root index out of range");
    QMatrix inv = inverse(QMatrix::from_int(cartan_matrix(t, n)));
    QVec col(n);
    for (int j = 0; j < n; ++j) col[j] = inv(j, p - 1);
    return col;
}

namespace detail {

std::vector<QVec> euclidean_simple_roots(RootType t, int n) {
    check_rank(t, n);
    const int dim = (t == RootType::A) ? n + 1 : n;
    std::vector<QVec> roots;
    for (int i = 0; i + 1 < n + (t == RootType::A ? 1 : 0); ++i) {
        QVec v(dim);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
    }
    QVec last(dim);
    switch (t) {
        case RootType::A: return roots;
        case RootType::B: last[n - 1] = 1; break;
        case RootType::C: last[n - 1] = 2; break;
        case RootType::D: last[n - 2] = 1; last[n - 1] = 1; break;
    }
    roots.push_back(last);
    return roots;
}

Rational euclid_dot(const QVec& a, const QVec& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace detail

}  // namespace hermorb
