#pragma once

#include <string>
#include <vector>

#include "hermorb/linalg.hpp"

namespace hermorb {

enum class RootType { A, B, C, D };

char type_letter(RootType t);
RootType parse_root_type(const std::string& s);  // throws std::invalid_argument
int min_rank(RootType t);
void check_rank(RootType t, int rank);            // throws std::invalid_argument

struct Component {
    RootType type;
    int rank;
    bool operator==(const Component&) const = default;
};

enum class Basis { SimpleRoots, FundWeights, Colors, SphericalRoots };
const char* basis_name(Basis b);

class LatticeVector {
public:
    LatticeVector(Basis basis, IntVec coords) : basis_(basis), coords_(std::move(coords)) {}
    static LatticeVector zero(Basis basis, std::size_t n) { return {basis, IntVec(n, 0)}; }

    Basis basis() const { return basis_; }
    const IntVec& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }

    LatticeVector operator+(const LatticeVector& o) const;
    LatticeVector operator-(const LatticeVector& o) const;
    LatticeVector operator*(std::int64_t s) const;
    bool operator==(const LatticeVector& o) const;
    // Coordinatewise comparison; throws on basis mismatch.
    bool leq(const LatticeVector& o) const;
    std::string str() const;

private:
    Basis basis_;
    IntVec coords_;
    void require_same(const LatticeVector& o) const;
};

class RootSystem {
public:
    explicit RootSystem(std::vector<Component> components);
    const std::vector<Component>& components() const { return components_; }
    int total_rank() const;
    // Block-diagonal Cartan matrix, a_ij = <alpha_i, alpha_j^vee>.
    IntMat cartan() const;
    // Offset of component c in the concatenated simple-root list.
    int offset(std::size_t c) const;
    std::string str() const;  // e.g. "A2xA3"
    bool operator==(const RootSystem&) const = default;

private:
    std::vector<Component> components_;
};

IntMat cartan_matrix(RootType t, int rank);
LatticeVector highest_root(RootType t, int rank);
std::vector<int> abelian_radical_roots(RootType t, int rank);  // 1-based indices

// Simple-root coordinates -> fundamental-weight coordinates.
LatticeVector to_fund_weights(const IntMat& cartan, const LatticeVector& v);
// Fundamental coweight omega_p^vee in simple-coroot coordinates (column p of A^{-1}), p 1-based.
QVec fundamental_coweight(RootType t, int rank, int p);

namespace detail {
// Euclidean realization used only as an oracle in tests: simple roots as
// rational vectors in epsilon coordinates.
std::vector<QVec> euclidean_simple_roots(RootType t, int rank);
Rational euclid_dot(const QVec& a, const QVec& b);
}  // namespace detail

}  // namespace hermorb
