#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hermorb/linalg.hpp"

namespace hermorb {

// Highest weights (m, m', m'') of the three SL(2) factors.
using TTriple = std::array<int, 3>;

bool in_tensor_semigroup(int m, int n, int k);
bool in_tensor_semigroup(const TTriple& t);
std::string ttriple_str(const TTriple& t);

// Weight basis v_0..v_m of V(m), highest first: E v_i = i v_{i-1}, F v_i = (m-i) v_{i+1}.
QMatrix sl2_raising(int m);
QMatrix sl2_lowering(int m);
QMatrix sl2_cartan(int m);
// Operators on V(m) (x) V(n) with basis index i*(n+1)+j.
QMatrix tensor_op(const QMatrix& a, const QMatrix& b);
// Invariant bilinear form on V(m): B(v_i, v_{m-i}) = (-1)^i i! (m-i)!.
QMatrix invariant_form(int m);

struct CGProjection {
    int m = 0, n = 0, k = 0;
    QMatrix matrix;  // (k+1) x (m+1)(n+1)
};

// Equivariant projection V(m) (x) V(n) -> V(k), first nonzero entry (row-major) equal to 1.
const CGProjection& cg_projection(int m, int n, int k);
// Equivariant injection V(k) -> V(m) (x) V(n) obtained from the transpose of cg_projection and the
// self-duality isomorphisms v -> B(v, .).
const QMatrix& cg_injection(int m, int n, int k);
// Same injection solved directly from the equivariance equations, last nonzero entry equal to 1.
const QMatrix& cg_injection_solved(int m, int n, int k);

bool is_equivariant(const QMatrix& map, int src_m, int src_n, int dst_m, int dst_n);

// V(k) (x) V(k') -> V(k'') through V(m)(x)V(n)(x)V(m')(x)V(n') -> V(m'')(x)V(n'').
// Rows index V(k''), columns index V(k)(x)V(k').
QMatrix product_criterion_matrix(const TTriple& k, const TTriple& m, const TTriple& n, bool solved_injection = false);
bool product_contains(const TTriple& k, const TTriple& m, const TTriple& n);

std::vector<TTriple> gamma_module(const TTriple& m);

struct GammaProductResult {
    bool ok = true;
    std::vector<TTriple> missing;
    std::map<TTriple, std::pair<TTriple, TTriple>> cover;  // k -> (m~, n~)
};
GammaProductResult verify_gamma_product(const TTriple& m, const TTriple& n);

// All elements of T with entries <= bound, lexicographic.
std::vector<TTriple> tensor_semigroup_elements(int bound);

struct DegenerateTriple {
    TTriple k, m, n;
};
struct CGVerifyReport {
    int max_entry = 0;
    std::size_t pairs_checked = 0;
    bool ok = true;
    std::vector<std::pair<TTriple, TTriple>> failures;  // (m, n) with a missing k
    std::vector<DegenerateTriple> degenerate;           // V(k) in V(m)(x)V(n) but not in V(m).V(n), m <= n
};
CGVerifyReport cg_verify(int max_entry);

}  // namespace hermorb
