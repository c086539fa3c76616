#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hermorb/rootlat.hpp"

namespace hermorb {

enum class Family { SLpq, SO_odd, Sp, SO_even_vector, SO_even_gl };
const char* family_name(Family f);

struct KWeight {
    LatticeVector weight;  // FundWeights of K^ss, components concatenated
    int charge;            // chi-charge in units of the generating character of Z_K
};

struct SymmetricPairSpec {
    RootType g_type;
    int rank;
    int p_index;  // marked simple root, 1-based
    Family family;
    std::vector<Component> k_levi;  // K^ss components, rank-0 factors omitted
    int m;
    LatticeVector p1_highest_weight;

    // Block sizes of the defining realization: (p, q) for SL(p+q), n otherwise.
    int block_p() const;
    int block_q() const;
    std::string key() const;
    std::string group_name() const;
};

// Every Hermitian pair for the given simple type and rank within the
// Pairs of the given type and rank within the catalogued family bounds. Throws std::invalid_argument when none is valid.
std::vector<SymmetricPairSpec> enumerate_pairs(RootType t, int rank);
SymmetricPairSpec make_pair(RootType t, int rank, int p_index);
SymmetricPairSpec pair_from_key(const std::string& key);

int center_order(const SymmetricPairSpec& spec);
// Recomputes m as the least m with m * omega_p^vee in the coroot lattice.
int center_order_from_lattice(RootType t, int rank, int p_index);
std::pair<KWeight, KWeight> p_module_weights(const SymmetricPairSpec& spec);
// -w0 on a weight of K^ss (componentwise).
LatticeVector dual_weight(const std::vector<Component>& comps, const LatticeVector& w);

}  // namespace hermorb
