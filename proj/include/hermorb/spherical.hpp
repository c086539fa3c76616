#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermorb/rootlat.hpp"

namespace hermorb {

struct SphericalSystem {
    std::string id;
    RootSystem ambient{std::vector<Component>{}};
    std::optional<std::vector<int>> s_p;  // 1-based simple-root indices, when known
    std::vector<LatticeVector> sigma;     // SimpleRoots basis of the ambient
    std::vector<std::string> sigma_names;
    std::vector<std::string> colors;
    IntMat sigma_in_colors;               // one row per spherical root
    std::optional<IntVec> designated1, designated2;
    std::vector<IntVec> color_weights;    // FundWeights coords per color; empty when unknown

    std::size_t n_colors() const { return colors.size(); }
    std::size_t n_sigma() const { return sigma.size(); }
    // Throws std::logic_error if an invariant fails.
    void validate() const;
    // Color vector of an element of Z Sigma given by sigma-coordinates.
    IntVec to_colors(const IntVec& sigma_coords) const;
};

SphericalSystem system_ax111();
SphericalSystem system_case_1_4(int p);
SphericalSystem system_case_1_5(int q);
SphericalSystem system_case_1_6(int p, int q, int r, int s);
SphericalSystem system_case_1_7(int p, int q, int r, int s);
SphericalSystem system_ay_a_ay(int r, int t, int s);

// Quotient by a set of colors (0-based indices). Only the empty set and the
// catalogued Delta_1 u Delta_2 of a^y(r,r)+a(t)+a^y(s,s) are supported.
SphericalSystem quotient_by_colors(const SphericalSystem& sys, const std::vector<int>& colors);
std::vector<int> ay_a_ay_distinguished(int r, int t, int s);

// Parameters of the case-1.6 combinatorics used by the closed forms.
struct Case16Layout {
    int p, q, r, s;
    bool boundary;  // r+s = q-1, no tau
    bool mirrored;  // system is 1.7, sides exchanged
    // Color vector of tilde D^k_h (k = 1,2).
    IntVec tilde(int k, int h) const;
    std::vector<std::vector<int>> column;  // column[k-1][h] -> color index or -1
    std::size_t n_colors;
    int rk(int k) const { return k == 1 ? r : s; }
    // Coefficients on D^k_0..D^k_{2r_k+3} (index 0 unused) of sigma^k_j, or of
    // tau when j = 0, before dropping and identifying columns.
    std::vector<std::int64_t> virtual_row(int k, int j) const;
    IntVec map_row(int k, const std::vector<std::int64_t>& virt) const;
};
Case16Layout case_1_6_layout(int p, int q, int r, int s);

}  // namespace hermorb
