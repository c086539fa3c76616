#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermorb/spherical.hpp"

namespace hermorb {

using ColorVector = IntVec;

struct SemigroupTriple {
    int n1 = 0, n2 = 0;
    ColorVector E;
    IntVec sigma_coords;  // n1 D_p1 + n2 D_p2 - E in the basis Sigma
    bool operator==(const SemigroupTriple& o) const { return n1 == o.n1 && n2 == o.n2 && E == o.E; }
    bool operator<(const SemigroupTriple& o) const;
};

// Coordinates of v in the basis Sigma when v lies in Z Sigma.
std::optional<IntVec> sigma_coordinates(const SphericalSystem& sys, const ColorVector& v);
bool leq_sigma(const SphericalSystem& sys, const ColorVector& D, const ColorVector& E);

// All a in N^Sigma with E0 - sum a_i sigma_i >= 0, lexicographically sorted.
std::vector<IntVec> sigma_elements_below(const SphericalSystem& sys, const ColorVector& E0);

std::optional<ColorVector> dominated_element(const SphericalSystem& sys, const ColorVector& E);
bool is_minuscule(const SphericalSystem& sys, const ColorVector& E);

// gamma (sigma-coordinates, each <= bound, nonzero) realized as a cover D <_Sigma D+gamma.
std::vector<IntVec> covering_differences(const SphericalSystem& sys, int bound);

struct PositivePart {
    ColorVector plus;
    std::int64_t height;  // height of the input vector
};
PositivePart positive_part_height(const ColorVector& E);
std::int64_t height(const ColorVector& E);

std::vector<ColorVector> sections_decomposition(const SphericalSystem& sys, const ColorVector& E);

std::vector<SemigroupTriple> gamma_semigroup_members(const SphericalSystem& sys, int max_degree);
std::vector<SemigroupTriple> gamma_semigroup(const SphericalSystem& sys, int max_degree);
bool in_gamma_sigma(const SphericalSystem& sys, const IntVec& sigma_coords);
std::vector<IntVec> gamma_sigma_semigroup(const SphericalSystem& sys, int bound);
// Nonnegative integer combination of gens equal to target, if any.
std::optional<IntVec> nonneg_combination(const std::vector<IntVec>& gens, const IntVec& target);

struct CaseParams {
    int p = 0, q = 0, r = -1, s = -1;
};
SphericalSystem system_for_case(const std::string& case_id, const CaseParams& params);
std::vector<SemigroupTriple> closed_form_generators(const std::string& case_id, const CaseParams& params);

struct WitnessTerm {
    std::string label;  // e.g. "gamma^1_2", "gamma_{1,2}", "sigma_1+sigma_3"
    std::int64_t coeff;
    IntVec generator;   // sigma-coordinates
};
struct Witness {
    std::vector<WitnessTerm> terms;
    IntVec recombined;
    // Boundary regime of 1.6/1.7 only: coefficients -c^1, -c^2 sit on gamma^1_{r1+1}, gamma^2_{r2+1}.
    std::optional<std::int64_t> c1, c2, b;
};
Witness witness_decomposition(const std::string& case_id, const CaseParams& params, const IntVec& gamma);

struct NormalityWitness {
    int which;  // 1 or 2
    bool present;
    bool minuscule;
    std::optional<ColorVector> dominated;  // F <_Sigma D_pi, F != D_pi
};
struct NormalityResult {
    bool normal;
    std::vector<NormalityWitness> witnesses;
};
NormalityResult normality_check(const SphericalSystem& sys);

struct WeightedTriple {
    SemigroupTriple triple;
    IntVec weight;
};
std::vector<WeightedTriple> weight_semigroup(const SphericalSystem& sys, const IntVec& lambda1, const IntVec& lambda2,
                                             const std::vector<IntVec>& color_weights, int max_degree);

}  // namespace hermorb
