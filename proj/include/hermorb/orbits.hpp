#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hermorb/hermitian.hpp"
#include "hermorb/linalg.hpp"

namespace hermorb {

struct SignedPart {
    int part;
    int sign;  // +1 or -1
    int multiplicity;
    bool operator==(const SignedPart&) const = default;
};

std::string signed_partition_str(const std::vector<SignedPart>& sp);

struct OrbitRecord {
    SymmetricPairSpec pair;
    std::string case_id;  // "1.1" ... "5.4"
    int r = -1;           // -1 when the case has no such parameter
    int s = -1;
    std::string variant;  // "I", "II" or empty
    std::vector<SignedPart> signed_partition;

    std::string params_str() const;
    std::string id() const;  // "<pair-key>/<case>/<params>[/I|II]"
};

// Defining representation of g with its involution and the chosen Borel of k.
struct Realization {
    Family family;
    int n = 0;  // rank parameter of the family (p+q-1 for SL)
    int p = 0, q = 0;
    std::size_t dim = 0;
    std::vector<int> grading;  // J = diag(grading), theta = Ad(J)
    QMatrix form;              // Gram matrix of the invariant form, empty for SL
    bool form_symmetric = true;
    QMatrix center;            // omega_p^vee: acts by +1 on p1, -1 on p2
    std::vector<QMatrix> k_basis;
    std::vector<QMatrix> b_basis;
    std::vector<QMatrix> nminus_basis;
    std::vector<QMatrix> p_basis;
    int jordan_factor = 1;     // complex Jordan blocks per signed-partition row
    std::string description;

    bool in_g(const QMatrix& x) const;
    bool in_k(const QMatrix& x) const;
    bool in_p(const QMatrix& x) const;
};

std::shared_ptr<const Realization> realization_for(const SymmetricPairSpec& pair);

struct MatrixTriple {
    QMatrix h, e, f;
    std::shared_ptr<const Realization> real;
};

struct TripleReport {
    bool sl2_ok, h_in_k, e_in_p, f_in_p;
    bool all() const { return sl2_ok && h_in_k && e_in_p && f_in_p; }
};

struct CentralizerDims {
    int dim_K_e;
    int dim_Ke;
};

struct SphericityReport {
    bool spherical;
    int dim_Ke;
    int b_orbit_dim_generic;  // best dim(b.x) over sampled x in Ke (certified lower bound)
    int b_orbit_dim_at_rep;   // dim(b.e) at the representative itself, exact
    int trials;
};

struct BiconeReport {
    bool h_weight_on_e_is_2;
    int chi_charge_p1, chi_charge_p2;
    bool e1_nonzero, e2_nonzero;
    bool both_components_nonzero() const { return e1_nonzero && e2_nonzero; }
    bool charges_ok;  // [Z,e1] = e1 and [Z,e2] = -e2
};

// All catalogued orbits for the pair with r, s <= max_params.
std::vector<OrbitRecord> list_orbits(const SymmetricPairSpec& pair, int max_params);
OrbitRecord make_orbit(const SymmetricPairSpec& pair, const std::string& case_id, int r = -1, int s = -1,
                       const std::string& variant = "");
OrbitRecord orbit_from_id(const std::string& id);

MatrixTriple build_triple(const OrbitRecord& orbit);
TripleReport verify_triple(const MatrixTriple& t);
std::map<int, int> adh_grading(const MatrixTriple& t);
CentralizerDims centralizer_dim(const MatrixTriple& t);
CentralizerDims centralizer_dim(const Realization& real, const QMatrix& e);
SphericityReport is_spherical(const MatrixTriple& t);
SphericityReport is_spherical(const Realization& real, const QMatrix& e);
int p_height(const MatrixTriple& t);
int p_height(const Realization& real, const QMatrix& e);
BiconeReport bicone_witness(const MatrixTriple& t);

// Jordan type of a nilpotent matrix: part size -> number of blocks.
std::map<int, int> jordan_type(const QMatrix& e);
// For each part size k: (#blocks whose top vector lies in the +1 eigenspace
// of the grading, #blocks with top vector in the -1 eigenspace).
std::map<int, std::pair<int, int>> signed_jordan_type(const MatrixTriple& t);
// Jordan type expected from the signed partition in the defining representation.
std::map<int, int> expected_jordan_type(const OrbitRecord& orbit);
// Top-vector sign counts predicted by the signed partition. Parts whose sign
// is not an invariant for the real form (even parts for SO(p,q), odd parts for
// Sp(2n,R) and SO*(2n)) split evenly between the two eigenspaces.
std::map<int, std::pair<int, int>> expected_signed_jordan_type(const OrbitRecord& orbit);

bool expected_height_three(const OrbitRecord& orbit);

}  // namespace hermorb
