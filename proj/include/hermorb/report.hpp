#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hermorb/cg.hpp"
#include "hermorb/orbits.hpp"
#include "hermorb/semigroup.hpp"
#include "hermorb/spherical.hpp"

namespace hermorb {

using json = nlohmann::ordered_json;

// A command result: deterministic data plus a verdict. The header (tool,
// version, command, parameters) is kept apart from the data body.
struct Report {
    json header;
    json data;
    bool ok = true;
    std::vector<std::string> tsv_columns;
    std::vector<std::vector<std::string>> tsv_rows;

    json to_json() const;
    std::string to_tsv() const;
};

json system_to_json(const SphericalSystem& sys);
json triple_to_json(const SemigroupTriple& t);
json matrix_to_json(const QMatrix& m);  // {"den": d, "num": [[...]]}
json ttriple_to_json(const TTriple& t);

std::string generators_str(const std::vector<SemigroupTriple>& gens);

// Every Hermitian pair of a classical simple type with rank <= max_rank.
std::vector<SymmetricPairSpec> all_pairs(int max_rank);
// Encoded systems that carry designated colors, with ambient rank <= max_rank.
std::vector<std::pair<std::string, CaseParams>> designated_systems(int max_rank);
// Parameter sweep of the 1.6/1.7 closed forms: r+s <= max_rs, both regimes, minimal (p, q).
std::vector<std::pair<std::string, CaseParams>> closed_form_sweep(int max_rs);

Report cmd_pairs(const std::string& g_type, int rank);
Report cmd_orbits(const std::string& pair_key, int max_params);
Report cmd_triple(const std::string& orbit_id);
Report cmd_semigroup(const std::string& case_id, const CaseParams& params, int max_degree);
Report cmd_normality(const std::string& case_id, const CaseParams& params);
Report cmd_normality_all(int max_rank);
Report cmd_cg_verify(int max_entry);
Report cmd_report_all(int max_params, int max_degree, int max_entry);

}  // namespace hermorb
