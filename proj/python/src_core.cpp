#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hermorb/cg.hpp"
#include "hermorb/report.hpp"
#include "hermorb/semigroup.hpp"
#include "hermorb/version.hpp"

namespace py = pybind11;
using namespace hermorb;

namespace {

CaseParams params(int p, int q, int r, int s) { return CaseParams{p, q, r, s}; }

std::string dump(const Report& rep) { return rep.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.attr("__version__") = kVersion;

    m.def("pairs_json", [](const std::string& type, int rank) { return dump(cmd_pairs(type, rank)); });
    m.def("orbits_json", [](const std::string& pair, int max_params) { return dump(cmd_orbits(pair, max_params)); });
    m.def("triple_json", [](const std::string& orbit) { return dump(cmd_triple(orbit)); });
    m.def("semigroup_json", [](const std::string& c, int p, int q, int r, int s, int max_degree) {
        return dump(cmd_semigroup(c, params(p, q, r, s), max_degree));
    });
    m.def("normality_json", [](const std::string& c, int p, int q, int r, int s) {
        return dump(cmd_normality(c, params(p, q, r, s)));
    });
    m.def("normality_all_json", [](int max_rank) { return dump(cmd_normality_all(max_rank)); });
    m.def("cg_verify_json", [](int max_entry) { return dump(cmd_cg_verify(max_entry)); });
    m.def("report_all_json", [](int max_params, int max_degree, int max_entry) {
        return dump(cmd_report_all(max_params, max_degree, max_entry));
    });

    m.def("system_json", [](const std::string& c, int p, int q, int r, int s) {
        return system_to_json(system_for_case(c, params(p, q, r, s))).dump();
    });
    m.def("leq_sigma", [](const std::string& c, int p, int q, int r, int s, const IntVec& D, const IntVec& E) {
        return leq_sigma(system_for_case(c, params(p, q, r, s)), D, E);
    });
    m.def("is_minuscule", [](const std::string& c, int p, int q, int r, int s, const IntVec& E) {
        return is_minuscule(system_for_case(c, params(p, q, r, s)), E);
    });

    m.def("in_tensor_semigroup", py::overload_cast<int, int, int>(&in_tensor_semigroup));
    m.def("product_contains", &product_contains);
    m.def("gamma_module", &gamma_module);
    m.def("verify_gamma_product", [](const TTriple& a, const TTriple& b) {
        auto r = verify_gamma_product(a, b);
        return py::make_tuple(r.ok, r.missing);
    });
}
