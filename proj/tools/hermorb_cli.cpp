#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "hermorb/report.hpp"
#include "hermorb/version.hpp"

namespace {

struct Options {
    std::string format = "json";
    std::string out;
    int max_degree = 4;
    int max_params = 8;
    int max_entry = 4;
    int max_rank = 8;
    hermorb::CaseParams params;
};

int emit(const hermorb::Report& rep, const Options& opt) {
    std::string text = opt.format == "tsv" ? rep.to_tsv() : rep.to_json().dump(2) + "\n";
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << opt.out << "\n";
            return 2;
        }
        f << text;
    }
    return rep.ok ? 0 : 1;
}

void add_case_params(CLI::App* cmd, Options& opt) {
    cmd->add_option("--p", opt.params.p, "p (size of the first block)");
    cmd->add_option("--q", opt.params.q, "q (size of the second block)");
    cmd->add_option("--r", opt.params.r, "parameter r");
    cmd->add_option("--s", opt.params.s, "parameter s");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spherical nilpotent orbits of Hermitian symmetric pairs: verification reports"};
    app.set_version_flag("--version", std::string(hermorb::kVersion));
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    app.add_option("--out", opt.out, "write the report to this file instead of stdout");

    std::string g_type, pair_key, orbit_id, case_id;
    int rank = 0;

    auto* pairs = app.add_subcommand("pairs", "list Hermitian pairs of a simple type and rank");
    pairs->add_option("type", g_type, "A, B, C or D")->required();
    pairs->add_option("rank", rank, "rank")->required();

    auto* orbits = app.add_subcommand("orbits", "orbit representatives of a pair with all checks");
    orbits->add_option("pair", pair_key, "pair key, e.g. A:3:p=2")->required();
    orbits->add_option("--max-params,--max", opt.max_params, "bound on r and s")->capture_default_str();

    auto* triple = app.add_subcommand("triple", "matrices and checks for one orbit");
    triple->add_option("orbit", orbit_id, "orbit id, e.g. A:5:p=3/1.6/r=1,s=0")->required();

    auto* semigroup = app.add_subcommand("semigroup", "weight-semigroup generators against the closed forms");
    semigroup->add_option("case", case_id, "1.4, 1.5, 1.6 or 1.7")->required();
    semigroup->add_option("--max-degree", opt.max_degree, "bound on n1+n2")->capture_default_str();
    add_case_params(semigroup, opt);

    auto* normality = app.add_subcommand("normality", "minuscule test of the designated colors");
    normality->add_option("case", case_id, "1.4, 1.5, 1.6, 1.7 or all")->required();
    normality->add_option("--max-rank", opt.max_rank, "ambient rank bound for 'all'")->capture_default_str();
    add_case_params(normality, opt);

    auto* cg = app.add_subcommand("cg-verify", "Gamma(m).Gamma(n) = Gamma(m+n) for entries <= max-entry");
    cg->add_option("max_entry", opt.max_entry, "entry bound");
    cg->add_option("--max-entry", opt.max_entry, "entry bound")->capture_default_str();

    auto* all = app.add_subcommand("report-all", "every suite in one report");
    all->add_option("--max-params", opt.max_params)->capture_default_str();
    all->add_option("--max-degree", opt.max_degree)->capture_default_str();
    all->add_option("--max-entry", opt.max_entry)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        using namespace hermorb;
        if (*pairs) return emit(cmd_pairs(g_type, rank), opt);
        if (*orbits) return emit(cmd_orbits(pair_key, opt.max_params), opt);
        if (*triple) return emit(cmd_triple(orbit_id), opt);
        if (*semigroup) return emit(cmd_semigroup(case_id, opt.params, opt.max_degree), opt);
        if (*normality) {
            if (case_id == "all") return emit(cmd_normality_all(opt.max_rank), opt);
            return emit(cmd_normality(case_id, opt.params), opt);
        }
        if (*cg) {
            if (opt.max_entry < 0) throw std::invalid_argument("max_entry must be nonnegative");
            return emit(cmd_cg_verify(opt.max_entry), opt);
        }
        if (*all) return emit(cmd_report_all(opt.max_params, opt.max_degree, opt.max_entry), opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
