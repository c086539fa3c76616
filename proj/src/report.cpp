#include "hermorb/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hermorb/hermitian.hpp"
#include "hermorb/version.hpp"

namespace hermorb {

namespace {

json make_header(const std::string& command, json params) {
    json h;
    h["tool"] = "hermorb";
    h["version"] = kVersion;
    h["command"] = command;
    h["parameters"] = std::move(params);
    return h;
}

std::string vec_str(const IntVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

json params_json(const CaseParams& p) {
    json j;
    if (p.p > 0) j["p"] = p.p;
    if (p.q > 0) j["q"] = p.q;
    if (p.r >= 0) j["r"] = p.r;
    if (p.s >= 0) j["s"] = p.s;
    return j;
}

std::string case_label(const std::string& case_id, const CaseParams& p) {
    std::string s = case_id + "(";
    bool first = true;
    auto add = [&](const char* name, int v) {
        if (v < 0 || (v == 0 && (name[0] == 'p' || name[0] == 'q'))) return;
        s += (first ? "" : ",") + std::string(name) + "=" + std::to_string(v);
        first = false;
    };
    add("p", p.p);
    add("q", p.q);
    add("r", p.r);
    add("s", p.s);
    return s + ")";
}

std::string yes(bool b) { return b ? "true" : "false"; }


// Closed-form generators attached to an orbit row, when the case has an encoded system.
std::string orbit_generators(const OrbitRecord& o) {
    if (o.pair.family != Family::SLpq) return "-";
    CaseParams cp{o.pair.block_p(), o.pair.block_q(), o.r, o.s};
    try {
        return generators_str(closed_form_generators(o.case_id, cp));
    } catch (const std::invalid_argument&) {
        return "-";
    }
}

json orbit_row(const OrbitRecord& o, bool& ok) {
    json row;
    row["id"] = o.id();
    row["case"] = o.case_id;
    row["params"] = o.params_str();
    row["variant"] = o.variant;
    row["signed_partition"] = signed_partition_str(o.signed_partition);
    auto t = build_triple(o);
    auto tr = verify_triple(t);
    auto sph = is_spherical(t);
    auto cd = centralizer_dim(t);
    int ht = p_height(t);
    auto bc = bicone_witness(t);
    bool jordan_ok = jordan_type(t.e) == expected_jordan_type(o);
    bool signs_ok = signed_jordan_type(t) == expected_signed_jordan_type(o);
    bool ht_ok = (ht == 3) == expected_height_three(o);
    bool bicone_ok = bc.h_weight_on_e_is_2 && bc.charges_ok;
    row["sl2_ok"] = tr.sl2_ok;
    row["h_in_k"] = tr.h_in_k;
    row["e_in_p"] = tr.e_in_p;
    row["f_in_p"] = tr.f_in_p;
    row["spherical"] = sph.spherical;
    row["dim_Ke"] = cd.dim_Ke;
    row["dim_K_e"] = cd.dim_K_e;
    row["b_orbit_dim"] = sph.b_orbit_dim_generic;
    row["ht_p"] = ht;
    row["ht_p_expected_three"] = expected_height_three(o);
    row["bicone"] = {{"ok", bicone_ok},
                     {"e1_nonzero", bc.e1_nonzero},
                     {"e2_nonzero", bc.e2_nonzero},
                     {"chi_charge_p1", bc.chi_charge_p1},
                     {"chi_charge_p2", bc.chi_charge_p2}};
    row["jordan_ok"] = jordan_ok;
    row["signed_jordan_ok"] = signs_ok;
    ok = tr.all() && sph.spherical && jordan_ok && signs_ok && ht_ok && bicone_ok;
    row["ok"] = ok;
    return row;
}

std::vector<std::string> orbit_tsv(const OrbitRecord& o, const json& row) {
    std::string label = o.case_id + "/" + o.params_str() + (o.variant.empty() ? "" : "/" + o.variant);
    return {o.pair.key() + " " + label, row["signed_partition"].get<std::string>(),
            std::to_string(row["ht_p"].get<int>()), "-", orbit_generators(o)};
}

const std::vector<std::string> kTableColumns = {"case", "signed_partition", "ht_p", "codim", "generators"};

json semigroup_body(const SphericalSystem& sys, const std::string& case_id, const CaseParams& params, int max_degree,
                    bool& ok) {
    auto enumerated = gamma_semigroup(sys, max_degree);
    auto closed = closed_form_generators(case_id, params);
    int closed_max = 0;
    std::vector<SemigroupTriple> closed_trunc;
    for (const auto& t : closed) {
        closed_max = std::max(closed_max, t.n1 + t.n2);
        if (t.n1 + t.n2 <= max_degree) closed_trunc.push_back(t);
    }
    std::sort(closed_trunc.begin(), closed_trunc.end());
    bool match = enumerated == closed_trunc;
    auto norm = normality_check(sys);
    json j;
    j["system_id"] = sys.id;
    j["designated"] = {sys.designated1 ? json(*sys.designated1) : json(nullptr),
                       sys.designated2 ? json(*sys.designated2) : json(nullptr)};
    j["generators"] = json::array();
    for (const auto& t : enumerated) j["generators"].push_back(triple_to_json(t));
    j["max_degree"] = max_degree;
    j["normal"] = norm.normal;
    j["closed_form"] = json::array();
    for (const auto& t : closed) j["closed_form"].push_back(triple_to_json(t));
    j["closed_form_max_degree"] = closed_max;
    j["complete"] = max_degree >= closed_max;
    j["match"] = match;
    json gs = json::array();
    for (const auto& g : gamma_sigma_semigroup(sys, max_degree)) gs.push_back(g);
    j["gamma_sigma_generators"] = gs;
    j["system"] = system_to_json(sys);
    ok = match && norm.normal;
    return j;
}

json normality_body(const SphericalSystem& sys) {
    auto res = normality_check(sys);
    json j;
    j["system_id"] = sys.id;
    j["normal"] = res.normal;
    j["witnesses"] = json::array();
    for (const auto& w : res.witnesses) {
        json x;
        x["designated"] = w.which;
        x["present"] = w.present;
        x["minuscule"] = w.minuscule;
        x["dominated"] = w.dominated ? json(*w.dominated) : json(nullptr);
        j["witnesses"].push_back(x);
    }
    return j;
}

}  // namespace

std::vector<SymmetricPairSpec> all_pairs(int max_rank) {
    std::vector<SymmetricPairSpec> out;
    for (RootType t : {RootType::A, RootType::B, RootType::C, RootType::D})
        for (int n = min_rank(t); n <= max_rank; ++n) {
            try {
                for (auto& p : enumerate_pairs(t, n)) out.push_back(p);
            } catch (const std::invalid_argument&) {
            }
        }
    return out;
}

json Report::to_json() const {
    json j;
    j["header"] = header;
    j["ok"] = ok;
    j["data"] = data;
    return j;
}

std::string Report::to_tsv() const {
    std::ostringstream os;
    os << "# " << header["tool"].get<std::string>() << " " << header["version"].get<std::string>()
       << " command=" << header["command"].get<std::string>() << " parameters=" << header["parameters"].dump()
       << " ok=" << yes(ok) << "\n";
    for (std::size_t i = 0; i < tsv_columns.size(); ++i) os << (i ? "\t" : "") << tsv_columns[i];
    os << "\n";
    for (const auto& r : tsv_rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << r[i];
        os << "\n";
    }
    return os.str();
}

json system_to_json(const SphericalSystem& sys) {
    json j;
    j["id"] = sys.id;
    j["ambient"] = sys.ambient.str();
    j["s_p"] = sys.s_p ? json(*sys.s_p) : json(nullptr);
    j["sigma"] = json::array();
    for (const auto& s : sys.sigma) j["sigma"].push_back(s.coords());
    j["sigma_names"] = sys.sigma_names;
    j["colors"] = sys.colors;
    j["sigma_in_colors"] = sys.sigma_in_colors;
    j["designated"] = {sys.designated1 ? json(*sys.designated1) : json(nullptr),
                       sys.designated2 ? json(*sys.designated2) : json(nullptr)};
    return j;
}

json triple_to_json(const SemigroupTriple& t) {
    return {{"n1", t.n1}, {"n2", t.n2}, {"E", t.E}, {"sigma_coords", t.sigma_coords}};
}

json matrix_to_json(const QMatrix& m) {
    std::int64_t den = 1;
    for (const auto& x : m.data()) den = std::lcm(den, x.den());
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j) * Rational(den);
            r.push_back(v.num());
        }
        rows.push_back(r);
    }
    return {{"den", den}, {"num", rows}};
}

json ttriple_to_json(const TTriple& t) { return json::array({t[0], t[1], t[2]}); }

std::string generators_str(const std::vector<SemigroupTriple>& gens) {
    std::string s;
    for (std::size_t i = 0; i < gens.size(); ++i)
        s += (i ? " " : "") + std::string("(") + std::to_string(gens[i].n1) + "," + std::to_string(gens[i].n2) + "|" +
             vec_str(gens[i].E) + ")";
    return s.empty() ? "-" : s;
}

std::vector<std::pair<std::string, CaseParams>> designated_systems(int max_rank) {
    std::vector<std::pair<std::string, CaseParams>> out;
    for (int n = 4; n <= max_rank; ++n) out.push_back({"1.4", {n, 0, -1, -1}});
    for (int n = 4; n <= max_rank; ++n) out.push_back({"1.5", {0, n, -1, -1}});
    for (const char* c : {"1.6", "1.7"})
        for (int p = 1; p <= max_rank; ++p)
            for (int q = 1; p + q - 1 <= max_rank; ++q)
                for (int r = 0; r <= max_rank; ++r)
                    for (int s = 0; r + s <= max_rank; ++s) {
                        CaseParams cp{p, q, r, s};
                        try {
                            system_for_case(c, cp);
                        } catch (const std::invalid_argument&) {
                            continue;
                        }
                        out.push_back({c, cp});
                    }
    return out;
}

std::vector<std::pair<std::string, CaseParams>> closed_form_sweep(int max_rs) {
    std::vector<std::pair<std::string, CaseParams>> out;
    for (int n = 0; n <= max_rs; ++n)
        for (int r = 0; r <= n; ++r) {
            int s = n - r;
            out.push_back({"1.6", {n + 2, n + 2, r, s}});
            out.push_back({"1.6", {n + 2, n + 1, r, s}});
            out.push_back({"1.7", {n + 2, n + 2, r, s}});
            out.push_back({"1.7", {n + 1, n + 2, r, s}});
        }
    return out;
}

Report cmd_pairs(const std::string& g_type, int rank) {
    Report rep;
    rep.header = make_header("pairs", {{"type", g_type}, {"rank", rank}});
    RootType t = parse_root_type(g_type);
    check_rank(t, rank);
    rep.data["pairs"] = json::array();
    rep.tsv_columns = {"key", "group", "m", "p1_weight", "p2_weight"};
    for (const auto& p : enumerate_pairs(t, rank)) {
        auto [w1, w2] = p_module_weights(p);
        int m_lat = center_order_from_lattice(t, rank, p.p_index);
        json row;
        row["key"] = p.key();
        row["group"] = p.group_name();
        row["p_index"] = p.p_index;
        row["family"] = family_name(p.family);
        json levi = json::array();
        for (const auto& c : p.k_levi) levi.push_back(std::string(1, type_letter(c.type)) + std::to_string(c.rank));
        row["k_levi"] = levi;
        row["m"] = p.m;
        row["m_from_lattice"] = m_lat;
        row["p1"] = {{"weight", w1.weight.coords()}, {"charge", w1.charge}};
        row["p2"] = {{"weight", w2.weight.coords()}, {"charge", w2.charge}};
        rep.ok = rep.ok && p.m == m_lat;
        rep.data["pairs"].push_back(row);
        rep.tsv_rows.push_back({p.key(), p.group_name(), std::to_string(p.m), vec_str(w1.weight.coords()),
                                vec_str(w2.weight.coords())});
    }
    return rep;
}

Report cmd_orbits(const std::string& pair_key, int max_params) {
    Report rep;
    rep.header = make_header("orbits", {{"pair", pair_key}, {"max_params", max_params}});
    auto pair = pair_from_key(pair_key);
    rep.data["pair"] = pair.key();
    rep.data["group"] = pair.group_name();
    rep.data["orbits"] = json::array();
    rep.tsv_columns = kTableColumns;
    for (const auto& o : list_orbits(pair, max_params)) {
        bool ok = true;
        json row = orbit_row(o, ok);
        rep.ok = rep.ok && ok;
        rep.tsv_rows.push_back(orbit_tsv(o, row));
        rep.data["orbits"].push_back(std::move(row));
    }
    return rep;
}

Report cmd_triple(const std::string& orbit_id) {
    Report rep;
    rep.header = make_header("triple", {{"orbit", orbit_id}});
    auto o = orbit_from_id(orbit_id);
    auto t = build_triple(o);
    bool ok = true;
    json row = orbit_row(o, ok);
    rep.ok = ok;
    rep.data["orbit"] = row;
    rep.data["realization"] = t.real->description;
    rep.data["h"] = matrix_to_json(t.h);
    rep.data["e"] = matrix_to_json(t.e);
    rep.data["f"] = matrix_to_json(t.f);
    json grading = json::object();
    for (auto [deg, dim] : adh_grading(t)) grading[std::to_string(deg)] = dim;
    rep.data["adh_grading"] = grading;
    rep.tsv_columns = kTableColumns;
    rep.tsv_rows.push_back(orbit_tsv(o, row));
    return rep;
}

Report cmd_semigroup(const std::string& case_id, const CaseParams& params, int max_degree) {
    Report rep;
    json hp = params_json(params);
    hp["case"] = case_id;
    hp["max_degree"] = max_degree;
    rep.header = make_header("semigroup", hp);
    if (max_degree < 1) throw std::invalid_argument("max_degree must be positive");
    auto sys = system_for_case(case_id, params);
    bool ok = true;
    rep.data = semigroup_body(sys, case_id, params, max_degree, ok);
    rep.ok = ok;
    rep.tsv_columns = kTableColumns;
    auto enumerated = gamma_semigroup(sys, max_degree);
    rep.tsv_rows.push_back({case_label(case_id, params), "-", "-", "-", generators_str(enumerated)});
    return rep;
}

Report cmd_normality(const std::string& case_id, const CaseParams& params) {
    Report rep;
    json hp = params_json(params);
    hp["case"] = case_id;
    rep.header = make_header("normality", hp);
    auto sys = system_for_case(case_id, params);
    rep.data = normality_body(sys);
    rep.ok = rep.data["normal"].get<bool>();
    rep.tsv_columns = {"system", "normal"};
    rep.tsv_rows.push_back({sys.id, yes(rep.ok)});
    return rep;
}

Report cmd_normality_all(int max_rank) {
    Report rep;
    rep.header = make_header("normality", {{"case", "all"}, {"max_rank", max_rank}});
    rep.data["systems"] = json::array();
    rep.tsv_columns = {"system", "normal"};
    for (const auto& [c, cp] : designated_systems(max_rank)) {
        auto sys = system_for_case(c, cp);
        json body = normality_body(sys);
        bool normal = body["normal"].get<bool>();
        rep.ok = rep.ok && normal;
        rep.tsv_rows.push_back({sys.id, yes(normal)});
        rep.data["systems"].push_back(std::move(body));
    }
    return rep;
}

Report cmd_cg_verify(int max_entry) {
    Report rep;
    rep.header = make_header("cg-verify", {{"max_entry", max_entry}});
    auto r = cg_verify(max_entry);
    rep.data["pairs_checked"] = r.pairs_checked;
    rep.data["surjective"] = r.ok;
    json fails = json::array();
    for (const auto& [m, n] : r.failures) fails.push_back({ttriple_to_json(m), ttriple_to_json(n)});
    rep.data["failures"] = fails;
    json degen = json::array();
    rep.tsv_columns = {"k", "m", "n"};
    for (const auto& d : r.degenerate) {
        degen.push_back({{"k", ttriple_to_json(d.k)}, {"m", ttriple_to_json(d.m)}, {"n", ttriple_to_json(d.n)}});
        rep.tsv_rows.push_back({ttriple_str(d.k), ttriple_str(d.m), ttriple_str(d.n)});
    }
    rep.data["degenerate"] = degen;
    rep.ok = r.ok;
    if (max_entry >= 2) {
        // The (2,2,2) summand of Gamma((2,2,4)) is reached through another pair.
        TTriple k{2, 2, 2}, m{1, 1, 2};
        auto g = verify_gamma_product(m, m);
        bool naive = product_contains(k, m, m);
        json example;
        example["naive_pair_contains"] = naive;
        example["covered"] = g.cover.count(k) > 0;
        if (g.cover.count(k))
            example["cover"] = {ttriple_to_json(g.cover.at(k).first), ttriple_to_json(g.cover.at(k).second)};
        rep.data["degenerate_example"] = example;
        rep.ok = rep.ok && !naive && g.cover.count(k) > 0;
    }
    return rep;
}

Report cmd_report_all(int max_params, int max_degree, int max_entry) {
    Report rep;
    const int max_rank = 8;
    rep.header = make_header("report-all", {{"max_rank", max_rank},
                                            {"max_params", max_params},
                                            {"max_degree", max_degree},
                                            {"max_entry", max_entry}});
    rep.tsv_columns = kTableColumns;

    json orbits = json::array();
    std::size_t n_orbits = 0, n_orbits_ok = 0;
    for (const auto& pair : all_pairs(max_rank)) {
        Report r = cmd_orbits(pair.key(), max_params);
        n_orbits += r.data["orbits"].size();
        for (const auto& o : r.data["orbits"]) n_orbits_ok += o["ok"].get<bool>();
        rep.ok = rep.ok && r.ok;
        for (auto& row : r.tsv_rows) rep.tsv_rows.push_back(std::move(row));
        orbits.push_back({{"pair", pair.key()}, {"ok", r.ok}, {"orbits", r.data["orbits"]}});
    }
    rep.data["orbits"] = orbits;

    json sg = json::array();
    std::vector<std::pair<std::string, CaseParams>> cases = {{"1.4", {5, 0, -1, -1}}};
    for (auto& c : closed_form_sweep(3)) cases.push_back(c);
    for (const auto& [c, cp] : cases) {
        int deg = c == "1.4" ? max_degree : std::max(max_degree, cp.r + cp.s + 3);
        Report r = cmd_semigroup(c, cp, deg);
        rep.ok = rep.ok && r.ok;
        for (auto& row : r.tsv_rows) rep.tsv_rows.push_back(std::move(row));
        json entry = r.data;
        entry.erase("system");
        sg.push_back({{"case", c}, {"parameters", params_json(cp)}, {"result", entry}, {"ok", r.ok}});
    }
    rep.data["semigroups"] = sg;

    Report norm = cmd_normality_all(max_rank);
    rep.ok = rep.ok && norm.ok;
    rep.data["normality"] = {{"ok", norm.ok}, {"systems", norm.data["systems"].size()}};

    Report cg = cmd_cg_verify(max_entry);
    rep.ok = rep.ok && cg.ok;
    rep.data["cg"] = {{"ok", cg.ok},
                      {"pairs_checked", cg.data["pairs_checked"]},
                      {"degenerate_count", cg.data["degenerate"].size()}};
    rep.data["summary"] = {{"orbits", n_orbits}, {"orbits_ok", n_orbits_ok}, {"semigroup_cases", cases.size()}};
    return rep;
}

}  // namespace hermorb
