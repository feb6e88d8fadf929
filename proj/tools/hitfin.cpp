#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hit/catalog.hpp"
#include "hit/chartab.hpp"
#include "hit/cover.hpp"
#include "hit/criteria.hpp"
#include "hit/error.hpp"
#include "hit/group.hpp"
#include "hit/json_io.hpp"
#include "hit/polyform.hpp"
#include "hit/scanner.hpp"
#include "hit/verify.hpp"

using namespace hit;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitVerification = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json partition_json(const Partition& p) {
    json a = json::array();
    for (const auto& b : p) a.push_back(b);
    return a;
}

int analyze_group(const std::string& input, const std::string& catalog_id, bool with_table) {
    const PermGroup g = catalog_id.empty() ? group_from_json(parse_json(read_input(input), input))
                                           : named_group(catalog_id);
    json out{{"degree", g.degree()}, {"order", g.order()}};
    const bool transitive = is_transitive(g);
    out["transitive"] = transitive;
    if (transitive) {
        out["two_transitive"] = is_2transitive(g);
        out["primitive"] = is_primitive(g);
        json systems = json::array();
        for (const auto& s : block_systems(g)) systems.push_back(partition_json(s));
        out["block_systems"] = systems;
    } else {
        out["orbits"] = partition_json(orbits(g));
    }
    json factors = json::array();
    for (const auto& f : composition_factors(g)) factors.push_back(f.name);
    out["composition_factors"] = factors;
    out["has_index2_subgroup"] = has_index2_subgroup(g);
    if (with_table) out["character_table"] = table_to_json(character_table(g));
    std::cout << out.dump(2) << '\n';
    return 0;
}

int genus_cmd(const std::string& branch_file, int zm, const std::string& action, const std::string& compare) {
    if (branch_file.empty() == (zm == 0)) throw InputError("give exactly one of --branch and --zm");
    const BranchCycleDescription b =
        zm ? zm_minus_z(zm) : branch_from_json(parse_json(read_input(branch_file), branch_file));
    const Action e = action_from_spec(action, b.degree());
    json out{{"degree", b.degree()}, {"action", action}};
    if (compare.empty()) {
        out["genus"] = rh_genus(b, e);
        out["places_above_infinity"] = b.infinity_index ? json(places_above_infinity(b, e).lengths) : json(nullptr);
    } else {
        const Action f = action_from_spec(compare, b.degree());
        const GenusComparison c = genus_compare(b, e, f);
        out["compare"] = compare;
        out["genus_e"] = c.g_e;
        out["genus_f"] = c.g_f;
        out["difference_is_character"] = to_string(c.difference.status);
        out["method"] = c.difference.method;
        json orb = json::array();
        for (const auto& o : c.orbit_comparisons)
            orb.push_back({{"index", o.index}, {"orbits_e", o.orbits_e}, {"orbits_f", o.orbits_f}});
        out["orbit_comparisons"] = orb;
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int verdict_cmd(const std::string& poly, const std::string& datum_file, const std::string& field,
                const std::string& ring, const std::string& format) {
    if (poly.empty() && datum_file.empty()) throw InputError("give --poly, --datum or both");
    std::optional<RamificationDatum> d;
    if (!datum_file.empty()) d = datum_from_json(parse_json(read_input(datum_file), datum_file));
    Verdict v;
    if (!poly.empty()) {
        v = verdict_for_polynomial(parse_bivariate(poly), parse_field_flag(field), parse_ring_flag(ring), d);
    } else {
        v = verdict(*d);
    }
    if (format == "text")
        std::cout << v.report();
    else
        std::cout << verdict_to_json(v).dump(2) << '\n';
    return 0;
}

int scan_cmd(const std::string& poly, long bound, unsigned threads, const std::string& format, bool with_verdict) {
    const RationalBivarPoly f = parse_bivariate(poly);
    ScanReport r = scan(f, bound, threads);
    std::optional<Reconciliation> rec;
    if (with_verdict) {
        const Verdict v = verdict_for_polynomial(f, FieldFlag::Q, RingFlag::Z);
        r.verdict = v.status;
        rec = reconcile(r, v);
    }
    if (format == "table") {
        std::cout << r.table();
        if (rec)
            for (const auto& n : rec->notes) std::cout << "note: " << n << '\n';
    } else {
        json out = scan_to_json(r);
        if (rec) out["reconciliation"] = {{"contradiction", rec->contradiction}, {"notes", rec->notes}};
        std::cout << out.dump(2) << '\n';
    }
    return 0;
}

int verify_cmd(const std::vector<std::string>& only, bool inject_fault) {
    const std::vector<CheckResult> results = verify_paper(only, inject_fault);
    std::size_t failed = 0;
    for (const auto& r : results) {
        failed += r.passed ? 0 : 1;
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(10) << r.group << std::setw(22)
                  << r.name << r.detail << '\n';
    }
    std::cout << results.size() - failed << " of " << results.size() << " checks passed\n";
    return failed == 0 ? 0 : kExitVerification;
}

int catalog_cmd(const std::string& id) {
    if (!id.empty()) {
        const PermGroup g = named_group(id);
        json out = group_to_json(g);
        out["id"] = GroupId::parse(id).to_string();
        out["order"] = g.order();
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    json list = json::array();
    for (const auto& gid : catalog_ids())
        list.push_back({{"id", gid.to_string()}, {"degree", gid.degree}, {"order", known_order(gid)}});
    std::cout << list.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finiteness of reducible specializations: group analysis, genus, verdicts and scans"};
    app.set_config("--config", "", "TOML configuration file");
    app.require_subcommand(1);
    std::size_t group_cap = limits().group_cap;
    std::size_t table_cap = limits().table_cap;
    unsigned threads = 0;
    app.add_option("--group-cap", group_cap, "Largest group to enumerate")->capture_default_str();
    app.add_option("--table-cap", table_cap, "Largest group for character tables")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads for sweeps and scans (0 = all cores)");

    std::string input = "-", catalog_id;
    bool with_table = false;
    auto* analyze = app.add_subcommand("analyze-group", "Structure report for a permutation group");
    analyze->add_option("input", input, "Group JSON file, or - for stdin");
    analyze->add_option("--catalog", catalog_id, "Catalog id instead of a file, e.g. M11");
    analyze->add_flag("--table", with_table, "Include the character table");

    std::string branch_file, action = "natural", compare;
    int zm = 0;
    auto* genus = app.add_subcommand("genus", "Riemann-Hurwitz genus of branch data");
    genus->add_option("--branch", branch_file, "Branch data JSON file");
    genus->add_option("--zm", zm, "Use the branch data of Z^m - Z");
    genus->add_option("--action", action, "natural, subsets:k or power:p")->capture_default_str();
    genus->add_option("--compare", compare, "Second action for the genus comparison");

    std::string poly, datum_file, field = "Q", ring = "Z", format = "json";
    auto* verd = app.add_subcommand("verdict", "Finiteness verdict for a polynomial and/or datum");
    verd->add_option("--poly", poly, "Polynomial in t and X");
    verd->add_option("--datum", datum_file, "Ramification datum JSON file");
    verd->add_option("--field", field, "Q or general")->capture_default_str();
    verd->add_option("--ring", ring, "Z or general")->capture_default_str();
    verd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    long bound = 100;
    bool with_verdict = false;
    std::string scan_format = "json";
    auto* sc = app.add_subcommand("scan", "Reducible integer specializations in [-B, B]");
    sc->add_option("--poly", poly, "Polynomial in t and X")->required();
    sc->add_option("--bound", bound, "Bound B")->capture_default_str();
    sc->add_option("--format", scan_format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sc->add_flag("--reconcile", with_verdict, "Compare with the shape verdict");

    std::vector<std::string> only;
    bool inject_fault = false;
    auto* vp = app.add_subcommand("verify-paper", "Check the published identities and theorems");
    vp->add_option("--only", only, "Restrict to these items or groups");
    vp->add_flag("--inject-fault", inject_fault, "Perturb every identity to exercise the failure path");

    std::string cat_id;
    auto* cat = app.add_subcommand("catalog", "List catalog groups or print one");
    cat->add_option("id", cat_id, "Catalog id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        limits().group_cap = group_cap;
        limits().table_cap = table_cap;
        if (*analyze) return analyze_group(input, catalog_id, with_table);
        if (*genus) return genus_cmd(branch_file, zm, action, compare);
        if (*verd) return verdict_cmd(poly, datum_file, field, ring, format);
        if (*sc) return scan_cmd(poly, bound, threads, scan_format, with_verdict);
        if (*vp) return verify_cmd(only, inject_fault);
        if (*cat) return catalog_cmd(cat_id);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitInput;
}
