#include "hit/json_io.hpp"

#include <algorithm>
#include <set>

#include "hit/catalog.hpp"
#include "hit/error.hpp"

namespace hit {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
    throw InputError((path.empty() ? std::string("/") : path) + ": " + msg);
}

void require_object(const json& j, const std::string& path, const std::set<std::string>& allowed,
                    const std::set<std::string>& required) {
    if (!j.is_object()) schema_error(path, "expected an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) schema_error(path, "unknown key \"" + k + "\"");
    for (const auto& k : required)
        if (!j.contains(k)) schema_error(path, "missing key \"" + k + "\"");
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_error(path, "expected an integer");
    return j.get<int>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) schema_error(path, "expected a string");
    return j.get<std::string>();
}

json cycles_json(const Permutation& p) { return p.is_identity() ? json("()") : json(p.to_string()); }

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line and column.
        const std::size_t pos = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
        const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n'));
        const std::size_t nl = text.rfind('\n', pos == 0 ? 0 : pos - 1);
        const std::size_t col = nl == std::string::npos || pos == 0 ? pos + 1 : pos - nl;
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
    }
}

Permutation perm_from_json(const json& j, int degree, const std::string& path) {
    if (j.is_string()) {
        try {
            return Permutation::parse(j.get<std::string>(), degree);
        } catch (const InputError& e) {
            schema_error(path, e.what());
        }
    }
    if (!j.is_array()) schema_error(path, "expected an image array or a cycle string");
    std::vector<int> img;
    for (std::size_t i = 0; i < j.size(); ++i) img.push_back(get_int(j[i], path + "/" + std::to_string(i)));
    if (static_cast<int>(img.size()) != degree)
        schema_error(path, "image array has length " + std::to_string(img.size()) + ", expected " +
                               std::to_string(degree));
    try {
        return Permutation(img);
    } catch (const InputError& e) {
        schema_error(path, e.what());
    }
}

json perm_to_json(const Permutation& p) { return cycles_json(p); }

PermGroup group_from_json(const json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return named_group(j.get<std::string>());
        } catch (const InputError& e) {
            schema_error(path, e.what());
        }
    }
    if (j.is_object() && j.contains("catalog")) {
        require_object(j, path, {"catalog"}, {"catalog"});
        try {
            return named_group(get_string(j["catalog"], path + "/catalog"));
        } catch (const InputError& e) {
            schema_error(path + "/catalog", e.what());
        }
    }
    require_object(j, path, {"degree", "generators"}, {"degree", "generators"});
    const int n = get_int(j["degree"], path + "/degree");
    if (n < 1) schema_error(path + "/degree", "degree must be positive");
    const json& g = j["generators"];
    if (!g.is_array()) schema_error(path + "/generators", "expected an array");
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < g.size(); ++i)
        gens.push_back(perm_from_json(g[i], n, path + "/generators/" + std::to_string(i)));
    return PermGroup(n, gens);
}

json group_to_json(const PermGroup& g) {
    json gens = json::array();
    for (const auto& p : g.generators()) gens.push_back(cycles_json(p));
    return {{"degree", g.degree()}, {"generators", gens}};
}

BranchCycleDescription branch_from_json(const json& j, const std::string& path) {
    require_object(j, path, {"degree", "cycles", "infinity_index"}, {"degree", "cycles"});
    const int n = get_int(j["degree"], path + "/degree");
    if (n < 1) schema_error(path + "/degree", "degree must be positive");
    const json& c = j["cycles"];
    if (!c.is_array()) schema_error(path + "/cycles", "expected an array");
    std::vector<Permutation> cycles;
    for (std::size_t i = 0; i < c.size(); ++i)
        cycles.push_back(perm_from_json(c[i], n, path + "/cycles/" + std::to_string(i)));
    std::optional<std::size_t> inf;
    if (j.contains("infinity_index") && !j["infinity_index"].is_null()) {
        const int i = get_int(j["infinity_index"], path + "/infinity_index");
        if (i < 0 || static_cast<std::size_t>(i) >= cycles.size())
            schema_error(path + "/infinity_index", "index out of range");
        inf = static_cast<std::size_t>(i);
    }
    return BranchCycleDescription::make(n, cycles, inf);
}

json branch_to_json(const BranchCycleDescription& b) {
    json c = json::array();
    for (const auto& p : b.cycles) c.push_back(cycles_json(p));
    json out{{"degree", b.degree()}, {"cycles", c}};
    if (b.infinity_index) out["infinity_index"] = *b.infinity_index;
    return out;
}

Action action_from_spec(const std::string& spec, int degree) {
    if (spec == "natural") return Action::natural(degree);
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon);
        int k = 0;
        try {
            k = std::stoi(spec.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("bad action \"" + spec + "\": expected an integer after ':'");
        }
        if (kind == "subsets") return Action::k_subsets(degree, k);
        if (kind == "power") return Action::cartesian_power(degree, k);
    }
    throw InputError("unknown action \"" + spec + "\"; use natural, subsets:k or power:p");
}

RamificationDatum datum_from_json(const json& j) {
    require_object(j, "",
                   {"A", "G", "sigma_inf", "D_inf", "branch", "field", "ring",
                    "has_rational_unramified_place_at_infinity", "rational_spec_mode"},
                   {"A", "sigma_inf"});
    RamificationDatum d;
    d.A = group_from_json(j["A"], "/A");
    const int n = d.A.degree();
    d.sigma_inf = perm_from_json(j["sigma_inf"], n, "/sigma_inf");
    if (j.contains("G")) d.G = group_from_json(j["G"], "/G");
    if (j.contains("D_inf")) d.D_inf = group_from_json(j["D_inf"], "/D_inf");
    if (j.contains("branch")) d.branch = branch_from_json(j["branch"], "/branch");
    if (j.contains("field")) d.field = parse_field_flag(get_string(j["field"], "/field"));
    if (j.contains("ring")) d.ring = parse_ring_flag(get_string(j["ring"], "/ring"));
    if (j.contains("has_rational_unramified_place_at_infinity")) {
        const json& f = j["has_rational_unramified_place_at_infinity"];
        if (!f.is_null()) {
            if (!f.is_boolean()) schema_error("/has_rational_unramified_place_at_infinity", "expected a boolean");
            d.rational_unramified_place_at_infinity = f.get<bool>();
        }
    }
    if (j.contains("rational_spec_mode")) {
        if (!j["rational_spec_mode"].is_boolean()) schema_error("/rational_spec_mode", "expected a boolean");
        d.rational_spec_mode = j["rational_spec_mode"].get<bool>();
    }
    d.validate();
    return d;
}

json datum_to_json(const RamificationDatum& d) {
    json out{{"A", group_to_json(d.A)},
             {"sigma_inf", cycles_json(d.sigma_inf)},
             {"field", to_string(d.field)},
             {"ring", to_string(d.ring)},
             {"rational_spec_mode", d.rational_spec_mode}};
    if (d.G) out["G"] = group_to_json(*d.G);
    if (d.D_inf) out["D_inf"] = group_to_json(*d.D_inf);
    if (d.branch) out["branch"] = branch_to_json(*d.branch);
    if (d.rational_unramified_place_at_infinity)
        out["has_rational_unramified_place_at_infinity"] = *d.rational_unramified_place_at_infinity;
    return out;
}

json verdict_to_json(const Verdict& v) {
    json fired = json::array();
    for (const auto& f : v.fired) fired.push_back({{"criterion", f.criterion}, {"tag", f.tag}, {"reason", f.reason}});
    json witnesses = json::array();
    for (const auto& w : v.witnesses) {
        json data = json::object();
        for (const auto& [k, val] : w.data) data[k] = val;
        witnesses.push_back({{"kind", w.kind}, {"description", w.description}, {"data", data}});
    }
    json cands = json::array();
    for (const auto& c : v.candidates)
        cands.push_back({{"subgroup", c.subgroup},
                         {"index", c.index},
                         {"sigma_cycles", c.sigma_cycles},
                         {"survives", c.survives},
                         {"failed", c.failed}});
    return {{"status", to_string(v.status)}, {"fired", fired},    {"witnesses", witnesses},
            {"notes", v.notes},              {"candidates", cands}};
}

json scan_to_json(const ScanReport& r) {
    json facs = json::object();
    for (const auto& [t, f] : r.factorizations) facs[std::to_string(t)] = f.to_string();
    json out{{"f", r.f.to_string()},
             {"bound", r.bound},
             {"reducible_points", r.reducible_points},
             {"undefined_points", r.undefined_points},
             {"factorizations", facs}};
    if (r.verdict) out["verdict"] = to_string(*r.verdict);
    return out;
}

json table_to_json(const CharacterTable& t) {
    json classes = json::array();
    for (std::size_t i = 0; i < t.classes.num_classes(); ++i)
        classes.push_back({{"representative", cycles_json(t.classes.reps[i])},
                           {"size", t.classes.sizes[i]},
                           {"order", t.classes.rep_orders[i]}});
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::array();
        for (const auto& v : row) {
            if (const auto k = v.as_integer()) r.push_back(*k);
            else r.push_back({{"zeta_order", v.base()}, {"coefficients", v.reduced()}});
        }
        rows.push_back(r);
    }
    return {{"group_order", t.classes.order},
            {"zeta_order", t.classes.exponent},
            {"classes", classes},
            {"degrees", t.degrees},
            {"rows", rows}};
}

}  // namespace hit
