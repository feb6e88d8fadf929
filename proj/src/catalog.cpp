#include "hit/catalog.hpp"

#include <json.hpp>
#include <map>
#include <mutex>
#include <numeric>
#include <regex>

#include "hit/error.hpp"
#include "hit/group.hpp"
#include "named_groups_data.hpp"

namespace hit {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int primitive_root(int p) {
    for (int g = 2; g < p; ++g) {
        int x = 1;
        bool ok = true;
        for (int k = 1; k < p - 1; ++k) {
            x = x * g % p;
            if (x == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1;
}

struct StoredGroup {
    std::string id;
    int degree;
    std::uint64_t order;
    std::vector<std::string> generators;
};

struct StoredCatalog {
    int version = 0;
    std::vector<StoredGroup> groups;
};

const StoredCatalog& stored() {
    static const StoredCatalog cat = [] {
        StoredCatalog c;
        auto doc = nlohmann::json::parse(data::named_groups_json);
        if (doc.at("format") != "hitfin-named-groups")
            throw InvariantViolation("embedded catalog has an unexpected format tag");
        c.version = doc.at("version").get<int>();
        for (const auto& g : doc.at("groups"))
            c.groups.push_back({g.at("id").get<std::string>(), g.at("degree").get<int>(),
                                g.at("order").get<std::uint64_t>(),
                                g.at("generators").get<std::vector<std::string>>()});
        return c;
    }();
    return cat;
}

std::vector<Permutation> generators_for(const GroupId& id) {
    const int n = id.degree;
    std::vector<Permutation> gens;
    auto cycle = [&](std::vector<int> c) { return Permutation::from_cycles(n, {std::move(c)}); };
    switch (id.family) {
        case Family::Symmetric:
            if (n >= 2) {
                gens.push_back(cycle({0, 1}));
                std::vector<int> c(static_cast<std::size_t>(n));
                std::iota(c.begin(), c.end(), 0);
                gens.push_back(cycle(c));
            }
            break;
        case Family::Alternating:
            for (int i = 2; i < n; ++i) gens.push_back(cycle({0, 1, i}));
            break;
        case Family::Cyclic:
        case Family::Dihedral: {
            std::vector<int> c(static_cast<std::size_t>(n));
            std::iota(c.begin(), c.end(), 0);
            if (n >= 2) gens.push_back(cycle(c));
            if (id.family == Family::Dihedral) {
                std::vector<int> img(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (n - i) % n;
                gens.push_back(Permutation(img));
            }
            break;
        }
        case Family::AGL1: {
            const int p = id.param;
            std::vector<int> shift(static_cast<std::size_t>(p)), scale(static_cast<std::size_t>(p));
            const int g = primitive_root(p);
            for (int x = 0; x < p; ++x) {
                shift[static_cast<std::size_t>(x)] = (x + 1) % p;
                scale[static_cast<std::size_t>(x)] = x * g % p;
            }
            gens.push_back(Permutation(shift));
            gens.push_back(Permutation(scale));
            break;
        }
        default: {
            const std::string key = id.to_string();
            for (const auto& s : stored().groups)
                if (s.id == key) {
                    for (const auto& text : s.generators) gens.push_back(Permutation::parse(text, s.degree));
                    return gens;
                }
            throw InputError("no stored generators for " + key);
        }
    }
    return gens;
}

void validate(const GroupId& id) {
    const int n = id.degree;
    auto bad = [&](const std::string& why) { throw InputError("unknown catalog group " + id.to_string() + ": " + why); };
    switch (id.family) {
        case Family::Symmetric:
        case Family::Alternating:
            if (n < 1 || n > 12) bad("degree must be 1..12");
            break;
        case Family::Cyclic:
            if (n < 1 || n > 64) bad("degree must be 1..64");
            break;
        case Family::Dihedral:
            if (n < 3 || n > 64) bad("degree must be 3..64");
            break;
        case Family::AGL1:
            if (!is_prime(id.param) || id.param > 23) bad("p must be a prime <= 23");
            break;
        case Family::PSL2: {
            const std::pair<int, int> ok[] = {{7, 7}, {7, 8}, {8, 9}, {11, 11}, {11, 12}};
            bool found = false;
            for (auto [q, d] : ok) found = found || (q == id.param && d == n);
            if (!found) bad("stored actions are PSL2(7)@7, @8, PSL2(8)@9, PSL2(11)@11, @12");
            break;
        }
        case Family::M11:
            if (n != 11) bad("degree must be 11");
            break;
        case Family::M12:
            if (n != 12) bad("degree must be 12");
            break;
    }
}

std::uint64_t fact(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

GroupId GroupId::parse(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (c != ' ' && c != '_') text.push_back(c);
    std::smatch m;
    static const std::regex simple_re(R"(^([SACD])(\d+)$)");
    static const std::regex agl_re(R"(^AGL1\((\d+)\)$)");
    static const std::regex psl_re(R"(^PSL2\((\d+)\)@(\d+)$)");
    GroupId id;
    if (std::regex_match(text, m, simple_re)) {
        const char f = m[1].str()[0];
        id.family = f == 'S' ? Family::Symmetric : f == 'A' ? Family::Alternating : f == 'C' ? Family::Cyclic
                                                                                            : Family::Dihedral;
        id.param = id.degree = std::stoi(m[2].str());
    } else if (std::regex_match(text, m, agl_re)) {
        id.family = Family::AGL1;
        id.param = id.degree = std::stoi(m[1].str());
    } else if (std::regex_match(text, m, psl_re)) {
        id.family = Family::PSL2;
        id.param = std::stoi(m[1].str());
        id.degree = std::stoi(m[2].str());
    } else if (text == "M11") {
        id = {Family::M11, 11, 11};
    } else if (text == "M12") {
        id = {Family::M12, 12, 12};
    } else {
        throw InputError("cannot parse group id \"" + raw + "\"");
    }
    validate(id);
    return id;
}

std::string GroupId::to_string() const {
    switch (family) {
        case Family::Symmetric: return "S" + std::to_string(degree);
        case Family::Alternating: return "A" + std::to_string(degree);
        case Family::Cyclic: return "C" + std::to_string(degree);
        case Family::Dihedral: return "D" + std::to_string(degree);
        case Family::AGL1: return "AGL1(" + std::to_string(param) + ")";
        case Family::PSL2: return "PSL2(" + std::to_string(param) + ")@" + std::to_string(degree);
        case Family::M11: return "M11";
        case Family::M12: return "M12";
    }
    return "?";
}

std::uint64_t known_order(const GroupId& id) {
    switch (id.family) {
        case Family::Symmetric: return fact(id.degree);
        case Family::Alternating: return id.degree <= 2 ? 1 : fact(id.degree) / 2;
        case Family::Cyclic: return static_cast<std::uint64_t>(id.degree);
        case Family::Dihedral: return 2 * static_cast<std::uint64_t>(id.degree);
        case Family::AGL1: return static_cast<std::uint64_t>(id.param) * static_cast<std::uint64_t>(id.param - 1);
        case Family::PSL2: {
            const auto q = static_cast<std::uint64_t>(id.param);
            return q * (q * q - 1) / (q % 2 == 1 ? 2 : 1);
        }
        case Family::M11: return 7920;
        case Family::M12: return 95040;
    }
    return 0;
}

PermGroup named_group(const GroupId& id) {
    validate(id);
    static std::mutex mu;
    static std::map<std::string, PermGroup> cache;
    const std::string key = id.to_string();
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const std::uint64_t expected = known_order(id);
    PermGroup g(id.degree, generators_for(id));
    if (expected <= limits().group_cap) {
        const std::uint64_t got = g.elements().size();
        if (got != expected)
            throw InvariantViolation("catalog group " + key + " has closure order " + std::to_string(got) +
                                     ", expected " + std::to_string(expected));
    } else {
        // Beyond the cap only S_n and A_n can be certified, by Jordan's
        // theorem (primitive with a transposition or a 3-cycle).
        if (id.family != Family::Symmetric && id.family != Family::Alternating)
            throw CapExceeded("catalog group " + key + " has order " + std::to_string(expected) +
                              ", above the group cap " + std::to_string(limits().group_cap));
        GiantKind kind = giant_kind(g);
        bool ok = (id.family == Family::Symmetric && kind == GiantKind::Symmetric) ||
                  (id.family == Family::Alternating && kind == GiantKind::Alternating);
        if (!ok) throw InvariantViolation("catalog group " + key + " failed the Jordan order certificate");
    }
    g = g.with_known_order(expected).with_label(key);
    std::lock_guard lock(mu);
    cache.emplace(key, g);
    return g;
}

PermGroup named_group(const std::string& id) { return named_group(GroupId::parse(id)); }

std::vector<GroupId> catalog_ids() {
    std::vector<GroupId> out;
    for (int n = 1; n <= 12; ++n) out.push_back({Family::Symmetric, n, n});
    for (int n = 1; n <= 12; ++n) out.push_back({Family::Alternating, n, n});
    for (int n = 1; n <= 12; ++n) out.push_back({Family::Cyclic, n, n});
    for (int n = 3; n <= 12; ++n) out.push_back({Family::Dihedral, n, n});
    for (int p = 2; p <= 23; ++p)
        if (is_prime(p)) out.push_back({Family::AGL1, p, p});
    for (const auto& s : stored().groups) out.push_back(GroupId::parse(s.id));
    return out;
}

int catalog_data_version() { return stored().version; }

}  // namespace hit
