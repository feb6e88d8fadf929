#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <set>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::string env_or(const char* name, const char* fallback) {
    const char* v = std::getenv(name);
    return v ? v : fallback;
}

std::string bin() { return env_or("HITFIN_BIN", "./hitfin"); }
std::string sample(const std::string& name) { return env_or("HITFIN_DOCS", "../docs") + "/samples/" + name; }

// stderr is folded into the captured output.
Run run(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd = bin() + " " + args + " 2>&1";
    if (!stdin_text.empty()) cmd = "printf '%s' '" + stdin_text + "' | " + cmd;
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string& args, const std::string& stdin_text = "") {
    const Run r = run(args, stdin_text);
    INFO(r.out);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("analyze-group") {
    const json s4 = run_json("analyze-group " + sample("s4.json"));
    CHECK(s4["order"] == 24);
    CHECK(s4["primitive"] == true);
    CHECK(s4["composition_factors"] == json({"C2", "C3", "C2", "C2"}));

    const json c4 = run_json("analyze-group " + sample("c4.json"));
    CHECK(c4["primitive"] == false);
    CHECK(c4["block_systems"] == json::parse("[[[0,2],[1,3]]]"));

    const json m11 = run_json("analyze-group --catalog M11");
    CHECK(m11["order"] == 7920);
    CHECK(m11["two_transitive"] == true);
    CHECK(m11["composition_factors"] == json({"M11"}));

    const json from_stdin = run_json("analyze-group -", R"j({"degree": 3, "generators": ["(0 1)"]})j");
    CHECK(from_stdin["transitive"] == false);
    CHECK(from_stdin["orbits"] == json::parse("[[0,1],[2]]"));

    const json table = run_json("analyze-group --catalog S3 --table");
    CHECK(table["character_table"]["degrees"] == json({1, 1, 2}));
}

TEST_CASE("genus") {
    CHECK(run_json("genus --zm 5")["genus"] == 0);
    CHECK(run_json("genus --zm 5 --action subsets:2")["genus"] == 1);
    const json b = run_json("genus --branch " + sample("zm5_branch.json"));
    CHECK(b["genus"] == 0);
    CHECK(b["places_above_infinity"] == json({5}));

    const json c = run_json("genus --zm 5 --action natural --compare subsets:2");
    CHECK(c["genus_e"] == 0);
    CHECK(c["genus_f"] == 1);
    CHECK(c["difference_is_character"] == "character");

    const Run bad = run("genus --branch -", R"j({"degree": 3, "cycles": ["(0 1)", "(1 2)"]})j");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("branch cycles do not multiply to identity") != std::string::npos);
}

TEST_CASE("verdict") {
    const json pell = run_json("verdict --poly 'X^2-2*t^2-1'");
    CHECK(pell["status"] == "InfiniteWitness");
    CHECK(!pell["witnesses"].empty());

    const json thue = run_json("verdict --poly 'X^3+t^3-1'");
    CHECK(thue["status"] == "Finite");
    bool langmann = false;
    for (const auto& f : thue["fired"]) langmann = langmann || f["tag"] == "T:Langmannsep";
    CHECK(langmann);

    const json m11 = run_json("verdict --datum " + sample("m11_datum.json"));
    CHECK(m11["status"] == "Finite");
    std::set<std::string> tags;
    for (const auto& f : m11["fired"]) tags.insert(f["tag"].get<std::string>());
    CHECK(tags.count("T:main") == 1);
    CHECK(tags.count("C:mainQ:Galois_2") == 1);

    const json v4 = run_json("verdict --datum " + sample("v4_datum.json"));
    CHECK(v4["status"] != "Finite");

    const Run text = run("verdict --datum " + sample("m11_datum.json") + " --format text");
    CHECK(text.code == 0);
    CHECK(text.out.find("status: Finite") != std::string::npos);
}

TEST_CASE("scan") {
    const json s = run_json("scan --poly 'X^2-2*t^2-1' --bound 100");
    CHECK(s["reducible_points"] == json({-70, -12, -2, 0, 2, 12, 70}));
    const Run table = run("scan --poly 'X^3+t^3-1' --bound 20 --format table");
    CHECK(table.code == 0);
    CHECK(table.out.find("X^3") != std::string::npos);
    const json rec = run_json("scan --poly 'X^2-2*t^2-1' --bound 30 --reconcile");
    CHECK(rec["reconciliation"]["contradiction"] == false);
}

TEST_CASE("verify-paper") {
    const Run all = run("verify-paper");
    INFO(all.out);
    CHECK(all.code == 0);
    CHECK(all.out.find("FAIL") == std::string::npos);

    const Run fault = run("verify-paper --only absirr --inject-fault");
    CHECK(fault.code == 3);
    CHECK(fault.out.find("lhs - rhs =") != std::string::npos);

    const Run agdi = run("verify-paper --only agdi-sweep");
    CHECK(agdi.code == 0);
    CHECK(agdi.out.find("agdi-sweep") != std::string::npos);
    CHECK(agdi.out.find("identity") == std::string::npos);
    CHECK(agdi.out.find("1 of 1 checks passed") != std::string::npos);

    CHECK(run("verify-paper --only nonsense").code == 1);
}

TEST_CASE("catalog and config") {
    const json list = run_json("catalog");
    CHECK(list.size() > 30);
    CHECK(run_json("catalog 'PSL2(7)@7'")["order"] == 168);
    CHECK(run_json("--config " + sample("hitfin.toml") + " catalog A5")["order"] == 60);
}

TEST_CASE("exit codes and schema errors") {
    const Run syntax = run("analyze-group -", "{\"degree\": 3,\n \"generators\": [}");
    CHECK(syntax.code == 1);
    CHECK(syntax.out.find("-:2:") != std::string::npos);

    const Run unknown = run("analyze-group -", R"j({"degree": 3, "generators": [], "extra": 1})j");
    CHECK(unknown.code == 1);
    CHECK(unknown.out.find("unknown key") != std::string::npos);

    const Run bad_perm = run("analyze-group -", R"j({"degree": 3, "generators": [[0, 0, 1]]})j");
    CHECK(bad_perm.code == 1);
    CHECK(bad_perm.out.find("/generators/0") != std::string::npos);

    CHECK(run("analyze-group --catalog NOPE").code == 1);
    CHECK(run("no-such-command").code == 1);
    CHECK(run("").code == 1);
    CHECK(run("genus --zm 5 --action subsets:x").code == 1);
    CHECK(run("--group-cap 10 analyze-group --catalog M11").code == 1);
}
