// End-to-end tests of the command-line tool: exit codes, JSON output that is
// bit-identical to the in-process serialization, and pipe round-trips.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "spreadcode/json_io.hpp"

using namespace spreadcode;

namespace {

const std::string kCli = SPREADCODE_CLI_PATH;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult result;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
        result.out.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string temp_path(const std::string& stem) {
    return "cli_test_" + std::to_string(getpid()) + "_" + stem;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("spread output is bit-identical to the in-process serialization") {
    auto F = Field::make(2, 2);
    std::string expected = spread_to_json(companion_spread(F, 2)).dump(2) + "\n";
    RunResult r = run(kCli + " spread --p 2 --e 2 --k 2 --family thm34");
    CHECK(r.exit_code == 0);
    CHECK(r.out == expected);
}

TEST_CASE("spread families and sizes") {
    RunResult des = run(kCli + " spread --p 2 --e 1 --k 2 --family desarguesian");
    CHECK(des.exit_code == 0);
    CHECK(spread_from_json(Json::parse(des.out)).size() == 5);

    RunResult eb = run(kCli + " spread --p 2 --e 2 --k 2 --family eb --subset 0,1,2");
    CHECK(eb.exit_code == 0);
    CHECK(spread_from_json(Json::parse(eb.out)).size() == 3);

    RunResult rnd1 = run(kCli + " spread --p 3 --e 1 --k 2 --family random --s 3 --seed 7");
    RunResult rnd2 = run(kCli + " spread --p 3 --e 1 --k 2 --family random --s 3 --seed 7");
    CHECK(rnd1.exit_code == 0);
    CHECK(rnd1.out == rnd2.out);
    CHECK(spread_from_json(Json::parse(rnd1.out)).size() == 3);
}

TEST_CASE("piped spread -> code -> check equals the in-process result") {
    auto F = Field::make(2, 2);
    DefiningSet D = defining_set(companion_spread(F, 2));

    RunResult code = run(kCli + " spread --p 2 --e 2 --k 2 --family thm34 | " + kCli +
                         " code --in -");
    CHECK(code.exit_code == 0);
    CHECK(code.out == code_to_json(D).dump(2) + "\n");

    RunResult check = run(kCli + " spread --p 2 --e 2 --k 2 --family thm34 | " + kCli +
                          " code --in - | " + kCli + " check --in - --method geometric");
    CHECK(check.exit_code == 0);
    CHECK(check.out == report_to_json(check_geometric(D)).dump(2) + "\n");
}

TEST_CASE("check exit codes encode the verdict") {
    std::string comp = temp_path("comp.json");
    std::string eb = temp_path("eb.json");
    write_file(comp, code_to_json(defining_set(companion_spread(Field::make(2, 2), 2))).dump());
    write_file(eb, code_to_json(defining_set(
                                    scalar_graph_family(Field::make(2, 2), 2, {0, 1, 2, 3})))
                       .dump());

    CHECK(run(kCli + " check --in " + comp + " --method geometric").exit_code == 0);
    CHECK(run(kCli + " check --in " + comp + " --method bruteforce").exit_code == 0);
    CHECK(run(kCli + " check --in " + comp + " --method ab").exit_code == 3);  // inconclusive
    CHECK(run(kCli + " check --in " + eb + " --method geometric").exit_code == 1);
    CHECK(run(kCli + " check --in " + eb + " --method all").exit_code == 1);

    RunResult all = run(kCli + " check --in " + comp + " --method all");
    CHECK(all.exit_code == 0);
    Json j = Json::parse(all.out);
    CHECK(j.at("verdict") == "Minimal");
    CHECK(j.at("consistent") == true);
    CHECK(j.at("methods").at("ab_bound").at("verdict") == "Inconclusive");
    CHECK(j.at("methods").at("bruteforce").at("verdict") == "Minimal");

    std::remove(comp.c_str());
    std::remove(eb.c_str());
}

TEST_CASE("weights output") {
    std::string path = temp_path("w.json");
    auto full = desarguesian_spread(Field::make(2, 1), 2);
    write_file(path, code_to_json(defining_set(subfamily(full, {0, 1, 2}))).dump());
    RunResult r = run(kCli + " weights --in " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[[4,9],[6,6]]\n");
    std::remove(path.c_str());
}

TEST_CASE("malformed input and bad parameters exit with 2") {
    std::string junk = temp_path("junk.json");
    write_file(junk, "{not json");
    CHECK(run(kCli + " check --in " + junk + " --method geometric").exit_code == 2);
    std::remove(junk.c_str());

    CHECK(run(kCli + " spread --p 4 --e 1 --k 2 --family desarguesian").exit_code == 2);
    CHECK(run(kCli + " spread --p 2 --e 1 --k 2 --family nosuch").exit_code == 2);
    CHECK(run(kCli + " spread --p 2 --e 1 --k 1 --family thm34").exit_code == 2);  // k >= 2
    CHECK(run(kCli + " check --in /nonexistent.json").exit_code == 2);

    // rank-deficient defining set
    std::string low = temp_path("low.json");
    auto f2 = Field::make(2, 1);
    Subspace plane = Subspace::from_rows(*f2, {{1, 0, 0, 0}, {0, 1, 0, 0}}, 4);
    std::vector<Vec> pts;
    for (const auto& v : enumerate_subspace(*f2, plane))
        if (v != Vec(4, 0)) pts.push_back(v);
    write_file(low, code_to_json(DefiningSet::from_points(f2, 4, pts)).dump());
    CHECK(run(kCli + " weights --in " + low).exit_code == 2);
    CHECK(run(kCli + " check --in " + low + " --method geometric").exit_code == 2);
    std::remove(low.c_str());
}

TEST_CASE("verify-paper filtering and formats") {
    RunResult one = run(kCli + " verify-paper --rows thm33");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("PASS thm33") != std::string::npos);
    CHECK(one.out.find("thm31") == std::string::npos);

    RunResult js = run(kCli + " verify-paper --rows thm34 --format json");
    CHECK(js.exit_code == 0);
    Json j = Json::parse(js.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0].at("row") == "thm34");
    CHECK(j[0].at("pass") == true);

    CHECK(run(kCli + " verify-paper --rows nosuchrow").exit_code == 2);
}

TEST_CASE("stdout carries exactly one JSON document") {
    RunResult r = run(kCli + " spread --p 3 --e 1 --k 2 --family desarguesian");
    CHECK(r.exit_code == 0);
    Json parsed = Json::parse(r.out);  // throws if trailing garbage
    CHECK(parsed.is_object());
}

TEST_CASE("threads flag does not change output") {
    std::string path = temp_path("t.json");
    write_file(path,
               code_to_json(defining_set(desarguesian_spread(Field::make(2, 2), 2))).dump());
    RunResult t1 = run(kCli + " check --in " + path + " --method geometric --threads 1");
    RunResult t4 = run(kCli + " check --in " + path + " --method geometric --threads 4");
    CHECK(t1.exit_code == t4.exit_code);
    CHECK(t1.out == t4.out);
    std::remove(path.c_str());
}
