#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

// Drives the installed binary named by PIQ_BIN (set by ctest) end to end:
// output snippets, formats, and the exit-code contract (0 holds, 1 fails,
// 2 usage error, 3 diagnostic).

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const char* bin = std::getenv("PIQ_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "PIQ_BIN not set");
    std::string cmd = "\"" + std::string(bin) + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("autperm") {
    CmdResult r = run_cli("autperm --modulus 8");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "(1 3)(2 6)(5 7)"));
    CHECK(contains(r.out, "(1 7)(2 6)(3 5)"));

    CmdResult csv = run_cli("autperm --modulus 16 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.out, "unit,permutation,fixed_points"));
    bool unit5_row = contains(csv.out, "5,\"(1 5 9 13)(2 10)(3 15 11 7)(6 14)\"") ||
                     contains(csv.out, "5,(1 5 9 13)(2 10)(3 15 11 7)(6 14)");
    CHECK(unit5_row);

    CmdResult j = run_cli("autperm --modulus 8 --format json");
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["command"] == "autperm");
    CHECK(parsed["table"].size() == 4);

    CHECK(run_cli("autperm --modulus 1").exit_code == 2);
    CHECK(run_cli("autperm").exit_code == 2);
}

TEST_CASE("char") {
    CmdResult r = run_cli("char --pique 8:5:3 --words R,L,L2,RL --format csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "8:5:3,4,2,8,2"));

    CmdResult t3 = run_cli("char --pique 16:9:7 --words RL,RL2,RL3,R,R2,R3,L2 --format csv");
    CHECK(t3.exit_code == 0);
    CHECK(contains(t3.out, "16:9:7,2,8,2,8,16,8,16"));

    CmdResult dflt = run_cli("char --pique 3:1:1");
    CHECK(dflt.exit_code == 0);
    CHECK(contains(dflt.out, "3:1:1"));

    CHECK(run_cli("char --pique 16:4:3").exit_code == 2);
    CHECK(run_cli("char --pique 8:5:3 --words Q").exit_code == 2);
}

TEST_CASE("similar") {
    CmdResult yes = run_cli("similar --a 5:1:2 --b 5:1:3 --witness");
    CHECK(yes.exit_code == 0);
    CHECK(contains(yes.out, "similar"));
    CHECK(contains(yes.out, "witness:"));

    CmdResult no = run_cli("similar --a 3:1:2 --b 3:2:1");
    CHECK(no.exit_code == 1);
    CHECK(contains(no.out, "not similar"));

    CHECK(run_cli("similar --a 5:1:2 --b 7:1:2").exit_code == 2);

    CmdResult j = run_cli("similar --a 5:1:2 --b 5:1:3 --format json");
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["verdict"] == "similar");
    CHECK(parsed.contains("witness"));
}

TEST_CASE("iso") {
    CmdResult no = run_cli("iso --a 5:1:2 --b 5:1:3");
    CHECK(no.exit_code == 1);
    CHECK(contains(no.out, "not isomorphic"));

    CmdResult yes = run_cli("iso --a 5:1:2 --b 5:1:2 --witness");
    CHECK(yes.exit_code == 0);
    CHECK(contains(yes.out, "isomorphic"));
    CHECK(contains(yes.out, "witness: (1)"));

    CHECK(run_cli("iso --a 3:1:2 --b 3:2:1").exit_code == 1);
    CHECK(run_cli("iso --a 5:1:2 --b 5:1:3 --linear --magma").exit_code == 2);
    CHECK(run_cli("iso --a 5:1:2 --b 5:1:3 --linear").exit_code == 1);
}

TEST_CASE("classify") {
    CmdResult j = run_cli("classify --modulus 3 --format json");
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    REQUIRE(parsed["character_classes"].size() == 4);
    for (const auto& c : parsed["character_classes"])
        CHECK(c["members"].size() == 1);

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "piq-cli-test";
    fs::remove_all(dir);
    CmdResult files = run_cli("classify --modulus 5 --out " + dir.string());
    CHECK(files.exit_code == 0);
    for (const char* name :
         {"classify-5.txt", "classify-5.csv", "classify-5.json", "automorphisms-5.csv"})
        CHECK(fs::exists(dir / name));
    fs::remove_all(dir);

    CmdResult csv = run_cli("classify --modulus 16 --no-iso --jobs 0 --format csv");
    CHECK(csv.exit_code == 0);
    size_t lines = 0;
    for (char ch : csv.out)
        if (ch == '\n')
            ++lines;
    CHECK(lines == 65);  // header + one row per pique

    CmdResult stable_a = run_cli("classify --modulus 8 --format json");
    CmdResult stable_b = run_cli("classify --modulus 8 --format json");
    CHECK(stable_a.out == stable_b.out);

    CHECK(run_cli("classify --modulus 16 --iso --no-iso").exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("similar --a 5:1:2").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_SUITE_END();
