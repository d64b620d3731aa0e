// Drives the installed CLI binary end to end. The binary path arrives via
// the SEMIRING_IDEALS_CLI environment variable set by CTest.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("SEMIRING_IDEALS_CLI");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << text;
    return path;
}

} // namespace

TEST_CASE("spec subcommand prints the chain primes") {
    auto r = run_cli("spec gallery:L3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{0}\n{0,s}\n");
}

TEST_CASE("max subcommand") {
    auto r = run_cli("max gallery:L3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{0,s}\n");
}

TEST_CASE("gallery emits reparseable json") {
    auto r = run_cli("gallery B");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["size"].get<int>() == 2);
    const std::string path = write_temp("cli_roundtrip.json", r.output);
    auto v = run_cli("validate " + path);
    CHECK(v.exit_code == 0);
    // Emitted canonical json must reparse to the identical definition.
    auto again = run_cli("gallery B");
    CHECK(again.output == r.output);
}

TEST_CASE("validate flags corrupt tables with exit code 1") {
    const std::string path = write_temp("cli_corrupt.json", R"({
      "size": 2, "add": [[0,1],[1,1]], "mul": [[0,1],[1,1]],
      "zero": 0, "one": 1
    })");
    auto r = run_cli("validate " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("absorption") != std::string::npos);
}

TEST_CASE("unparseable input exits with 2") {
    const std::string path = write_temp("cli_bad.json", "not json at all");
    auto r = run_cli("validate " + path);
    CHECK(r.exit_code == 2);
    auto missing = run_cli("spec /tmp/definitely_missing_file.json");
    CHECK(missing.exit_code == 2);
    auto unknown = run_cli("spec gallery:unknown");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("mis-shaped tables are an input error") {
    const std::string path = write_temp("cli_shape.json", R"({
      "size": 2, "add": [[0,1,0],[1,1]], "mul": [[0,0],[0,1]],
      "zero": 0, "one": 1
    })");
    auto r = run_cli("validate " + path);
    CHECK(r.exit_code == 2);
}

TEST_CASE("a non-associative addition is reported with a witness triple") {
    // Z4 tables with 1+1 patched to 3.
    const std::string path = write_temp("cli_nonassoc.json", R"({
      "size": 4,
      "add": [[0,1,2,3],[1,3,3,0],[2,3,0,1],[3,0,1,2]],
      "mul": [[0,0,0,0],[0,1,2,3],[0,2,0,2],[0,3,2,1]],
      "zero": 0, "one": 1
    })");
    auto r = run_cli("validate " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("add-associativity") != std::string::npos);
}

TEST_CASE("size cap applies to file input") {
    // 3x3 chain accepted by default, rejected under --size-cap 2.
    auto text = run_cli("gallery L3").output;
    const std::string path = write_temp("cli_l3.json", text);
    CHECK(run_cli("validate " + path).exit_code == 0);
    auto capped = run_cli("validate " + path + " --size-cap 2");
    CHECK(capped.exit_code == 2);
}

TEST_CASE("classify output") {
    auto r = run_cli("classify gallery:N2 --ideal 2 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["prime"].get<bool>());
    CHECK(j["maximal"].get<bool>());
    CHECK(j["primary"].get<bool>());
    CHECK(j["irreducible"].get<bool>());
    CHECK(!j["subtractive"].get<bool>());
}

TEST_CASE("radical and colon subcommands") {
    auto r = run_cli("radical gallery:N2 --ideal 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{0,2}\n");
    auto c = run_cli("colon gallery:BxB --ideal \"(0,1)\" --by \"(1,0)\"");
    CHECK(c.exit_code == 0);
    CHECK(c.output == "{(0,0),(0,1)}\n");
}

TEST_CASE("vof subcommand") {
    auto r = run_cli("vof gallery:L3 --ideal 0 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["primes_over"].size() == 2);
}

TEST_CASE("hom-check reports kernel and rejects non-homs") {
    auto ok = run_cli("hom-check gallery:L3 gallery:B --map 0:0,s:1,1:1 --json");
    CHECK(ok.exit_code == 0);
    auto j = nlohmann::json::parse(ok.output);
    CHECK(j["valid"].get<bool>());
    CHECK(!j["injective"].get<bool>());
    CHECK(j["kernel"].size() == 1);

    auto bad = run_cli("hom-check gallery:N2 gallery:B --map 0:0,1:1,2:0");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("contract and extend subcommands") {
    auto c = run_cli(
        "contract gallery:L3 gallery:B --map 0:0,s:1,1:1 --ideal 0");
    CHECK(c.exit_code == 0);
    CHECK(c.output == "{0}\n");
    auto e = run_cli(
        "extend gallery:L3 gallery:B --map 0:0,s:1,1:1 --ideal s");
    CHECK(e.exit_code == 0);
    CHECK(e.output == "{0,1}\n");
}

TEST_CASE("localize prints the quotient in file schema") {
    auto r = run_cli("localize gallery:L3 --mcset s,1 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["quotient"]["size"].get<int>() == 2);
    const std::string path =
        write_temp("cli_quotient.json", j["quotient"].dump());
    CHECK(run_cli("validate " + path).exit_code == 0);
}

TEST_CASE("localize-at reports the maximal ideal") {
    auto r = run_cli("localize-at gallery:L3 --prime 0 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["quotient"]["size"].get<int>() == 2);
    CHECK(j["maximal_ideal"].size() == 1);
    auto bad = run_cli("localize-at gallery:BxB --prime \"(0,0)\"");
    CHECK(bad.exit_code == 1); // the zero ideal of a product is not prime
}

TEST_CASE("decompose matches the worked product example") {
    auto r = run_cli(
        "decompose gallery:BxB --ideal \"(0,0)\" --kind primary --minimal --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["components"].size() == 2);
    CHECK(j["minimal"].get<bool>());
    CHECK(j["minimal_primes"].size() == 2);
}

TEST_CASE("module-check") {
    const char* data_dir = std::getenv("SEMIRING_IDEALS_DATA");
    REQUIRE(data_dir != nullptr);
    auto r = run_cli(std::string("module-check ") + data_dir +
                     "/boolean_regular.module.json --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["valid"].get<bool>());
}

TEST_CASE("check subcommand exits zero and is seed independent") {
    auto r1 = run_cli("check gallery:B --json --seed 7");
    auto r2 = run_cli("check gallery:B --json --seed 1234");
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    auto j1 = nlohmann::json::parse(r1.output);
    auto j2 = nlohmann::json::parse(r2.output);
    for (auto* j : {&j1, &j2})
        for (auto& rep : (*j)["reports"]) rep.erase("elapsed_ms");
    CHECK(j1 == j2);

    auto sel = run_cli("check gallery:L3 --props krullintersectionprimes");
    CHECK(sel.exit_code == 0);
    auto bad = run_cli("check gallery:L3 --props nonsense");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("ideals listing is sorted and deterministic") {
    auto a = run_cli("ideals gallery:BxB");
    auto b = run_cli("ideals gallery:BxB");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("{(0,0)}") == 0);
}
