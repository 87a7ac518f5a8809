#include <doctest.h>

#include "qchain/cli.hpp"
#include "qchain/closed_forms.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace cli = qchain::cli;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "qchain");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

int run_binary(const std::string& args) {
    const std::string cmd = std::string(QCHAIN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("qchain_test_" + name);
}

}  // namespace

TEST_CASE("compute reports the spin-1/2 records") {
    const auto r = run({"compute", "--L", "3", "--N-max", "2", "--method", "both", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    const json doc = json::parse(r.out);
    CHECK(doc["meta"]["resolved_sum_range"] == "p");
    CHECK(doc["meta"]["version"] == cli::kVersion);
    REQUIRE(doc["runs"].size() == 2);
    CHECK(doc["runs"][0]["e"] == json::array({"1/1", "-1/1"}));
    CHECK(doc["runs"][1]["e"] == json::array({"1/1", "-11/5", "1/1"}));
    CHECK(cli::cyclotomic_from_json(doc["runs"][0]["energy"]).rational_value() == qchain::Rational(-3));
    CHECK(cli::cyclotomic_from_json(doc["runs"][1]["energy"]).rational_value() == qchain::Rational(-5));
    CHECK(doc["spin_constants"][0]["anchor_holds"] == true);
}

TEST_CASE("compute for spin 3/2 at N = 1") {
    const auto r = run({"compute", "--L", "5", "--N-max", "1"});
    REQUIRE(r.code == cli::kExitOk);
    const json doc = json::parse(r.out);
    const auto E1 = cli::cyclotomic_from_json(doc["runs"][0]["E1"]);
    const auto s5 = qchain::sqrt5_in_q_zeta10();
    CHECK(E1 == (s5.one() * qchain::Rational(5) + s5 * qchain::Rational(7)) * qchain::Rational(1, 4));
    const std::string approx = doc["runs"][0]["E1"]["approx"];
    CHECK(approx.rfind("5.16311896062463", 0) == 0);
}

TEST_CASE("JSON output round-trips bit for bit") {
    for (const char* bits : {"128", "256", "300"}) {
        const auto r = run({"compute", "--L", "3,5,7", "--N-max", "3", "--precision", bits});
        REQUIRE(r.code == cli::kExitOk);
        const json doc = json::parse(r.out);
        CHECK(cli::recompute_approximations(doc).dump(2) + "\n" == r.out);
    }
}

TEST_CASE("invalid configurations exit 2") {
    const auto even = run({"compute", "--L", "4", "--N-max", "1"});
    CHECK(even.code == cli::kExitBadConfig);
    CHECK(even.err.find("L must be odd \xE2\x89\xA5 3") != std::string::npos);
    CHECK(run({"compute", "--L", "3", "--N-max", "0"}).code == cli::kExitBadConfig);
    CHECK(run({"compute", "--L", "x"}).code == cli::kExitBadConfig);
    CHECK(run({"compute", "--precision", "64"}).code == cli::kExitBadConfig);
    CHECK(run({"compute", "--method", "guess"}).code == cli::kExitBadConfig);
    CHECK(run({"verify", "--checks", "nonsense"}).code == cli::kExitBadConfig);
    CHECK(run({"compute", "--bogus"}).code == cli::kExitBadConfig);
    CHECK(run({}).code == cli::kExitBadConfig);
}

TEST_CASE("verify passes on clean data and fails on tampered data") {
    const auto ok = run({"verify", "--L", "3,5", "--N-max", "4", "--checks", "all"});
    CHECK(ok.code == cli::kExitOk);
    const json doc = json::parse(ok.out);
    CHECK(doc["summary"]["failed"] == 0);
    CHECK(doc["summary"]["total"].get<int>() > 0);

    const auto bad = run({"verify", "--L", "5", "--N-max", "2", "--checks", "tq,structure", "--tamper", "1:1/3"});
    CHECK(bad.code == cli::kExitCheckFailed);
    const json report = json::parse(bad.out);
    bool tq_failed = false;
    for (const auto& e : report["entries"])
        if (e["check"] == "tq" && e["pass"] == false) tq_failed = true;
    CHECK(tq_failed);
    CHECK(bad.err.find("FAIL tq") != std::string::npos);
}

TEST_CASE("section4 check over the published spins") {
    const auto r = run({"verify", "--L", "7,9,11", "--N-max", "2", "--checks", "section4"});
    CHECK(r.code == cli::kExitOk);
    const json doc = json::parse(r.out);
    int numeric = 0;
    for (const auto& e : doc["entries"])
        if (e["check"] == "section4") ++numeric;
    CHECK(numeric == 6);
}

TEST_CASE("table shows a constant energy per site") {
    const auto r = run({"table", "--L", "3,5", "--N-max", "3"});
    REQUIRE(r.code == cli::kExitOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        int L, N, M, p;
        std::string E1, e, per_site;
        fields >> L >> N >> M >> p >> E1 >> e >> per_site;
        CHECK(p == N * (L - 2) + (L - 3) / 2);
        if (L == 3) CHECK(per_site.rfind("-1.00000000000000000000", 0) == 0);
        if (L == 5) CHECK(per_site.rfind("-2.618033988749894848", 0) == 0);
        ++rows;
    }
    CHECK(rows == 6);
}

TEST_CASE("csv output and output files") {
    const auto path = temp_file("out.csv");
    const auto r = run({"compute", "--L", "3", "--N-max", "2", "--format", "csv", "-o", path.string()});
    REQUIRE(r.code == cli::kExitOk);
    std::ifstream in(path);
    std::string first, header, row;
    std::getline(in, first);
    std::getline(in, header);
    std::getline(in, row);
    CHECK(first.rfind("#", 0) == 0);
    CHECK(header == "L,N,M,p,E1,energy,energy_per_site");
    CHECK(row.rfind("3,1,3,1,", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("parallel jobs give identical output") {
    const auto serial = run({"compute", "--L", "3,5,7,9", "--N-max", "3", "--jobs", "1"});
    const auto parallel = run({"compute", "--L", "3,5,7,9", "--N-max", "3", "--jobs", "4"});
    CHECK(serial.code == cli::kExitOk);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("exit codes of the installed binary") {
    CHECK(run_binary("compute --L 3 --N-max 1") == cli::kExitOk);
    CHECK(run_binary("verify --L 3 --N-max 2 --checks tq --tamper 1") == cli::kExitCheckFailed);
    CHECK(run_binary("compute --L 4 --N-max 1") == cli::kExitBadConfig);
    CHECK(run_binary("compute --L 3 --N-max 1 -o /nonexistent-dir/x.json") == cli::kExitInternal);
}

TEST_CASE("precision from the environment") {
    const auto path = temp_file("env.json");
    const std::string cmd = "QCHAIN_PRECISION_BITS=160 " + std::string(QCHAIN_CLI_PATH) +
                            " compute --L 3 --N-max 1 -o " + path.string();
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream in(path);
    const json doc = json::parse(in);
    CHECK(doc["meta"]["precision_bits"] == 160);
    std::filesystem::remove(path);
    const std::string bad = "QCHAIN_PRECISION_BITS=abc " + std::string(QCHAIN_CLI_PATH) + " compute >/dev/null 2>&1";
    const int status = std::system(bad.c_str());
    CHECK(WEXITSTATUS(status) == cli::kExitBadConfig);
}

TEST_CASE("option parsers") {
    CHECK(cli::parse_method("both") == cli::Method::both);
    CHECK(cli::parse_format("csv") == cli::Format::csv);
    CHECK(cli::parse_checks("all").size() == 6);
    CHECK(cli::parse_checks("finite-size,tq") == std::set<cli::Check>{cli::Check::finite_size, cli::Check::tq});
    const auto t = cli::parse_tamper("3:-2/7");
    CHECK(t.index == 3);
    CHECK(t.delta == qchain::Rational(-2, 7));
    CHECK_THROWS_AS(cli::parse_tamper("3:0"), cli::ConfigError);
    cli::RunConfig c;
    c.L_list = {};
    CHECK_THROWS_AS(cli::validate(c), cli::ConfigError);
}
