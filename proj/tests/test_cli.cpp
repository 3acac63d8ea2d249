#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddt/cli.hpp"
#include "schema_check.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = ddt::cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

json load_schema(const std::string& name) {
    std::ifstream f(std::string(DDT_SCHEMA_DIR) + "/" + name);
    REQUIRE(f.good());
    return json::parse(f);
}

void check_against_schema(const std::string& payload, const std::string& schema_name) {
    json value = json::parse(payload);
    std::string error;
    bool ok = ddt::testutil::validate_schema(value, load_schema(schema_name), error);
    INFO(error);
    CHECK(ok);
}

} // namespace

TEST_CASE("omega json output and schema") {
    CliResult r = run({"omega", "--ell", "1", "--max-degree", "4", "--format", "json"});
    CHECK(r.exit_code == 0);
    check_against_schema(r.out, "omega.schema.json");
    json j = json::parse(r.out);
    bool found = false;
    for (auto& row : j["entries"])
        if (row["d"] == json::array({1, 1, 1, 1})) {
            found = true;
            CHECK(row["omega"] == "x^4+3*x^2");
        }
    CHECK(found);
}

TEST_CASE("every subcommand emits schema-valid json") {
    check_against_schema(run({"mckay", "--ell", "2", "--format", "json"}).out, "mckay.schema.json");
    check_against_schema(run({"roots", "--ell", "1", "--max-degree", "3", "--format", "json"}).out,
                         "roots.schema.json");
    check_against_schema(run({"omega", "--ell", "2", "--max-degree", "3", "--format", "json"}).out,
                         "omega.schema.json");
    check_against_schema(run({"series", "--ell", "1", "--max-degree", "3", "--format", "json"}).out,
                         "series.schema.json");
    check_against_schema(run({"verify", "--ell", "1", "--max-degree", "2", "--primes", "2", "--format", "json"}).out,
                         "verify.schema.json");
    check_against_schema(run({"c2", "--max-degree", "3", "--format", "json"}).out, "c2.schema.json");
    check_against_schema(run({"ncdt", "--max-degree", "4", "--format", "json"}).out, "ncdt.schema.json");
}

TEST_CASE("verify subcommand exit codes") {
    CliResult ok = run({"verify", "--ell", "1", "--max-degree", "4", "--primes", "2,3"});
    CHECK(ok.exit_code == 0);
    json j = json::parse(ok.out);
    CHECK(j["failed"] == 0);
    CHECK(j["skipped"] == 0);
    CHECK(j["passed"] == 2 * 70);   // all d with |d| <= 4 at two primes
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"omega", "--ell", "0", "--max-degree", "3"}).exit_code == 2);
    CHECK(run({"omega", "--no-such-flag"}).exit_code == 2);
    CHECK(run({"verify", "--ell", "1", "--max-degree", "2", "--primes", "4"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
}

TEST_CASE("output is byte-stable across runs and worker counts") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"series", "--ell", "1", "--max-degree", "4", "--format", "json"},
             {"verify", "--ell", "1", "--max-degree", "3", "--primes", "3", "--format", "json"}}) {
        CliResult a = run(args);
        CliResult b = run(args);
        CHECK(a.out == b.out);
#ifdef _OPENMP
        int saved = omp_get_max_threads();
        omp_set_num_threads(1);
        CliResult c = run(args);
        omp_set_num_threads(saved);
        CHECK(a.out == c.out);
#endif
    }
}

TEST_CASE("csv and text formats") {
    CliResult csv = run({"omega", "--ell", "1", "--max-degree", "2", "--format", "csv"});
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("d,class,omega\n", 0) == 0);
    CliResult txt = run({"mckay", "--ell", "1", "--format", "text"});
    CHECK(txt.exit_code == 0);
    CHECK(txt.out.find("rho0") != std::string::npos);
    CliResult vcsv = run({"verify", "--ell", "1", "--max-degree", "2", "--primes", "2", "--format", "csv"});
    CHECK(vcsv.exit_code == 0);
    CHECK(vcsv.out.find("pass") != std::string::npos);
}

TEST_CASE("output to file") {
    std::string path = "cli_test_output.json";
    CliResult r = run({"roots", "--ell", "1", "--max-degree", "2", "--format", "json", "--output", path});
    CHECK(r.exit_code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    check_against_schema(buf.str(), "roots.schema.json");
    std::remove(path.c_str());
}

TEST_CASE("c2 and ncdt report equality") {
    json c2 = json::parse(run({"c2", "--max-degree", "4", "--format", "json"}).out);
    CHECK(c2["equal"] == true);
    CHECK(c2["diff"].empty());
    json ncdt = json::parse(run({"ncdt", "--max-degree", "4", "--format", "json"}).out);
    CHECK(ncdt["equal"] == true);
}

TEST_CASE("series terms are sorted lexicographically by d") {
    json j = json::parse(run({"series", "--ell", "1", "--max-degree", "3", "--format", "json"}).out);
    auto& terms = j["closed"];
    REQUIRE(terms.is_array());
    std::vector<std::vector<int>> ds;
    for (auto& t : terms) ds.push_back(t["d"].get<std::vector<int>>());
    CHECK(std::is_sorted(ds.begin(), ds.end()));
}

TEST_CASE("enumeration budget can come from the environment") {
    setenv("DDT_ENUM_BUDGET", "1", 1);
    CliResult r = run({"verify", "--ell", "1", "--max-degree", "2", "--primes", "2", "--format", "json"});
    unsetenv("DDT_ENUM_BUDGET");
    CHECK(r.exit_code == 0);   // skipped checks are not failures
    json j = json::parse(r.out);
    CHECK(j["skipped"].get<int>() > 0);
    CHECK(j["failed"] == 0);
}
