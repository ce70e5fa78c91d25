#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "mmv/cli.hpp"
#include "mmv/numerics.hpp"
#include "mmv/relfind.hpp"

using namespace mmv;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("mzv subcommand prints pi^2/6") {
    auto r = run_cli({"mzv", "--index", "2", "--digits", "30"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1.6449340668482264364724151666") != std::string::npos);
}

TEST_CASE("mmv subcommand flags the exact rational table entry") {
    auto r = run_cli({"mmv", "--forms", "G4,G4", "--indices", "2,2", "--digits", "50"});
    CHECK(r.code == 0);
    CHECK(r.out.find("EXACT-RATIONAL-MATCH 1/165888") != std::string::npos);
}

TEST_CASE("lvalue subcommand") {
    auto r = run_cli({"lvalue", "--form", "G4", "--s", "2", "--digits", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("-0.0034722222222222") != std::string::npos);
    // pole -> domain error exit code
    CHECK(run_cli({"lvalue", "--form", "G4", "--s", "1"}).code == 1);
    CHECK(run_cli({"lvalue", "--form", "Delta", "--s", "0"}).code == 1);
}

TEST_CASE("malformed arguments exit 64") {
    CHECK(run_cli({"nonsense"}).code == 64);
    CHECK(run_cli({}).code == 64);
    CHECK(run_cli({"mzv"}).code == 64);                                   // missing --index
    CHECK(run_cli({"mzv", "--index", "2", "--digits", "5"}).code == 64);  // out of range
    CHECK(run_cli({"mzv", "--index", "2", "--bogus", "1"}).code == 64);   // unknown key
}

TEST_CASE("verify subcommand and exit code") {
    auto r = run_cli({"verify", "--id", "gkz12", "--digits", "50"});
    CHECK(r.code == 0);
    CHECK(r.out.find("CONFIRMED") != std::string::npos);
    CHECK(run_cli({"verify", "--id", "no-such-id"}).code == 1);
}

TEST_CASE("verify emits the conjectural label on the f93 identity") {
    auto r = run_cli({"verify", "--id", "f93period", "--digits", "40", "--format", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j[0]["label"] == "CONJECTURAL-CONFIRMED");
    CHECK(j[0]["agreement_digits"].get<double>() >= 40);
}

TEST_CASE("findrel JSON output round-trips to the same residual") {
    PrecisionContext ctx(60);
    auto p = ctx.bits();
    BigFloat z3 = riemann_zeta(3, ctx).re();
    BigFloat x = BigFloat(12, p) * z3 - BigFloat(7, p);
    const std::string path = "/tmp/mmvkit_test_basis.json";
    {
        json basis = json::array();
        basis.push_back({{"name", "x"}, {"value", x.str(60)}});
        basis.push_back({{"name", "z3"}, {"value", z3.str(60)}});
        basis.push_back({{"name", "1"}, {"value", "1"}});
        std::ofstream f(path);
        f << basis.dump();
    }
    auto r = run_cli({"findrel", "--basis", path, "--height", "1000", "--digits", "60",
                      "--format", "json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["found"].get<bool>());

    // Re-verify: parse coefficients and values back, recompute the residual.
    PeriodBasis basis;
    basis.digits = 60;
    basis.push("x", BigFloat(x.str(60), p));
    basis.push("z3", BigFloat(z3.str(60), p));
    basis.push("1", BigFloat(1, p));
    BigFloat resid(p);
    for (size_t i = 0; i < 3; ++i)
        resid += BigFloat(BigInt(j["coefficients"][i].get<std::string>()), p) *
                 basis.entries[i].value.re();
    // same residual to the printed precision
    BigFloat printed(j["residual"].get<std::string>(), p);
    CHECK((abs(resid) - printed).log10_abs() < printed.log10_abs() + 1e-6 + 7);
}

TEST_CASE("table json output parses") {
    auto r = run_cli({"table", "--forms", "G4,G4", "--digits", "25", "--format", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["table"].size() == 3);
    CHECK(j["table"][0].size() == 3);
}

TEST_CASE("MMVKIT_DIGITS environment default") {
    setenv("MMVKIT_DIGITS", "22", 1);
    auto r = run_cli({"mzv", "--index", "2"});
    unsetenv("MMVKIT_DIGITS");
    CHECK(r.code == 0);
    // 22 significant digits requested
    CHECK(r.out.find("1.644934066848226436") != std::string::npos);
    CHECK(r.out.find("1.6449340668482264364724") == std::string::npos);
}

TEST_CASE("zetarep and periodpoly run") {
    CHECK(run_cli({"zetarep", "--index", "5,3", "--digits", "25"}).code == 0);
    auto r = run_cli({"periodpoly", "--form", "Delta", "--digits", "25"});
    CHECK(r.code == 0);
    CHECK(r.out.find("omega+ = 0.1143790224388") != std::string::npos);
}
