#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "qpolymat/cli.hpp"
#include "qpolymat/codespec.hpp"
#include "support/fixtures.hpp"

using namespace qpolymat;
using namespace qpolymat::testing;

namespace {

const char* kExampleSpec =
    "# worked example\n"
    "2 2 3 3\n"
    "\n"
    "1 0 0\n"
    "0 1 0\n"
    "\n"
    "0 1 0\n"
    "0 0 1\n"
    "\n"
    "0 0 1\n"
    "1 1 0\n";

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& content) {
        path = std::filesystem::temp_directory_path() /
               ("qpolymat_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++) + ".code");
        std::ofstream(path) << content;
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
    static int counter;
};

int TempFile::counter = 0;

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = cli_main(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parser accepts the worked example") {
    CodeSpecFile spec = parse_code_spec(kExampleSpec);
    CHECK(spec.q == 2);
    CHECK(spec.n == 2);
    CHECK(spec.m == 3);
    REQUIRE(spec.declared_generators.has_value());
    CHECK(*spec.declared_generators == 3);
    CHECK(spec.generators.size() == 3);
    CHECK(build_code(spec) == example_code());
}

TEST_CASE("parser edge cases") {
    CodeSpecFile empty = parse_code_spec("3 2 2\n");
    CHECK(empty.generators.empty());
    CHECK(build_code(empty).dim() == 0);

    // entries reduced mod q on load
    CodeSpecFile wrapped = parse_code_spec("2 1 2\n\n-1 4\n");
    MatrixGF expected(Field(2), 1, 2, {1, 0});
    CHECK(build_code(wrapped).basis().at(0) == expected);
}

TEST_CASE("parser rejections") {
    CHECK_THROWS_AS(parse_code_spec("4 2 3\n"), std::invalid_argument);      // composite q
    CHECK_THROWS_AS(parse_code_spec(""), ParseError);                        // no header
    CHECK_THROWS_AS(parse_code_spec("2 2\n"), ParseError);                   // short header
    CHECK_THROWS_AS(parse_code_spec("2 2 3\n\n1 0\n0 1 0\n"), ParseError);   // ragged row
    CHECK_THROWS_AS(parse_code_spec("2 2 3\n\n1 0 0\n"), ParseError);        // missing row
    CHECK_THROWS_AS(parse_code_spec("2 2 3 2\n\n1 0 0\n0 1 0\n"), ParseError);  // count mismatch
    CHECK_THROWS_AS(parse_code_spec("2 2 3\nfoo\n"), ParseError);            // junk token
}

TEST_CASE("format round trip") {
    RankMetricCode C = example_code();
    CodeSpecFile spec = parse_code_spec(format_code_spec(C, "round trip"));
    CHECK(build_code(spec) == C);
}

TEST_CASE("cli rankgen prints the canonical polynomial") {
    TempFile file(kExampleSpec);
    RunResult r = run_cli({"rankgen", file.path.string()});
    CHECK(r.status == 0);
    CHECK(r.out == "X2^3*X3^2 - 3*X2^3*X3*X4 + 2*X2^3*X4^2 + X1^3 + 3*X3 - 3*X4\n");
}

TEST_CASE("cli output is byte-deterministic") {
    TempFile file(kExampleSpec);
    for (const char* cmd : {"rankgen", "weights", "whitney", "polymatroid", "moments"}) {
        RunResult a = run_cli({cmd, file.path.string()});
        RunResult b = run_cli({cmd, file.path.string()});
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("cli higher and exit codes") {
    TempFile file(kExampleSpec);
    RunResult ok = run_cli({"higher", "-r", "1", file.path.string()});
    CHECK(ok.status == 0);
    CHECK(ok.out == "7*y^2\n");

    RunResult bad = run_cli({"higher", "-r", "5", file.path.string()});
    CHECK(bad.status == 2);

    RunResult missing = run_cli({"higher", file.path.string()});
    CHECK(missing.status == 2);

    RunResult nofile = run_cli({"rankgen", "/nonexistent/path.code"});
    CHECK(nofile.status == 2);

    RunResult badsub = run_cli({"frobnicate", file.path.string()});
    CHECK(badsub.status == 2);
}

TEST_CASE("cli verify all on the worked example") {
    TempFile file(kExampleSpec);
    RunResult r = run_cli({"verify", "all", file.path.string()});
    CHECK(r.status == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("VERIFIED") != std::string::npos);

    RunResult unknown = run_cli({"verify", "bogus", file.path.string()});
    CHECK(unknown.status == 2);
}

TEST_CASE("cli respects the cap flag") {
    TempFile file(kExampleSpec);
    RunResult r = run_cli({"--cap", "3", "weights", file.path.string()});
    CHECK(r.status == 2);
    CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("QPOLYMAT_CAP env var sets the guard, flag overrides it") {
    TempFile file(kExampleSpec);
    ::setenv("QPOLYMAT_CAP", "3", 1);
    RunResult from_env = run_cli({"weights", file.path.string()});
    CHECK(from_env.status == 2);
    RunResult overridden = run_cli({"--cap", "1000", "weights", file.path.string()});
    CHECK(overridden.status == 0);
    ::setenv("QPOLYMAT_CAP", "junk", 1);
    RunResult invalid = run_cli({"weights", file.path.string()});
    CHECK(invalid.status == 2);
    ::unsetenv("QPOLYMAT_CAP");
}

TEST_CASE("cli json output parses and matches text values") {
    TempFile file(kExampleSpec);
    RunResult r = run_cli({"--json", "rankgen", file.path.string()});
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["text"] == "X2^3*X3^2 - 3*X2^3*X3*X4 + 2*X2^3*X4^2 + X1^3 + 3*X3 - 3*X4");
    CHECK(j["vars"].size() == 4);

    RunResult v = run_cli({"--json", "verify", "greene", file.path.string()});
    CHECK(v.status == 0);
    auto jv = nlohmann::json::parse(v.out);
    CHECK(jv.is_array());
    CHECK(jv[0]["pass"] == true);
}

TEST_CASE("cli dual and transpose emit reparseable specs") {
    TempFile file(kExampleSpec);

    RunResult d = run_cli({"dual", file.path.string()});
    CHECK(d.status == 0);
    RankMetricCode D = build_code(parse_code_spec(d.out));
    CHECK(D == dual_code(example_code()));

    RunResult t = run_cli({"transpose", file.path.string()});
    CHECK(t.status == 0);
    RankMetricCode T = build_code(parse_code_spec(t.out));
    CHECK(T.n() == 3);
    CHECK(T.m() == 2);
    CHECK(T == transpose_code(example_code()));
}

TEST_CASE("cli info and mrd") {
    TempFile file(kExampleSpec);
    RunResult info = run_cli({"info", file.path.string()});
    CHECK(info.status == 0);
    CHECK(info.out.find("k = 3") != std::string::npos);
    CHECK(info.out.find("MRD: yes") != std::string::npos);

    RunResult mrd = run_cli({"mrd", file.path.string()});
    CHECK(mrd.status == 0);
    CHECK(mrd.out.find("MRD: yes") != std::string::npos);
}

TEST_CASE("cli minsupports") {
    TempFile file(kExampleSpec);
    RunResult r = run_cli({"minsupports", "-r", "1", file.path.string()});
    CHECK(r.status == 0);
    CHECK(r.out == "<(1,0), (0,1)>\n");
}
