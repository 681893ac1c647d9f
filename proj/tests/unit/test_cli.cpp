#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "seacalc/cli.hpp"
#include "seacalc/config.hpp"

using namespace seacalc;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "seacalc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

const std::string kGolden = std::string(SEACALC_TEST_DATA) + "/leading_orders.tsv";

}  // namespace

TEST_CASE("expand") {
    auto r = run({"expand", "Ktilde", "--layer", "b", "--order", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "k - kBs - sBk\n");

    r = run({"expand", "X", "--order", "1", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["terms"].empty());

    r = run({"expand", "P", "--order", "0", "--format", "json"});
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["terms"].size() == 2);
    CHECK(doc["terms"][0]["num"] == 1);
    CHECK(doc["terms"][1]["num"] == -1);

    r = run({"expand", "Ktilde", "--order", "2", "--wrapper", "checked"});
    CHECK(r.out.find("1/2*pi^2*pbpbk") != std::string::npos);
    r = run({"expand", "Ktilde", "--order", "2"});
    CHECK(r.out == "k - pi^2*kbkbk\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"expand", "Nope"}).code == kExitUsage);
    CHECK(run({"expand", "X", "--order", "-1"}).code == kExitUsage);
    CHECK(run({"expand", "X", "--layer", "q"}).code == kExitUsage);
    CHECK(run({"expand", "X", "--layer", "b", "--wrapper", "checked"}).code == kExitUsage);
    CHECK(run({"expand", "X", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"verify", "nope"}).code == kExitUsage);
    CHECK(run({"verify", "routes", "--mutate", "nope"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"golden", "check", "/nonexistent/file.tsv"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify") {
    auto r = run({"verify", "idempotence", "--order", "0"});
    CHECK(r.code == 0);
    r = run({"verify", "golden", "--golden", kGolden});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS", 0) == 0);

    r = run({"verify", "routes", "--order", "4", "--mutate", "flip-c(1,1)"});
    CHECK(r.code == kExitCheckFailed);

    r = run({"verify", "counting", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.is_array());
    CHECK(doc[0]["passed"] == true);
}

TEST_CASE("verify golden with a corrupted table") {
    std::ifstream in(kGolden);
    std::stringstream all;
    all << in.rdbuf();
    std::string text = all.str();
    const std::string from = "Ktilde\tkBkBk\t2\t-1\t1";
    REQUIRE(text.find(from) != std::string::npos);
    text.replace(text.find(from), from.size(), "Ktilde\tkBkBk\t2\t1\t1");
    const auto path = temp_file("seacalc_corrupt.tsv", text);

    auto r = run({"verify", "golden", "--golden", path.string(), "--format", "json"});
    CHECK(r.code == kExitCheckFailed);
    const auto doc = nlohmann::json::parse(r.out);
    int failing = 0;
    for (const auto& w : doc[0]["witnesses"]) failing += !w["passed"].get<bool>();
    CHECK(failing == 1);

    r = run({"golden", "check", path.string()});
    CHECK(r.code == kExitCheckFailed);
    CHECK(run({"golden", "check", kGolden}).code == 0);

    const auto broken = temp_file("seacalc_broken.tsv", "Ktilde\tkBkBk\t2\n");
    r = run({"golden", "check", broken.string()});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find(":1") != std::string::npos);
}

TEST_CASE("coeff") {
    auto r = run({"coeff", "--max", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1\t1/2\t-1/2") != std::string::npos);
    CHECK(r.out.find("2\t-1/8\t3/8") != std::string::npos);
    CHECK(r.out.find("1\t1\t-1/2 pi^2") != std::string::npos);
    r = run({"coeff", "--max", "1", "--format", "json"});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["e"][1]["value"]["num"] == "-1");
}

TEST_CASE("config file") {
    std::istringstream in("# defaults\norder_pk = 4\n\nformat=json\n");
    const CliConfig c = parse_config(in, "cfg");
    CHECK(c.default_order_pk == 4);
    CHECK(c.default_order_b == 3);
    CHECK(c.format == OutputFormat::Json);

    std::istringstream bad_key("colour = red\n");
    CHECK_THROWS_AS(parse_config(bad_key, "cfg"), ConfigError);
    std::istringstream bad_order("order_b = -3\n");
    CHECK_THROWS_AS(parse_config(bad_order, "cfg"), ConfigError);
    std::istringstream no_eq("order_b 3\n");
    CHECK_THROWS_AS(parse_config(no_eq, "cfg"), ConfigError);

    const auto path = temp_file("seacalc_test.cfg", "order_pk=2\nformat=latex\n");
    ::setenv(kConfigEnvVar, path.c_str(), 1);
    auto r = run({"expand", "PtildeRes"});
    ::unsetenv(kConfigEnvVar);
    CHECK(r.code == 0);
    CHECK(r.out == "p - \\pi^{2} pbpbp\n");

    const auto broken = temp_file("seacalc_bad.cfg", "format = xml\n");
    ::setenv(kConfigEnvVar, broken.c_str(), 1);
    r = run({"expand", "X"});
    ::unsetenv(kConfigEnvVar);
    CHECK(r.code == kExitUsage);
}

TEST_CASE("installed binary reports exit codes") {
    const std::string cli = SEACALC_CLI_PATH;
    CHECK(std::system((cli + " verify idempotence --order 2 > /dev/null").c_str()) == 0);
    const int status = std::system((cli + " expand Nope 2> /dev/null").c_str());
    CHECK(WEXITSTATUS(status) == 2);
}
