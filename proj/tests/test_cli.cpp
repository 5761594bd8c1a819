#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "support.hpp"

#include <mzv/cli/app.hpp>
#include <mzv/cli/cache.hpp>
#include <mzv/cli/config.hpp>
#include <mzv/numeval/zeta.hpp>

using namespace mzv;
using namespace mzv::cli;
namespace fs = std::filesystem;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run mzv_run(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string &name)
{
    const fs::path dir = fs::temp_directory_path() / ("mzv-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const fs::path p = dir / name;
    fs::remove(p);
    return p;
}

nlohmann::json parse_json(const Run &r)
{
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    return j;
}

} // namespace

TEST_CASE("config defaults and environment overrides")
{
    const Config d;
    CHECK(d.prec_bits == 128);
    CHECK(d.max_weight == 12);
    CHECK(d.max_coeff_bits == 32);
    CHECK(d.output_mode == OutputMode::text);
    CHECK_NOTHROW(d.validate());

    const std::map<std::string, std::string> env{
        {"MZV_PREC", "256"}, {"MZV_MAX_WEIGHT", "9"}, {"MZV_OUTPUT", "json"}, {"MZV_CACHE", "/tmp/x.jsonl"}};
    const auto lookup = [&](const char *k) -> const char * {
        const auto it = env.find(k);
        return it == env.end() ? nullptr : it->second.c_str();
    };
    const Config c = apply_env(Config{}, lookup);
    CHECK(c.prec_bits == 256);
    CHECK(c.max_weight == 9);
    CHECK(c.max_coeff_bits == 32);
    CHECK(c.output_mode == OutputMode::json);
    CHECK(c.cache_path == "/tmp/x.jsonl");

    const auto bad = [](const char *k) -> const char * { return std::string(k) == "MZV_PREC" ? "12x" : nullptr; };
    CHECK_THROWS_AS(apply_env(Config{}, bad), ConfigError);
    const auto low = [](const char *k) -> const char * { return std::string(k) == "MZV_PREC" ? "8" : nullptr; };
    CHECK_THROWS_AS(apply_env(Config{}, low), ConfigError);
    CHECK_THROWS_AS(parse_output_mode("xml"), ConfigError);
}

TEST_CASE("cache round trip")
{
    const fs::path p = scratch("roundtrip.jsonl");
    const Ball b = eval_mzv(MzvIndex{3, 2}, EvalConfig::with_prec(128));
    {
        Cache c(p);
        CHECK(c.size() == 0);
        CHECK_FALSE(c.get("3,2", 128).has_value());
        c.put(CacheEntry{"3,2", 128, b});
        const auto got = c.get("3,2", 128);
        REQUIRE(got.has_value());
        CHECK(got->mid() == b.mid());
        CHECK(got->rad() == b.rad());
    }
    Cache again(p);
    CHECK(again.size() == 1);
    const auto got = again.get("3,2", 100);
    REQUIRE(got.has_value());
    CHECK(got->mid() == b.mid());
    CHECK(got->rad() == b.rad());
    CHECK_FALSE(again.get("3,2", 129).has_value());
    CHECK_FALSE(again.get("2,3", 64).has_value());

    // Replacing the same (key, prec) keeps one line.
    again.put(CacheEntry{"3,2", 128, b});
    again.put(CacheEntry{"3,2", 64, eval_mzv(MzvIndex{3, 2}, EvalConfig::with_prec(64))});
    std::ifstream in(p);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        const auto j = nlohmann::json::parse(line);
        CHECK(j.contains("key"));
        CHECK(j.contains("prec_bits"));
        CHECK(j.contains("midpoint"));
        CHECK(j.contains("radius_exp"));
    }
    CHECK(lines == 2);
    CHECK(again.get("3,2", 64)->rad() == Mag::pow2(-64));
}

TEST_CASE("corrupt cache lines are ignored with a warning")
{
    const fs::path p = scratch("corrupt.jsonl");
    const Ball b = eval_mzv(MzvIndex{2}, EvalConfig::with_prec(64));
    {
        std::ofstream out(p);
        out << CacheEntry{"2", 64, b}.to_json().dump() << "\n";
        out << "{not json\n";
        out << R"({"key":"3","prec_bits":64,"midpoint":"zz","radius_man":"0x1","radius_exp":-64})" << "\n";
        out << R"({"key":"4","prec_bits":64})" << "\n";
    }
    Cache c(p);
    CHECK(c.size() == 1);
    CHECK(c.warnings().size() == 3);
    CHECK(c.get("2", 64)->mid() == b.mid());
    CHECK_FALSE(c.get("3", 64).has_value());
}

TEST_CASE("eval and product output")
{
    const auto e = mzv_run({"eval", "2", "--prec", "64"});
    CHECK(e.code == exit_ok);
    CHECK(e.out.find("1.644934066848226436") != std::string::npos);

    CHECK(mzv_run({"product", "--stuffle", "3", "2"}).out == "(5) + (3,2) + (2,3)\n");
    CHECK(mzv_run({"product", "--shuffle", "2", "2"}).out == "4*(3,1) + 2*(2,2)\n");
    CHECK(mzv_run({"dims", "--max", "7"}).out == "1 0 1 1 1 2 2 3\n");

    const auto r = mzv_run({"reduce", "5"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.rfind("(5) = 4/5*(3,2) + 6/5*(2,3)", 0) == 0);
}

TEST_CASE("exit codes")
{
    CHECK(mzv_run({}).code == exit_usage);
    CHECK(mzv_run({"frobnicate"}).code == exit_usage);
    CHECK(mzv_run({"eval"}).code == exit_usage);
    CHECK(mzv_run({"eval", "1,2"}).code == exit_usage);
    CHECK(mzv_run({"eval", "2", "--prec", "4"}).code == exit_usage);
    CHECK(mzv_run({"product", "3", "2"}).code == exit_usage);
    CHECK(mzv_run({"relations", "--weight", "40"}).code == exit_usage);
    CHECK(mzv_run({"relations", "--weight", "4", "--families", "nope"}).code == exit_usage);
    CHECK(mzv_run({"pslq", "--indices", "2,1;3", "--prec", "64"}).code == exit_usage);
    CHECK(mzv_run({"--help"}).code == exit_ok);

    CHECK(mzv_run({"pslq", "--indices", "2,1;3", "--prec", "128", "--max-coeff-bits", "16"}).code == exit_ok);
    const auto none = mzv_run({"pslq", "--indices", "1;3", "--prec", "256", "--max-coeff-bits", "20"});
    CHECK(none.code == exit_no_result);
    CHECK(none.out.find("no relation") != std::string::npos);

    const auto bad = mzv_run({"eval", "0,2"});
    CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("JSON output of every subcommand passes the schema check")
{
    const std::vector<std::vector<std::string>> cmds{
        {"eval", "3,2", "--prec", "96"},
        {"product", "--stuffle", "3", "2"},
        {"product", "--shuffle", "2", "3"},
        {"relations", "--weight", "5", "--check"},
        {"bound", "--weight", "7"},
        {"reduce", "4,1"},
        {"dims", "--max", "10"},
        {"pslq", "--indices", "2,1;3", "--prec", "128", "--max-coeff-bits", "16"},
        {"pslq", "--indices", "1;3", "--prec", "256", "--max-coeff-bits", "20"},
        {"certify", "--l", "1", "--prec", "512"},
    };
    for (auto args : cmds) {
        args.push_back("--json");
        const auto r = mzv_run(args);
        CHECK(r.code != exit_usage);
        const auto j = parse_json(r);
        const auto errs = json_schema_errors(j);
        CHECK_MESSAGE(errs.empty(), args[0] << ": " << (errs.empty() ? "" : errs[0]));
        // Round trip: dump and re-parse gives the same document.
        CHECK(nlohmann::json::parse(j.dump()) == j);
    }
    CHECK_FALSE(json_schema_errors(nlohmann::json{{"command", "eval"}}).empty());
    CHECK_FALSE(json_schema_errors(nlohmann::json::array()).empty());

    const auto cert = parse_json(mzv_run({"certify", "--l", "1", "--prec", "512", "--json"}));
    CHECK(cert["disclaimer"] == "experimental evidence, not proof");
    CHECK(cert["candidate_set"].size() == 5);
}

TEST_CASE("eval goes through the cache")
{
    const fs::path p = scratch("eval.jsonl");
    const auto first = mzv_run({"eval", "3,1,2", "--prec", "80", "--cache", p.string(), "--json"});
    const auto second = mzv_run({"eval", "3,1,2", "--prec", "80", "--cache", p.string(), "--json"});
    const auto a = parse_json(first);
    const auto b = parse_json(second);
    CHECK(a["cached"] == false);
    CHECK(b["cached"] == true);
    CHECK(a["midpoint"] == b["midpoint"]);
    CHECK(a["decimal"] == b["decimal"]);
    CHECK(fs::exists(p));
}

TEST_CASE("environment selects JSON output")
{
    ::setenv("MZV_OUTPUT", "json", 1);
    const auto r = mzv_run({"dims", "--max", "4"});
    ::unsetenv("MZV_OUTPUT");
    CHECK(parse_json(r)["values"].size() == 5);
}

TEST_CASE("verify-paper is deterministic")
{
    const auto a = mzv_run({"verify-paper"});
    const auto b = mzv_run({"verify-paper"});
    CHECK(a.code == exit_ok);
    CHECK(a.out == b.out);
    CHECK(a.out.find("10/10 passed") != std::string::npos);
}
