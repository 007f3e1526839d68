#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "gensq/cli.hpp"

using namespace gensq;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) v.push_back(line);
    return v;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("kruns of the worked string")
{
    const Run r = run({"kruns", "--text", fixtures::kruns_string, "-k", "2", "--period", "8"});
    CHECK(r.code == exit_ok);
    CHECK(lines(r.out) == std::vector<std::string>{"krun\t1\t18\t8\t2", "krun\t5\t24\t8\t2"});
}

TEST_CASE("uniform runs and MGRs of the worked string")
{
    const Run u = run({"uniform", "--text", fixtures::kruns_string, "-k", "2", "--period", "8"});
    CHECK(lines(u.out) == std::vector<std::string>{"uniform\t1\t18\t8\t2", "uniform\t5\t22\t8\t2", "uniform\t8\t24\t8\t2"});
    const Run m = run({"mgr", "--text", fixtures::kruns_string, "--period", "8"});
    bool found = false;
    for (const auto& line : lines(m.out)) found |= line == "mgr\t8\t18\t8\t3";
    CHECK(found);
}

TEST_CASE("file input and empty files")
{
    const auto path = temp_file("gensq_cli_kruns.txt", std::string(fixtures::kruns_string) + "\n");
    CHECK(lines(run({"kruns", path.string(), "-k", "2", "--period", "8"}).out).size() == 2);
    const auto empty = temp_file("gensq_cli_empty.txt", "");
    for (const char* cmd : {"kruns", "uniform", "mgr", "gruns", "psquares"}) {
        const Run r = run({cmd, empty.string()});
        CHECK(r.code == exit_ok);
        CHECK(r.out.empty());
    }
    const Run c = run({"count", empty.string(), "--relation", "exact"});
    CHECK(c.out == "exact\t0\t0\t0\t0\n");
    std::filesystem::remove(path);
    std::filesystem::remove(empty);
    CHECK(run({"kruns", path.string()}).code == exit_usage);
}

TEST_CASE("header and jsonl output")
{
    const Run h = run({"gruns", "--text", "abab", "--header"});
    CHECK(lines(h.out) == std::vector<std::string>{"kind\tstart\tend\tperiod\textra", "grun\t1\t4\t2\t-"});
    const Run j = run({"gruns", "--text", "abab", "--format", "jsonl"});
    CHECK(j.out.find("\"v\":1") != std::string::npos);
    CHECK(j.out.find("\"kind\":\"grun\"") != std::string::npos);
}

TEST_CASE("count")
{
    CHECK(run({"count", "--text", "aaaa", "--relation", "exact"}).out.rfind("exact\t2\t2\t2\t", 0) == 0);
    const Run all = run({"count", "--text", "abab", "--relation", "all"});
    CHECK(lines(all.out).size() == 5);
    const Run timed = run({"count", "--text", "abab", "--timing"});
    CHECK(lines(timed.out).front().find("param\t2\t3\t") == 0);
    CHECK(run({"count", "--text", "abab", "--relation", "nope"}).code == exit_usage);
}

TEST_CASE("psquares")
{
    CHECK(lines(run({"psquares", "--text", "aa"}).out).size() == 1);
    CHECK(lines(run({"psquares", "--text", "abab", "--mode", "distinct"}).out).size() == 3);
    CHECK(lines(run({"psquares", "--text", fixtures::square_kinds}).out).size() > 0);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"kruns", "--text", "ab", "--period", "0"}).code == exit_usage);
    CHECK(run({"kruns", "--ints", "--text", "1 x"}).code == exit_usage);
    CHECK(run({"kruns", "--text", "ab", "--random", "5"}).code == exit_usage);
    const Run cap = run({"verify", "--max-n", "300"});
    CHECK(cap.code == exit_usage);
    CHECK_FALSE(cap.err.empty());
}

TEST_CASE("random input is deterministic")
{
    const Run a = run({"uniform", "--random", "200", "--sigma", "3", "--seed", "9"});
    const Run b = run({"uniform", "--random", "200", "--sigma", "3", "--seed", "9", "--threads", "3"});
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("bounds")
{
    const Run r = run({"bounds", "--sizes", "200,400", "--k", "1", "--sigma", "2", "--extended-max", "200"});
    CHECK(r.code == exit_ok);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0].rfind("n,k,sigma", 0) == 0);
    CHECK(ls[2].find("NA") != std::string::npos);
    CHECK(ls[1].find("NA") == std::string::npos);
}

TEST_CASE("verify")
{
    const std::vector<std::string> small{"verify", "--texts", "20", "--max-n", "40", "--exhaustive-n", "5", "--ops", "500"};
    const Run a = run(small);
    CHECK(a.code == exit_ok);
    CHECK(a.out == run(small).out);
    auto mutated = small;
    mutated.insert(mutated.end(), {"--mutate", "counting"});
    CHECK(run(mutated).code == exit_verify_failed);
    mutated.back() = "windowing";
    CHECK(run(mutated).code == exit_verify_failed);
}
