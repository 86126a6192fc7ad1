#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fairgather/cli.hpp"

using namespace fairgather;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir()
    {
        path_ = fs::temp_directory_path() / ("fairgather-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string write(const std::string& name, const std::string& text) const
    {
        auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
    static inline int counter_ = 0;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("schedule CSV round trip")
{
    auto g = path_graph(3);
    const std::vector<std::vector<NodeId>> sets{{0, 2}, {}, {1}};
    const auto text = format_schedule_csv(sets);
    CHECK(text == "holiday,happy\n1,0;2\n2,\n3,1\n");
    auto rec = parse_schedule_csv(text, g);
    CHECK(rec.horizon() == 3);
    CHECK(rec.happy_set(1) == sets[0]);
    CHECK(rec.happy_set(2).empty());

    CHECK_THROWS_AS(parse_schedule_csv("holiday,happy\n2,0\n", g), ParseError);
    CHECK_THROWS_AS(parse_schedule_csv("1,0\n", g), ParseError);
    CHECK_THROWS_AS(parse_schedule_csv("holiday,happy\n1,9\n", g), ParseError);
    CHECK_THROWS_AS(parse_schedule_csv("holiday,happy\n1,0;x\n", g), ParseError);
    CHECK_THROWS_AS(parse_schedule_csv("", g), ParseError);
}

TEST_CASE("schedule subcommand reproduces the triangle trace")
{
    TempDir dir;
    auto tri = dir.write("tri.txt", "0 1\n1 2\n0 2\n");
    auto r = run({"schedule", "--input", tri, "--algorithm", "phased", "--holidays", "9"});
    CHECK(r.code == 0);
    CHECK(r.out == "holiday,happy\n1,0\n2,1\n3,2\n4,0\n5,1\n6,2\n7,0\n8,1\n9,2\n");
}

TEST_CASE("bounds subcommand")
{
    auto r = run({"bounds", "--max-color", "4"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "color,rho,period,phi,upper_bound");
    std::vector<std::string> periods;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string c, rho, period;
        std::getline(row, c, ',');
        std::getline(row, rho, ',');
        std::getline(row, period, ',');
        periods.push_back(period);
    }
    CHECK(periods == std::vector<std::string>{"2", "8", "8", "64"});
}

TEST_CASE("verify subcommand")
{
    TempDir dir;
    auto g = dir.write("g.txt", "0 1\n1 2\n");
    auto out = dir.file("s.csv");
    for (std::string alg : {"phased", "elias", "slots", "slots-dist"}) {
        CAPTURE(alg);
        REQUIRE(run({"schedule", "--input", g, "--algorithm", alg, "--holidays", "40", "--output", out}).code == 0);
        auto v = run({"verify", "--input", g, "--schedule", out});
        CHECK(v.code == 0);
        CHECK(v.out.find("dependent=0") != std::string::npos);
    }

    auto tampered = dir.write("bad.csv", "holiday,happy\n1,0\n2,0;1\n");
    auto v = run({"verify", "--input", g, "--schedule", tampered});
    CHECK(v.code == 1);
    CHECK(v.out.find("not independent at holiday 2") != std::string::npos);

    // gap bound enforcement
    auto sparse = dir.write("sparse.csv", "holiday,happy\n1,0;2\n2,1\n3,\n4,\n5,\n6,1\n7,0;2\n");
    CHECK(run({"verify", "--input", g, "--schedule", sparse}).code == 0);
    CHECK(run({"verify", "--input", g, "--schedule", sparse, "--gap-bound", "degree+1"}).code == 1);

    CHECK(run({"verify", "--input", g, "--schedule", tampered, "--window", "9"}).code == 2);
}

TEST_CASE("color, satisfy, gen and dynamic subcommands")
{
    TempDir dir;
    auto tri = dir.write("tri.txt", "0 1\n1 2\n0 2\n");
    CHECK(run({"color", "--input", tri}).out == "0 1\n1 2\n2 3\n");
    auto random = run({"color", "--input", tri, "--mode", "random", "--seed", "42"});
    CHECK(random.code == 0);
    CHECK(random.out.find("# rounds=") != std::string::npos);

    auto sat = run({"satisfy", "--input", tri});
    CHECK(sat.out.starts_with("# satisfied=3\n"));
    CHECK(std::count(sat.out.begin(), sat.out.end(), '\n') == 4);

    auto gen = run({"gen", "--kind", "star", "--n", "3"});
    CHECK(gen.out == "0 1\n0 2\n0 3\n");
    auto er = run({"gen", "--kind", "er", "--n", "30", "--p", "0.2", "--seed", "5"});
    CHECK(er.out == erdos_renyi(30, 0.2, 5).to_edge_list());

    auto pair = dir.write("pair.txt", "node 0\nnode 1\n");
    auto events = dir.write("events.txt", "3 + 0 1\n");
    auto dyn = run({"dynamic", "--input", pair, "--events", events, "--holidays", "10"});
    CHECK(dyn.code == 0);
    CHECK(dyn.out.find("\n2,0;1\n") != std::string::npos);
    CHECK(dyn.out.find("\n9,1\n") != std::string::npos);
    CHECK(dyn.err.find("node 1 color 1 -> 2") != std::string::npos);
}

TEST_CASE("identical configurations produce identical bytes")
{
    TempDir dir;
    auto g = dir.write("g.txt", erdos_renyi(60, 0.1, 11).to_edge_list());
    for (std::string alg : {"phased", "elias", "slots-dist"}) {
        std::vector<std::string> args{"schedule", "--input", g, "--algorithm", alg, "--coloring", "random",
                                      "--holidays", "100", "--seed", "7"};
        CHECK(run(args).out == run(args).out);
    }
}

TEST_CASE("seed falls back to FAIRGATHER_SEED")
{
    TempDir dir;
    auto g = dir.write("g.txt", erdos_renyi(60, 0.1, 11).to_edge_list());
    auto with_flag = run({"color", "--input", g, "--mode", "random", "--seed", "123"});
    ::setenv("FAIRGATHER_SEED", "123", 1);
    auto with_env = run({"color", "--input", g, "--mode", "random"});
    ::setenv("FAIRGATHER_SEED", "oops", 1);
    auto bad_env = run({"color", "--input", g, "--mode", "random"});
    ::unsetenv("FAIRGATHER_SEED");
    CHECK(with_flag.out == with_env.out);
    CHECK(bad_env.code == 2);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"bounds"}).code == 2);
    CHECK(run({"schedule", "--input", "/nonexistent/file", "--holidays", "3"}).code == 2);
    CHECK(run({"bounds", "--max-color", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    TempDir dir;
    auto loop = dir.write("loop.txt", "0 0\n");
    auto r = run({"color", "--input", loop});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 1") != std::string::npos);
}
