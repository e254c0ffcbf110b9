#include <doctest.h>
#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "bbk/cli.hpp"
#include "test_support.hpp"

using namespace bbk;
using namespace bbk::cli;
using namespace bbk::test;
namespace fs = std::filesystem;

namespace {

// Self-cleaning scratch directory, unique across parallel test processes.
struct TempDir {
    fs::path path;
    TempDir() {
        static std::atomic<int> counter{0};
        path = fs::temp_directory_path() /
               ("bbk_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    fs::path file(const char* name) const { return path / name; }
};

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream f(p);
    REQUIRE(f.is_open());
    f << content;
}

std::string read_file(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.is_open());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

// Runs the front end against kExampleEdgeList with extra config applied.
int run_example(const TempDir& dir, RunConfig config, std::string* out_text = nullptr,
                std::string* stats_text = nullptr, std::string* err_text = nullptr) {
    const fs::path in = dir.file("in.txt");
    if (!fs::exists(in)) write_file(in, kExampleEdgeList);
    config.input_path = in.string();
    if (config.output_path.empty()) config.output_path = dir.file("out.txt").string();
    if (stats_text && config.stats_path.empty()) config.stats_path = dir.file("stats.json").string();
    std::ostringstream err;
    const int rc = cli::run(config, err);
    if (out_text) *out_text = read_file(config.output_path);
    if (stats_text) *stats_text = read_file(config.stats_path);
    if (err_text) *err_text = err.str();
    return rc;
}

const std::vector<std::string> kGoldenSorted = {
    "\tA B C D E", "1\tA B", "1 2 3\tB", "2 3\tB C D", "3\tB C D E",
};

}  // namespace

TEST_CASE("cli: example sorted listing matches the golden five lines") {
    TempDir dir;
    RunConfig config;
    config.sort_output = true;
    std::string out;
    REQUIRE(run_example(dir, config, &out) == kExitOk);
    CHECK(split_lines(out) == kGoldenSorted);
}

TEST_CASE("cli: count mode prints the total and nothing else") {
    TempDir dir;
    RunConfig config;
    config.output_mode = OutputMode::Count;
    std::string out;
    REQUIRE(run_example(dir, config, &out) == kExitOk);
    CHECK(out == "5\n");

    config.include_trivial = false;
    REQUIRE(run_example(dir, config, &out) == kExitOk);
    CHECK(out == "4\n");
}

TEST_CASE("cli: include_trivial off drops exactly the one-sided line") {
    TempDir dir;
    RunConfig config;
    config.sort_output = true;
    config.include_trivial = false;
    std::string out;
    REQUIRE(run_example(dir, config, &out) == kExitOk);
    const std::vector<std::string> expected(kGoldenSorted.begin() + 1, kGoldenSorted.end());
    CHECK(split_lines(out) == expected);
}

TEST_CASE("cli: all three engines produce identical sorted output") {
    TempDir dir;
    RunConfig config;
    config.sort_output = true;
    std::string bbk_out, ext_out, brute_out;

    config.engine = EngineChoice::Bbk;
    REQUIRE(run_example(dir, config, &bbk_out) == kExitOk);
    config.engine = EngineChoice::Extended;
    REQUIRE(run_example(dir, config, &ext_out) == kExitOk);
    config.engine = EngineChoice::Brute;
    REQUIRE(run_example(dir, config, &brute_out) == kExitOk);

    CHECK(bbk_out == ext_out);
    CHECK(bbk_out == brute_out);
    CHECK(split_lines(bbk_out) == kGoldenSorted);
}

TEST_CASE("cli: initiating side does not change the sorted output") {
    TempDir dir;
    RunConfig config;
    config.sort_output = true;
    std::string left_out, right_out;

    config.side = SideChoice::Left;
    REQUIRE(run_example(dir, config, &left_out) == kExitOk);
    config.side = SideChoice::Right;
    REQUIRE(run_example(dir, config, &right_out) == kExitOk);

    CHECK(left_out == right_out);
    CHECK(split_lines(left_out) == kGoldenSorted);
}

TEST_CASE("cli: stats document for the letter-side run carries the frozen trace") {
    TempDir dir;
    RunConfig config;
    config.side = SideChoice::Right;
    std::string out, stats;
    REQUIRE(run_example(dir, config, &out, &stats) == kExitOk);

    const auto j = nlohmann::ordered_json::parse(stats);
    // exact key set, in writer order
    const std::vector<std::string> expected_keys = {
        "biclique_count", "leaf_count", "internal_count", "ratio_r", "q_observed",
        "b_max",          "b_mean",     "d_U",            "d_V",     "d2_U",
        "d2_V",           "elapsed_ms", "side_used",      "engine",  "include_trivial",
    };
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == expected_keys);

    CHECK(j["biclique_count"] == 5);
    CHECK(j["leaf_count"] == 5);
    CHECK(j["internal_count"] == 9);
    CHECK(j["ratio_r"].get<double>() == doctest::Approx(0.8).epsilon(1e-9));
    CHECK(j["q_observed"] == 5);
    CHECK(j["b_max"] == 4);
    CHECK(j["b_mean"].get<double>() == doctest::Approx(3.2).epsilon(1e-9));
    CHECK(j["d_U"] == 3);   // letters play U here
    CHECK(j["d_V"] == 4);
    CHECK(j["d2_U"] == 4);
    CHECK(j["d2_V"] == 2);
    CHECK(j["elapsed_ms"].get<double>() >= 0.0);
    CHECK(j["side_used"] == "right");
    CHECK(j["engine"] == "bbk");
    CHECK(j["include_trivial"] == true);

    // the ratio is printed with at least six significant digits
    CHECK(stats.find("\"ratio_r\": 0.800000000000") != std::string::npos);
}

TEST_CASE("cli: default side picks the smaller part") {
    TempDir dir;
    RunConfig config;  // side = Smaller; numbers (3) vs letters (5)
    std::string out, stats;
    REQUIRE(run_example(dir, config, &out, &stats) == kExitOk);

    const auto j = nlohmann::json::parse(stats);
    CHECK(j["side_used"] == "left");
    CHECK(j["biclique_count"] == 5);
    CHECK(j["q_observed"] == 5);
    CHECK(j["b_max"] == 4);
    CHECK(j["b_mean"].get<double>() == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(j["d_U"] == 4);  // numbers play U here
    CHECK(j["d_V"] == 3);
    CHECK(j["d2_U"] == 2);
    CHECK(j["d2_V"] == 4);
    const double r = j["ratio_r"].get<double>();
    CHECK(r > 0.0);
    CHECK(r <= 1.0);
}

TEST_CASE("cli: brute engine reports exact counts but a null ratio") {
    TempDir dir;
    RunConfig config;
    config.engine = EngineChoice::Brute;
    std::string out, stats;
    REQUIRE(run_example(dir, config, &out, &stats) == kExitOk);

    const auto j = nlohmann::json::parse(stats);
    CHECK(j["biclique_count"] == 5);
    CHECK(j["leaf_count"] == 0);
    CHECK(j["ratio_r"].is_null());
    CHECK(j["q_observed"] == 5);
    CHECK(j["engine"] == "brute");
}

TEST_CASE("cli: mean-bidegen picks the side with the smaller mean") {
    // Star with the center alone on the left: the center's order has mean 4,
    // the leaves' order has mean 2.5, so mean-bidegen must pick the larger
    // (right) side where plain 'smaller' would pick the left.
    TempDir dir;
    write_file(dir.file("star.txt"), "c l1\nc l2\nc l3\nc l4\n");
    RunConfig config;
    config.input_path = dir.file("star.txt").string();
    config.output_path = dir.file("out.txt").string();
    config.stats_path = dir.file("stats.json").string();
    config.side = SideChoice::MeanBidegen;
    std::ostringstream err;
    REQUIRE(cli::run(config, err) == kExitOk);
    auto j = nlohmann::json::parse(read_file(dir.file("stats.json")));
    CHECK(j["side_used"] == "right");
    CHECK(j["b_mean"].get<double>() == doctest::Approx(2.5).epsilon(1e-9));

    config.side = SideChoice::Smaller;
    REQUIRE(cli::run(config, err) == kExitOk);
    j = nlohmann::json::parse(read_file(dir.file("stats.json")));
    CHECK(j["side_used"] == "left");
}

TEST_CASE("cli: empty input yields zero bicliques and a null ratio") {
    TempDir dir;
    write_file(dir.file("empty.txt"), "# nothing but comments\n");
    RunConfig config;
    config.input_path = dir.file("empty.txt").string();
    config.output_path = dir.file("out.txt").string();
    config.stats_path = dir.file("stats.json").string();
    config.output_mode = OutputMode::Count;
    std::ostringstream err;
    REQUIRE(cli::run(config, err) == kExitOk);
    CHECK(read_file(dir.file("out.txt")) == "0\n");
    const auto j = nlohmann::json::parse(read_file(dir.file("stats.json")));
    CHECK(j["biclique_count"] == 0);
    CHECK(j["ratio_r"].is_null());
    CHECK(j["b_mean"] == 0.0);
}

TEST_CASE("cli: usage errors exit 1") {
    TempDir dir;
    std::ostringstream err;

    SUBCASE("missing input file") {
        RunConfig config;
        config.input_path = dir.file("no_such_file.txt").string();
        CHECK(cli::run(config, err) == kExitUsage);
        CHECK(!err.str().empty());
    }
    SUBCASE("malformed line") {
        write_file(dir.file("bad.txt"), "lonely_token\n");
        RunConfig config;
        config.input_path = dir.file("bad.txt").string();
        config.output_path = dir.file("out.txt").string();
        CHECK(cli::run(config, err) == kExitUsage);
        CHECK(!err.str().empty());
    }
    SUBCASE("sort-output with count mode") {
        RunConfig config;
        config.sort_output = true;
        config.output_mode = OutputMode::Count;
        CHECK(run_example(dir, config) == kExitUsage);
    }
    SUBCASE("unwritable output path") {
        RunConfig config;
        config.output_path = (dir.path / "missing_dir" / "out.txt").string();
        CHECK(run_example(dir, config) == kExitUsage);
    }
}

TEST_CASE("cli: oracle capacity overflow exits 2") {
    TempDir dir;
    std::string edges;
    for (int i = 0; i < 21; ++i) edges += "u" + std::to_string(i) + " v\n";
    write_file(dir.file("wide.txt"), edges);
    RunConfig config;
    config.input_path = dir.file("wide.txt").string();
    config.output_path = dir.file("out.txt").string();
    config.engine = EngineChoice::Brute;
    config.side = SideChoice::Left;  // 21 vertices, over the brute-force cap
    std::ostringstream err;
    CHECK(cli::run(config, err) == kExitCapacity);
    CHECK(!err.str().empty());
}

TEST_CASE("cli: format_biclique") {
    const auto g = example_graph();
    const std::vector<VertexId> numbers = {L1, L2, L3};
    const std::vector<VertexId> letters = {RA, RB, RC, RD, RE};
    const std::vector<VertexId> none;

    CHECK(format_biclique(g, {numbers.data(), 1}, {letters.data(), 2}) == "1\tA B");
    CHECK(format_biclique(g, numbers, {&letters[1], 1}) == "1 2 3\tB");
    CHECK(format_biclique(g, none, letters) == "\tA B C D E");
    CHECK(format_biclique(g, numbers, none) == "1 2 3\t");
    CHECK(format_biclique(g, none, none) == "\t");
}

TEST_CASE("cli: identical runs are byte-identical modulo elapsed_ms") {
    TempDir dir;
    RunConfig config;
    config.sort_output = true;
    std::string out1, stats1, out2, stats2;
    REQUIRE(run_example(dir, config, &out1, &stats1) == kExitOk);
    REQUIRE(run_example(dir, config, &out2, &stats2) == kExitOk);
    CHECK(out1 == out2);
    auto j1 = nlohmann::ordered_json::parse(stats1);
    auto j2 = nlohmann::ordered_json::parse(stats2);
    j1.erase("elapsed_ms");
    j2.erase("elapsed_ms");
    CHECK(j1 == j2);
}
