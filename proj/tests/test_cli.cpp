#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "parhiggs/cache.hpp"
#include "parhiggs/cli.hpp"

using namespace parhiggs;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() /
                         (tag + "." + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("text, csv and json renderings") {
    const RunResult text = run({"higgs", "--genus", "0", "--points", "3"});
    CHECK(text.code == 0);
    CHECK(text.out == "1 + 7*t^2\n");
    CHECK(text.err.empty());

    const RunResult csv =
        run({"higgs", "--genus", "0", "--points", "3", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "degree,coefficient\n0,1\n2,7\n");

    const RunResult breakdown =
        run({"higgs", "--genus", "0", "--points", "3", "--breakdown"});
    CHECK(breakdown.code == 0);
    CHECK(breakdown.out.find("type_111: 1 + 7*t^2\n") != std::string::npos);
    CHECK(breakdown.out.find("type_3: 0\n") != std::string::npos);
    CHECK(breakdown.out.find("total: 1 + 7*t^2\n") != std::string::npos);

    const RunResult js = run(
        {"higgs", "--genus", "1", "--points", "1", "--format", "json"});
    CHECK(js.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(js.out);
    CHECK(doc.at("degree") == 8);
    CHECK(doc.at("euler_char") == "0");
    CHECK(doc.at("params").at("genus") == 1);
    CHECK(doc.at("params").at("det") == "varying");
    const std::vector<std::string> expect = {"1",  "2",  "4",  "8", "13",
                                             "20", "24", "18", "6"};
    const auto& poincare = doc.at("poincare");
    REQUIRE(poincare.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) {
        CHECK(poincare[i].at("deg") == static_cast<long>(i));
        CHECK(poincare[i].at("coeff") == expect[i]);
    }
    CHECK(!doc.contains("breakdown"));
}

TEST_CASE("other subcommands produce sensible output") {
    const RunResult sym = run({"symprod", "--genus", "2", "--power", "3"});
    CHECK(sym.code == 0);
    CHECK(sym.out == "1 + 4*t + 7*t^2 + 8*t^3 + 7*t^4 + 4*t^5 + t^6\n");

    const RunResult bundles =
        run({"bundles", "--genus", "1", "--points", "1", "--fixed"});
    CHECK(bundles.code == 0);
    CHECK(bundles.out == "1 + 2*t^2 + 2*t^4 + t^6\n");

    const RunResult walls =
        run({"walls", "--genus", "1", "--points", "1", "--d1", "0", "--d2",
             "0"});
    CHECK(walls.code == 0);
    CHECK(walls.out.find("3 wall(s)") != std::string::npos);
    CHECK(walls.out.find("sigma_c=3 ") != std::string::npos);

    const RunResult strata =
        run({"strata", "--genus", "0", "--points", "3", "--type", "111"});
    CHECK(strata.code == 0);
    CHECK(strata.out.find("7 stratum(a)") != std::string::npos);

    const RunResult triples =
        run({"triples", "--genus", "1", "--points", "1", "--d1", "0", "--d2",
             "0", "--sigma", "1/2"});
    CHECK(triples.code == 0);
    CHECK(triples.out.find("t^") != std::string::npos);

    const RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("higgs") != std::string::npos);
}

TEST_CASE("validation failures exit with code 2 and a machine-readable "
          "error") {
    const RunResult bad_flag = run({"higgs", "--genus", "-1", "--points", "1"});
    CHECK(bad_flag.code == 2);
    CHECK(nlohmann::json::parse(bad_flag.err).at("error").at("type") ==
          "usage");

    const RunResult no_sub = run({});
    CHECK(no_sub.code == 2);

    const RunResult on_wall =
        run({"triples", "--genus", "1", "--points", "1", "--d1", "0", "--d2",
             "0", "--sigma", "3"});
    CHECK(on_wall.code == 2);
    CHECK(nlohmann::json::parse(on_wall.err).at("error").at("type") ==
          "validation");

    const RunResult missing_file = run({"higgs", "--genus", "1", "--points",
                                        "1", "--weights",
                                        "/nonexistent.json"});
    CHECK(missing_file.code == 2);
}

TEST_CASE("weight files: exact rationals only") {
    const fs::path dir = fresh_dir("parhiggs_cli_weights");
    const fs::path good = dir / "good.json";
    std::ofstream(good) << R"([["1/997","2/997","3/997"],)"
                        << R"(["4/997","5/997","6/997"],)"
                        << R"(["7/997","8/997","9/997"]])";
    const RunResult ok = run({"higgs", "--genus", "0", "--points", "3",
                              "--weights", good.string()});
    CHECK(ok.code == 0);
    CHECK(ok.out == "1 + 7*t^2\n");

    const fs::path decimals = dir / "decimals.json";
    std::ofstream(decimals) << R"([["0.001","2/997","3/997"],)"
                            << R"(["4/997","5/997","6/997"],)"
                            << R"(["7/997","8/997","9/997"]])";
    const RunResult rejected = run({"higgs", "--genus", "0", "--points", "3",
                                    "--weights", decimals.string()});
    CHECK(rejected.code == 2);
    CHECK(rejected.err.find("decimal") != std::string::npos);

    const fs::path wrong_count = dir / "short.json";
    std::ofstream(wrong_count) << R"([["1/997","2/997","3/997"]])";
    const RunResult short_run = run({"higgs", "--genus", "0", "--points", "3",
                                     "--weights", wrong_count.string()});
    CHECK(short_run.code == 2);
    fs::remove_all(dir);
}

TEST_CASE("check suites and their exit codes") {
    const RunResult confirmed =
        run({"check", "--suite", "hausel", "--genus", "0", "--points", "3"});
    CHECK(confirmed.code == 0);
    CHECK(confirmed.out.find("CONJECTURE-CONFIRMED") != std::string::npos);

    const RunResult refuted =
        run({"check", "--suite", "hausel", "--genus", "1", "--points", "1"});
    CHECK(refuted.code == 3);
    CHECK(refuted.out.find("CONJECTURE-REFUTED-AS-PRINTED") !=
          std::string::npos);
    CHECK(refuted.out.find("(1+t)^(2g)") != std::string::npos);
    CHECK(nlohmann::json::parse(refuted.err).at("error").at("type") ==
          "conjecture-refuted");

    const RunResult euler_bad =
        run({"check", "--suite", "euler", "--genus", "1", "--points", "1"});
    CHECK(euler_bad.code == 1);
    CHECK(euler_bad.out.find("24") != std::string::npos);

    const RunResult euler_ok =
        run({"check", "--suite", "euler", "--genus", "2", "--points", "1"});
    CHECK(euler_ok.code == 0);

    const RunResult oracle =
        run({"check", "--suite", "oracle", "--genus", "1", "--points", "1"});
    CHECK(oracle.code == 0);
    CHECK(oracle.out.find("FAIL") == std::string::npos);
}

TEST_CASE("result cache: stable key, byte-identical replay, corruption "
          "recovery") {
    const fs::path dir = fresh_dir("parhiggs_cli_cache");
    ::setenv("PARHIGGS_CACHE_DIR", dir.c_str(), 1);

    const std::vector<std::string> args = {"higgs",    "--genus",  "1",
                                           "--points", "1",        "--format",
                                           "json"};
    const RunResult first = run(args);
    CHECK(first.code == 0);
    // exactly one entry, named by the 64-bit key hash
    std::vector<fs::path> entries;
    for (const auto& e : fs::directory_iterator(dir)) entries.push_back(e);
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].extension() == ".json");

    const RunResult second = run(args);
    CHECK(second.code == 0);
    CHECK(second.out == first.out); // replay is byte-identical

    // different parameters get a different entry
    const RunResult other = run({"higgs", "--genus", "0", "--points", "3"});
    CHECK(other.code == 0);
    size_t count = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        (void)e;
        ++count;
    }
    CHECK(count == 2);

    // a corrupt entry is reported, recomputed and replaced
    std::ofstream(entries[0]) << "not json at all";
    const RunResult healed = run(args);
    CHECK(healed.code == 0);
    CHECK(healed.out == first.out);
    CHECK(healed.err.find("corrupt") != std::string::npos);
    const RunResult replay = run(args);
    CHECK(replay.out == first.out);
    CHECK(replay.err.empty());

    ::unsetenv("PARHIGGS_CACHE_DIR");
    fs::remove_all(dir);

    // hashing helper is stable across platforms and runs
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}
