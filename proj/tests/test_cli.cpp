#include <doctest.h>

#include <gie/action_file.hpp>
#include <gie/cli.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <sys/wait.h>

using namespace gie;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("gie_cli_test_" + std::to_string(std::rand()) + "_" +
                                            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

const char* kGaussian2 = R"({"n": 2, "A0": "0", "A2": [["2", "1/2"], ["0", "3"]]})";
const char* kJJ = R"([["0","1","0","0"],["-1","0","0","0"],["0","0","0","1"],["0","0","-1","0"]])";

} // namespace

TEST_CASE("solve reports the n=3 impossibility") {
    Run r = run({"solve", "--n", "3", "--mu", "4"});
    CHECK(r.code == kExitFailure);
    CHECK(r.err.find("NoSolution: consistency (λ∓1)³ ≠ 0") != std::string::npos);
    Json doc = parse_json_text(r.out);
    CHECK(doc["status"] == "NoSolution");
    CHECK(doc["branches"].size() == 2);

    Run one = run({"solve", "--n", "3", "--mu", "1"});
    CHECK(one.code == kExitOk);
    CHECK(parse_json_text(one.out)["status"] == "GaussianOnly");
}

TEST_CASE("solve n=2 writes a verified family member") {
    Run r = run({"solve", "--n", "2", "--mu", "4"});
    CHECK(r.code == kExitOk);
    Json doc = parse_json_text(r.out);
    CHECK(doc["status"] == "Solution");
    CHECK(doc["A4"] == Json{{"12,12", "-3"}});
    CHECK(doc["verified"] == true);
    CHECK(doc["residuals"]["zero"] == true);
    CHECK(grand_constant_from_json(doc["delta_f"]) == GrandConstant::log(4, 2));
}

TEST_CASE("solve then map round trip at the n=4 fixed point") {
    TempDir dir;
    write_text_file(dir.file("jj.json"), kJJ);
    Run s = run({"solve", "--n", "4", "--kappa", "0", "--a2", dir.file("jj.json"), "--output", dir.file("out.json")});
    REQUIRE(s.code == kExitOk);
    CHECK(s.out.empty());
    Json solved = parse_json_text(read_text_file(dir.file("out.json")));
    CHECK(solved["A8"] == "-9");
    CHECK(solved["mu"] == "1");

    Run m = run({"map", "--input", dir.file("out.json"), "--method", "both"});
    CHECK(m.code == kExitOk);
    Json mapped = parse_json_text(m.out);
    CHECK(mapped["residuals"]["methods_agree"] == true);
    CHECK(mapped["residuals"]["rescale"]["zero"] == true);
    CHECK(mapped["residuals"]["rescale"]["mu"] == "1");
    CHECK(mapped["A8"] == "-9");
    CHECK(mapped["A0"] == "0");

    Run missing = run({"solve", "--n", "4", "--a2", dir.file("jj.json")});
    CHECK(missing.code == kExitInputError);
    Run mismatch = run({"solve", "--n", "4", "--kappa", "0", "--mu", "2", "--a2", dir.file("jj.json")});
    CHECK(mismatch.code == kExitFailure);
}

TEST_CASE("map keeps gaussian actions") {
    TempDir dir;
    write_text_file(dir.file("g.json"), kGaussian2);
    Run m = run({"map", "--input", dir.file("g.json"), "--method", "both"});
    CHECK(m.code == kExitOk);
    Json doc = parse_json_text(m.out);
    CHECK(doc["A2"] == parse_json_text(R"([["2","1/2"],["0","3"]])"));
    CHECK(!doc.contains("A4"));
    CHECK(grand_constant_from_json(doc["A0"]) == GrandConstant::log(6));
    CHECK(doc["partition_tower"].contains("P4*"));

    for (const char* method : {"brute", "closed"}) {
        Run single = run({"map", "--input", dir.file("g.json"), "--method", method});
        CHECK(single.code == kExitOk);
        Json d = parse_json_text(single.out);
        CHECK(d["method"] == method);
        CHECK(d["A2"] == doc["A2"]);
    }
    Run fl = run({"map", "--input", dir.file("g.json"), "--float"});
    CHECK(fl.code == kExitOk);
}

TEST_CASE("input errors exit with 1") {
    TempDir dir;
    write_text_file(dir.file("bad.json"), "{\"n\": 2, ");
    CHECK(run({"map", "--input", dir.file("bad.json")}).code == kExitInputError);
    CHECK(run({"map", "--input", dir.file("absent.json")}).code == kExitInputError);
    CHECK(run({"map"}).code == kExitInputError);
    CHECK(run({}).code == kExitInputError);
    CHECK(run({"frobnicate"}).code == kExitInputError);
    CHECK(run({"solve", "--n", "2", "--mu", "-1"}).code == kExitInputError);
    CHECK(run({"solve", "--n", "5", "--mu", "1"}).code == kExitInputError);
    CHECK(run({"verify", "--n", "7"}).code == kExitInputError);
    CHECK(run({"series", "--check", "nothing"}).code == kExitInputError);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify and identities are deterministic") {
    Run a = run({"verify", "--n", "2", "--trials", "3", "--seed", "5"});
    Run b = run({"verify", "--n", "2", "--trials", "3", "--seed", "5"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out.find("seed 5") != std::string::npos);

    Run i = run({"identities", "--trials", "2", "--seed", "9"});
    CHECK(i.code == kExitOk);
    CHECK(i.out.find("FAIL") == std::string::npos);
    CHECK(i.out == run({"identities", "--trials", "2", "--seed", "9"}).out);
}

TEST_CASE("the seed defaults to GIE_SEED") {
    setenv("GIE_SEED", "17", 1);
    Run a = run({"verify", "--n", "3", "--trials", "2"});
    unsetenv("GIE_SEED");
    CHECK(a.code == kExitOk);
    CHECK(a.out.find("seed 17") != std::string::npos);
    CHECK(run({"verify", "--n", "3", "--trials", "2"}).out.find("seed 1\n") != std::string::npos);
}

TEST_CASE("series checks") {
    CHECK(run({"series", "--check", "babbage"}).code == kExitOk);
    Run root = run({"series", "--check", "root", "--degree", "7"});
    CHECK(root.code == kExitOk);
    CHECK(root.out.find("holds") != std::string::npos);
    CHECK(run({"series", "--check", "legendre", "--degree", "4"}).code == kExitOk);
    CHECK(run({"series", "--check", "root", "--g", "0,1,1,0,0", "--degree", "7"}).code == kExitFailure);
}

TEST_CASE("the installed binary matches the library entry point") {
    TempDir dir;
    std::string out = dir.file("o.txt");
    std::string cmd = std::string("\"") + GIE_CLI_PATH + "\" solve --n 2 --mu 4 > \"" + out + "\" 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == kExitOk);
    CHECK(read_text_file(out) == run({"solve", "--n", "2", "--mu", "4"}).out);

    std::string fail = std::string("\"") + GIE_CLI_PATH + "\" solve --n 3 --mu 4 > /dev/null 2>&1";
    status = std::system(fail.c_str());
    CHECK(WEXITSTATUS(status) == kExitFailure);
}
