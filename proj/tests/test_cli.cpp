#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"

using json = nlohmann::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = seqforge::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string without_timing(const std::string& text) {
    auto doc = json::parse(text);
    doc.erase("timing_ms");
    return doc.dump();
}

// Points SEQFORGE_FIXTURES at a directory for the lifetime of the object.
struct FixtureOverride {
    explicit FixtureOverride(const std::filesystem::path& dir) { setenv("SEQFORGE_FIXTURES", dir.c_str(), 1); }
    ~FixtureOverride() { unsetenv("SEQFORGE_FIXTURES"); }
};

}  // namespace

TEST_CASE("generate") {
    auto r = run({"generate", "mseq", "m=6", "poly=1000011"});
    CHECK(r.code == 0);
    CHECK(r.out == "n=63 family=mseq params=m=6;poly=1000011\n" +
                       seqforge::format_sequence(fx::example_pair(2).first) + "\n");

    r = run({"generate", "cyclotomic_s3", "n=17"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\n0,1,0,0,1,0,1,1,0,0,1,1,0,1,0,0,1\n") != std::string::npos);

    CHECK(run({"generate", "legendre", "p=4"}).code == 2);
    CHECK(run({"generate", "legendre"}).code == 2);
    CHECK(run({"generate", "mystery", "p=5"}).code == 2);
    CHECK(run({"generate", "gmw", "k=3", "--poly", "1000011"}).code == 0);
    CHECK(run({"generate", "gmw", "k=3", "--poly", "11111"}).code == 2);

    const auto path = std::filesystem::temp_directory_path() / "seqforge_cli_pair.txt";
    r = run({"generate", "twin_prime", "p=3", "--output", path.string()});
    CHECK(r.code == 0);
    const auto report = json::parse(r.out);
    CHECK(report["family"] == "twin_prime");
    const auto pair = seqforge::load_pair(path);
    CHECK(pair.length() == 15);
    CHECK(pair.origin == "twin_prime");
    std::filesystem::remove(path);
}

TEST_CASE("verify") {
    auto r = run({"verify", "T10", "n=17"});
    CHECK(r.code == 0);
    auto report = json::parse(r.out);
    CHECK(report["entries"].size() == 16);
    CHECK(report["entries"][0]["tuple"] == "(s6,s3,s4,s1)");
    for (const auto& e : report["entries"]) {
        CHECK(e["optimal"] == true);
        CHECK(e["r_max_squared"] == 4);
        CHECK(e["N"] == 34);
    }

    r = run({"verify", "T6", "k=3"});
    CHECK(r.code == 0);
    report = json::parse(r.out);
    CHECK(report["entries"].size() == 4);
    CHECK(report["entries"][0]["pattern"] == "modulus:9");

    CHECK(run({"verify", "T7", "n=17"}).code == 2);
    CHECK(run({"verify", "T7", "17"}).code == 2);
    CHECK(run({"verify", "T12", "n=17"}).code == 2);
    CHECK(run({"verify", "T7", "n=13", "--e", "0,0,1"}).code == 2);
    CHECK(run({"verify", "T4", "p=7", "--alpha", "3"}).code == 2);
    CHECK(run({"verify", "T9", "n=13"}).code == 1);

    r = run({"verify", "T5", "p=3", "--sweep-e"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["entries"].size() == 16);
}

TEST_CASE("reproduce") {
    auto r = run({"reproduce", "1"});
    CHECK(r.code == 0);
    auto report = json::parse(r.out);
    CHECK(report["e_inferred"] == "0,0,1");
    CHECK(report["match"] == true);

    r = run({"reproduce", "2"});
    CHECK(r.code == 0);
    report = json::parse(r.out);
    CHECK(report["printed_spectrum_irregularities"].size() > 0);
    CHECK(r.err.find("note") != std::string::npos);

    CHECK(run({"reproduce", "3"}).code == 0);
    CHECK(run({"reproduce", "4"}).code == 2);
}

TEST_CASE("fixture directory override") {
    const auto dir = std::filesystem::temp_directory_path() / "seqforge_fixture_override";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    for (const auto& entry : std::filesystem::directory_iterator(fx::kFixtures)) {
        std::filesystem::copy_file(entry.path(), dir / entry.path().filename());
    }
    {
        FixtureOverride env(dir);
        CHECK(seqforge::cli::fixture_dir() == dir);
        CHECK(run({"reproduce", "3"}).code == 0);
        // Corrupt one symbol of u: the mismatch is reported with its index.
        auto text = oracle::read_file(dir / "example3_u.txt");
        text[0] = '1';
        std::ofstream(dir / "example3_u.txt", std::ios::trunc) << text;
        const auto r = run({"reproduce", "3"});
        CHECK(r.code == 1);
        CHECK(r.err.find("u differs at index 0") != std::string::npos);
    }
    {
        FixtureOverride env(dir / "missing");
        CHECK(run({"reproduce", "1"}).code == 2);
    }
    std::filesystem::remove_all(dir);
    CHECK(seqforge::cli::fixture_dir() == fx::kFixtures);
}

TEST_CASE("spectrum") {
    const auto u3 = seqforge::format_sequence(fx::example_u(3));
    auto r = run({"spectrum", u3});
    CHECK(r.code == 0);
    auto report = json::parse(r.out);
    CHECK(report["r_max_squared"] == 4);
    CHECK(report["optimal"] == true);
    CHECK(report["alphabet"] == 4);

    r = run({"spectrum", "0,0,0,0", "--alphabet", "4"});
    report = json::parse(r.out);
    CHECK(report["r_max_squared"] == 16);
    CHECK(report["optimal"] == false);

    r = run({"spectrum", (fx::kFixtures / "example1_pair.txt").string(), "--csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("tau,re,im\n0,25,0\n1,-3,0\n2,5,0\n", 0) == 0);

    CHECK(run({"spectrum", "0,1,7"}).code == 2);
    CHECK(run({"spectrum", "0,1", "--alphabet", "3"}).code == 2);
}

TEST_CASE("cyclotomy") {
    auto r = run({"cyclotomy", "17", "--alpha", "3"});
    CHECK(r.code == 0);
    auto report = json::parse(r.out);
    CHECK(report["classes"][0] == json::array({1, 4, 13, 16}));
    CHECK(report["classes"][3] == json::array({6, 7, 10, 11}));
    CHECK(report["closed_form_matches"] == true);

    CHECK(json::parse(run({"cyclotomy", "17"}).out)["closed_form_matches"] == true);
    CHECK(run({"cyclotomy", "21"}).code == 2);
    CHECK(run({"cyclotomy", "37", "--target", "y=-1"}).code == 3);
    CHECK(json::parse(run({"cyclotomy", "13", "--target", "y=-1"}).out)["y"] == -1);
}

TEST_CASE("reports are deterministic apart from timing") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"verify", "T8", "n=13"}, {"reproduce", "2"}, {"cyclotomy", "29"}, {"spectrum", "0,1,2,3,3"}}) {
        const auto a = run(args), b = run(args);
        CHECK(a.code == b.code);
        CHECK(without_timing(a.out) == without_timing(b.out));
        CHECK(json::parse(a.out).contains("timing_ms"));
        CHECK(json::parse(a.out)["version"] == SEQFORGE_VERSION);
    }
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
