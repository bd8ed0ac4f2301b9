#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "summand/descriptor.hpp"

namespace {

using nlohmann::json;

int run_cli(const std::string& args) {
    const std::string cmd = std::string(SUMMAND_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string capture_cli(const std::string& args) {
    const std::string cmd = std::string(SUMMAND_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), n);
    pclose(pipe);
    return out;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("descriptor parsing") {
    using namespace summand;
    CHECK_NOTHROW(parse_descriptor(R"({"kind":"zmod","n":4})"));
    CHECK_NOTHROW(parse_descriptor(R"({"kind":"matrix","n":2,"base":{"kind":"zmod","n":2}})"));
    CHECK_NOTHROW(parse_descriptor(
        R"({"kind":"pattern","n":3,"base":{"kind":"zmod","n":2},"mask":[[1,0,1],[0,1,0],[0,0,1]]})"));

    CHECK_THROWS_AS(parse_descriptor("not json"), DescriptorError);
    CHECK_THROWS_AS(parse_descriptor(R"({"kind":"zmod"})"), DescriptorError);
    CHECK_THROWS_AS(parse_descriptor(R"({"kind":"zmod","n":0})"), DescriptorError);
    CHECK_THROWS_AS(parse_descriptor(R"({"kind":"zmod","n":4,"extra":1})"), DescriptorError);
    CHECK_THROWS_AS(parse_descriptor(R"({"kind":"mystery"})"), DescriptorError);
    CHECK_THROWS_AS(
        parse_descriptor(
            R"({"kind":"pattern","n":2,"base":{"kind":"zmod","n":2},"mask":[[1,1],[1,0]]})"),
        DescriptorError);

    // Error messages carry the failing field path.
    try {
        parse_descriptor(R"({"kind":"matrix","n":2,"base":{"kind":"zmod","m":2}})");
        FAIL("expected a parse failure");
    } catch (const summand::DescriptorError& e) {
        CHECK(std::string(e.what()).find("$.base") != std::string::npos);
    }
}

TEST_CASE("descriptor round trip") {
    using namespace summand;
    const auto desc = parse_descriptor(
        R"({"kind":"pattern","n":3,"base":{"kind":"zmod","n":2},"mask":[[1,0,1],[0,1,0],[0,0,1]]})");
    const auto again = descriptor_from_json(descriptor_to_json(*desc));
    CHECK(descriptor_to_json(*desc) == descriptor_to_json(*again));
    CHECK(describe(*desc) == "pattern(3, zmod(2))");
}

TEST_CASE("check exit codes") {
    CHECK(run_cli("check zmod-6 --props ssp,sip,c3") == 0);
    CHECK(run_cli("check remark-2-10 --props ssp --side left") == 1);
    CHECK(run_cli("check '{\"kind\":\"zmod\",\"n\":6}' --props ssp") == 0);
    CHECK(run_cli("check '{\"kind\":\"zmod\"}'") == 2);
    CHECK(run_cli("check zmod-6 --props nosuch") == 2);
    CHECK(run_cli("check /no/such/file.json") == 2);

    const auto bad = write_temp("summand_bad_descriptor.json", R"({"kind":"zmod","n":-1})");
    CHECK(run_cli("check " + bad.string()) == 2);

    const auto good = write_temp("summand_good_descriptor.json", R"({"kind":"zmod","n":6})");
    CHECK(run_cli("check " + good.string() + " --props ssp,sip") == 0);
}

TEST_CASE("verify exit codes") {
    CHECK(run_cli("verify m2-f2") == 0);
    CHECK(run_cli("verify zmod-4") == 0);
    CHECK(run_cli("verify remark-2-10") == 0);
    CHECK(run_cli("verify '{\"kind\":\"bogus\"}'") == 2);
}

TEST_CASE("fixtures exit codes") {
    CHECK(run_cli("fixtures list") == 0);
    CHECK(run_cli("fixtures run remark-2-9") == 0);
    CHECK(run_cli("fixtures run remark-2-10") == 1);  // stated right-c3 expectation fails
    CHECK(run_cli("fixtures run nosuch") == 2);
}

TEST_CASE("reports carry the fixed top-level keys") {
    const auto text = capture_cli("check zmod-4 --props ssp,regular");
    const auto report = json::parse(text);
    std::set<std::string> keys;
    for (auto it = report.begin(); it != report.end(); ++it) keys.insert(it.key());
    CHECK(keys ==
          std::set<std::string>{"ring", "verdicts", "theorems", "timings", "caps", "version"});
    CHECK(report.at("version").get<std::string>() == std::string(summand::kVersion));
    CHECK(report.at("caps").at("size") == 4096);
}

TEST_CASE("reports are deterministic apart from timings") {
    const auto a = json::parse(capture_cli("check remark-2-10 --props ssp,sip,c3,regular"));
    auto b = json::parse(capture_cli("check remark-2-10 --props ssp,sip,c3,regular"));
    auto a2 = a;
    a2.erase("timings");
    b.erase("timings");
    CHECK(a2.dump() == b.dump());
}

TEST_CASE("verdict witnesses render labels") {
    const auto report =
        json::parse(capture_cli("check remark-2-10 --props ssp --side left --method definitional"));
    const auto& verdicts = report.at("verdicts");
    REQUIRE(verdicts.size() == 1);
    CHECK(verdicts[0].at("holds") == false);
    CHECK(verdicts[0].at("witness").at("labels") == json::array({"e11", "e11+e13"}));
}

TEST_CASE("c2 above the cap is reported skipped, not failed") {
    const auto report = json::parse(capture_cli("check m2-zmod4 --props c2 --side right"));
    const auto& verdicts = report.at("verdicts");
    REQUIRE(verdicts.size() == 1);
    CHECK(verdicts[0].at("status") == "skipped");
    CHECK(run_cli("check m2-zmod4 --props c2 --side right") == 0);
    CHECK(run_cli("check m2-zmod4 --props c2 --side right --cap-size 4096 --cap-ideals 16") == 0);
}

TEST_CASE("markdown format renders") {
    const auto text = capture_cli("check zmod-6 --props ssp --format md");
    CHECK(text.find("# zmod(6)") != std::string::npos);
    CHECK(text.find("| property |") != std::string::npos);
}

TEST_CASE("composite descriptor kinds work through the CLI") {
    CHECK(run_cli("check '{\"kind\":\"product\",\"factors\":[{\"kind\":\"zmod\",\"n\":2},"
                  "{\"kind\":\"zmod\",\"n\":3}]}' --props ssp,regular") == 0);
    CHECK(run_cli("check '{\"kind\":\"opposite\",\"base\":{\"kind\":\"pattern\",\"n\":2,"
                  "\"base\":{\"kind\":\"zmod\",\"n\":2},\"mask\":[[1,1],[0,1]]}}' "
                  "--props sip") == 0);
    // Corner of the matrix ring at a rank-one idempotent (index 8 is e11).
    CHECK(run_cli("check '{\"kind\":\"corner\",\"base\":{\"kind\":\"matrix\",\"n\":2,"
                  "\"base\":{\"kind\":\"zmod\",\"n\":2}},\"e\":8}' --props ssp,semisimple") == 0);
    // Corner at a non-idempotent is an input error.
    CHECK(run_cli("check '{\"kind\":\"corner\",\"base\":{\"kind\":\"matrix\",\"n\":2,"
                  "\"base\":{\"kind\":\"zmod\",\"n\":2}},\"e\":4}'") == 2);

    const auto report = json::parse(capture_cli(
        "check '{\"kind\":\"opposite\",\"base\":{\"kind\":\"pattern\",\"n\":3,"
        "\"base\":{\"kind\":\"zmod\",\"n\":2},\"mask\":[[1,0,1],[0,1,0],[0,0,1]]}}' "
        "--props ssp,sip,c3 --side both"));
    // Mirror of the pattern ring: right-side verdicts flip to the left side.
    for (const auto& v : report.at("verdicts")) {
        if (v.at("property") == "ssp") CHECK(v.at("holds") == false);
        if (v.at("property") == "sip") CHECK(v.at("holds") == true);
    }
}
