#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "borelss/cli.hpp"

using namespace borelss;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify, both even, Z/2") {
    const auto r = run({"classify", "--group", "z2", "--n", "2", "--a", "0", "--b", "0", "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["verdict"] == "free-action-possible");
    REQUIRE(doc["outcomes"].size() == 1);
    const auto& rels = doc["outcomes"][0]["presentation"]["relations"];
    CHECK(rels == json::array({"z^2", "x^3*z", "x^7"}));
    CHECK(doc["outcomes"][0]["index"]["cohomology_index"] == 6);
    CHECK_FALSE(doc.contains("rejected"));
    CHECK(doc["inputs"]["a"] == 0);
    CHECK(doc["inputs"]["a_parity"] == "even");
}

TEST_CASE("classify verdicts in text form") {
    const auto none = run({"classify", "--group", "z2", "--n", "2", "--a", "1", "--b", "0"});
    CHECK(none.code == 0);
    CHECK(none.out.find("no free action consistent with the spectral sequence") != std::string::npos);

    const auto circle = run({"classify", "--group", "s1", "--n", "2", "--a", "0", "--b", "0"});
    CHECK(circle.code == 0);
    CHECK(circle.out.find("no free action") != std::string::npos);
}

TEST_CASE("integers are reduced to parities and both are recorded") {
    const auto r = run({"classify", "--group", "z2", "--n", "1", "--a", "-3", "--b", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["inputs"]["a"] == -3);
    CHECK(doc["inputs"]["a_parity"] == "odd");
    CHECK(doc["inputs"]["b"] == 4);
    CHECK(doc["inputs"]["b_parity"] == "even");
    CHECK(doc["warnings"].size() == 1);
    CHECK(r.err.empty());

    const auto words = run({"classify", "--group", "z2", "--n", "1", "--a", "even", "--b", "odd", "--format", "json"});
    REQUIRE(words.code == 0);
    CHECK(json::parse(words.out)["inputs"]["a"] == "even");
}

TEST_CASE("show-rejected lists every rejected branch") {
    const auto r = run({"classify", "--group", "z2", "--n", "2", "--a", "1", "--b", "0", "--format", "json",
                        "--show-rejected"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["verdict"] == "no-free-action");
    REQUIRE(doc.contains("rejected"));
    CHECK_FALSE(doc["rejected"].empty());
    for (const auto& b : doc["rejected"])
        CHECK_FALSE(b["reason"].get<std::string>().empty());
}

TEST_CASE("json output is canonical and deterministic") {
    const std::vector<std::string> args{"classify", "--group", "s1", "--n", "3", "--a", "0", "--b", "1",
                                        "--format", "json", "--show-rejected"};
    const auto first = run(args);
    const auto second = run(args);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(json::parse(first.out).dump(2) + "\n" == first.out);
}

TEST_CASE("table") {
    const auto r = run({"table", "--n", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["rows"].size() == 8);
    for (const auto& row : doc["rows"]) {
        if (row["group"] == "z2" && row["a_parity"] == "even" && row["b_parity"] == "even")
            CHECK(row["candidate_indices"] == json::array({6}));
        if (row["group"] == "z2" && row["a_parity"] == "odd" && row["b_parity"] == "even")
            CHECK(row["verdict"] == "none");
    }
    const json one = json::parse(run({"table", "--n", "1", "--format", "json"}).out);
    for (const auto& row : one["rows"])
        if (row["group"] == "s1" && row["a_parity"] == "even" && row["b_parity"] == "odd")
            CHECK(row["rings"].size() == 2);
    CHECK(run({"table", "--n", "2"}).out.find("z2  a odd, b even: none") != std::string::npos);
}

TEST_CASE("index") {
    const auto r = run({"index", "--group", "z2", "--n", "3", "--a", "0", "--b", "0", "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["candidate_indices"] == json::array({9}));
    CHECK(doc["no_equivariant_map_above"] == 9);
    CHECK(run({"index", "--group", "s1", "--n", "1", "--a", "0", "--b", "0"}).code == 1);
}

TEST_CASE("oracle-check") {
    const auto z2 = run({"oracle-check", "--group", "z2", "--n", "1", "--a", "0", "--b", "0"});
    CHECK(z2.code == 0);
    CHECK(z2.out.rfind("MATCH", 0) == 0);
    const auto s1 = run({"oracle-check", "--group", "s1", "--n", "1", "--a", "0", "--b", "1"});
    CHECK(s1.code == 0);
    CHECK(s1.out.rfind("MATCH", 0) == 0);
    const auto big = run({"oracle-check", "--n", "9", "--a", "0", "--b", "0"});
    CHECK(big.code == 1);
    CHECK(big.err.find("refused") != std::string::npos);
}

TEST_CASE("self-check passes") {
    CHECK(run({"classify", "--group", "z2", "--n", "2", "--a", "0", "--b", "1", "--self-check"}).code == 0);
}

TEST_CASE("invalid input exits with 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"classify", "--group", "z3", "--n", "1", "--a", "0", "--b", "0"}).code == 1);
    CHECK(run({"classify", "--group", "z2", "--n", "0", "--a", "0", "--b", "0"}).code == 1);
    CHECK(run({"classify", "--group", "z2", "--n", "1", "--a", "x", "--b", "0"}).code == 1);
    CHECK(run({"classify", "--group", "z2", "--n", "1", "--a", "0"}).code == 1);
    CHECK(run({"classify", "--fiber", "/nonexistent/fiber.json"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
}

TEST_CASE("fiber files") {
    const auto r = run({"classify", "--group", "z2", "--fiber", BORELSS_TEST_DATA "/projective_plane_like.json",
                        "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["inputs"]["n"].is_null());
    // Same product structure as type (0,1) with n = 2.
    const json typed = json::parse(
        run({"classify", "--group", "z2", "--n", "2", "--a", "0", "--b", "1", "--format", "json"}).out);
    CHECK(doc["outcomes"].size() == typed["outcomes"].size());
}
