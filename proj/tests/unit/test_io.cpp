#include <catch2/catch_amalgamated.hpp>

#include "corank/cusp/corank.hpp"
#include "corank/error.hpp"
#include "corank/io/json_io.hpp"

using namespace corank;
using io::json;

namespace {

std::string fixture(const std::string& name) { return io::read_input(std::string(CORANK_FIXTURE_DIR) + "/" + name); }

void expect_schema_error(const json& j, const std::function<void(const json&)>& read, const std::string& needle) {
    try {
        read(j);
        FAIL("accepted: " << j.dump());
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Schema);
        CHECK_THAT(std::string(e.what()), Catch::Matchers::ContainsSubstring(needle));
    }
}

}  // namespace

TEST_CASE("rationals and matrices round-trip") {
    CHECK(io::rational_to_json(linalg::Rational(3)) == json(3));
    CHECK(io::rational_to_json(linalg::Rational(-1, 2)) == json("-1/2"));
    CHECK(io::rational_from_json(json("4/6"), "x") == linalg::Rational(2, 3));
    CHECK_THROWS_AS(io::rational_from_json(json(0.5), "x"), Error);
    auto m = linalg::Matrix::from_dense({{linalg::Rational(1, 3), 0}, {0, linalg::Rational(-7)}});
    CHECK(io::matrix_from_json(io::matrix_to_json(m), "m") == m);
    expect_schema_error(json{{"rows", 1}, {"cols", 1}, {"entries", {{0, 1, 2}}}}, [](const json& j) { io::matrix_from_json(j, "m"); }, "out of range");
    expect_schema_error(json{{"rows", 1}, {"cols", 1}, {"entries", {{0, 0, 2}, {0, 0, 3}}}}, [](const json& j) { io::matrix_from_json(j, "m"); },
                        "duplicate");
}

TEST_CASE("every fixture document round-trips byte for byte") {
    for (const char* name : {"mixed_pillow.json", "mixed_tetrahedron.json", "isolated_corank2.json"}) {
        auto j = io::parse(fixture(name));
        auto in = io::corank_from_json(j);
        CHECK(io::corank_from_json(io::corank_to_json(in)) == in);
        CHECK(io::dump(io::corank_to_json(in)) == io::dump(io::corank_to_json(io::corank_from_json(io::corank_to_json(in)))));
    }
    for (const char* name : {"triangle_v0.json", "quadrant_cone.json", "cone3.json"}) {
        auto in = io::facepair_from_json(io::parse(fixture(name)));
        auto again = io::facepair_from_json(io::facepair_to_json(in));
        CHECK(again.ambient == in.ambient);
        CHECK(again.boundary == in.boundary);
    }
    auto torus = io::complex_from_json(io::parse(fixture("torus.json")));
    CHECK(io::complex_to_json(torus) == io::parse(fixture("torus.json")));
    auto cos = io::cosheaf_from_json(io::parse(fixture("interval_cosheaf.json")));
    CHECK(io::cosheaf_to_json(cos) == io::parse(fixture("interval_cosheaf.json")));
    auto hil = cusp::hilbert_example(2, 3);
    CHECK(io::corank_from_json(io::corank_to_json(hil)) == hil);
}

TEST_CASE("versions are checked and named") {
    auto j = io::parse(fixture("mixed_pillow.json"));
    j["version"] = "corank.v2";
    expect_schema_error(j, [](const json& x) { io::corank_from_json(x); }, "expected \"corank.v1\"");
    j.erase("version");
    expect_schema_error(j, [](const json& x) { io::corank_from_json(x); }, "corank.v1");
    expect_schema_error(io::parse(fixture("torus.json")), [](const json& x) { io::facepair_from_json(x); }, "expected \"facepair.v1\"");
}

TEST_CASE("unknown and missing fields are rejected") {
    auto j = io::parse(fixture("mixed_pillow.json"));
    j["extra"] = 1;
    expect_schema_error(j, [](const json& x) { io::corank_from_json(x); }, "unknown field 'extra'");
    j = io::parse(fixture("mixed_pillow.json"));
    j["cusps"][0].erase("corank");
    expect_schema_error(j, [](const json& x) { io::corank_from_json(x); }, "missing field 'corank'");
    j = io::parse(fixture("mixed_pillow.json"));
    j["cusps"][2]["levels"]["zero"] = j["cusps"][2]["levels"]["0"];
    expect_schema_error(j, [](const json& x) { io::corank_from_json(x); }, "not a number");
    j = io::parse(fixture("torus.json"));
    j["cells"][0]["dim"] = -1;
    expect_schema_error(j, [](const json& x) { io::complex_from_json(x); }, "non-negative");
    j = io::parse(fixture("torus.json"));
    j["masks"]["F0"] = {99};
    expect_schema_error(j, [](const json& x) { io::complex_from_json(x); }, "out of range");
}

TEST_CASE("malformed JSON is a schema error") {
    try {
        io::parse(fixture("garbage.json"));
        FAIL("parsed garbage");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Schema);
    }
    CHECK_THROWS_AS(io::read_input("/nonexistent/file.json"), Error);
}

TEST_CASE("report documents pass their own structural checks") {
    auto res = cusp::run_corank(io::corank_from_json(io::parse(fixture("mixed_pillow.json"))), 0);
    auto j = io::corank_result_to_json(res);
    CHECK_NOTHROW(io::check_corank_result_json(j));
    CHECK(j["degeneration_page"] == 2);
    for (const auto& pg : res.ss.pages) CHECK_NOTHROW(io::check_page_json(io::page_to_json(pg)));
    j["surprise"] = true;
    CHECK_THROWS_AS(io::check_corank_result_json(j), Error);
}
