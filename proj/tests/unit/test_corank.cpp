#include <catch2/catch_amalgamated.hpp>

#include "corank/cusp/corank.hpp"
#include "corank/error.hpp"
#include "corank/io/json_io.hpp"

using namespace corank;
using namespace corank::cusp;

namespace {

CorankInput load(const std::string& name) {
    return io::corank_from_json(io::parse(io::read_input(std::string(CORANK_FIXTURE_DIR) + "/" + name)));
}

std::size_t at(const CorkDims& d, long i, long j) {
    auto it = d.find({i, j});
    return it == d.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("Hilbert toy: one circle per cusp, degenerate at the first page") {
    for (std::size_t c : {1u, 2u, 3u})
        for (std::size_t period : {2u, 3u, 5u}) {
            auto in = hilbert_example(c, period);
            REQUIRE(validate_input(in).ok);
            auto res = run_corank(in, 0);
            auto e1 = cork_dims(res.ss.pages.front());
            CHECK(e1 == CorkDims{{{1, 0}, c}, {{1, 1}, c}});
            CHECK(res.ss.degeneration_page == 1);
            CHECK(res.ok());
            REQUIRE(res.euler.formula);
            CHECK(res.euler.chi_e1 == 0);
            CHECK(*res.euler.formula == 0);
        }
    CHECK_THROWS_MATCHES(hilbert_example(1, 1), Error, Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("BadPeriod")));
}

TEST_CASE("pillow: two points and a sphere") {
    auto in = load("mixed_pillow.json");
    auto res = run_corank(in, 0);
    CHECK(res.d == 2);
    auto e1 = cork_dims(res.ss.pages.front());
    CHECK(e1 == CorkDims{{{1, 0}, 2}, {{2, 0}, 1}, {{2, 1}, 1}});
    auto e2 = cork_dims(res.ss.pages[1]);
    CHECK(at(e2, 2, 0) == 0);
    CHECK(at(e2, 1, 0) == 1);
    CHECK(res.ss.total_homology == std::vector<std::size_t>{1, 0, 1});
    CHECK(total_dims(cork_dims(res.ss.pages.back()))[3] == 1);
    CHECK(res.ss.degeneration_page == 2);
    CHECK(res.ok());
    CHECK(run_corank(in, 1).d == 1);
    CHECK(run_corank(in, 1).ok());
}

TEST_CASE("aggregate Euler identity over all levels") {
    auto in = load("mixed_pillow.json");
    auto dual = build_dual_complex(in);
    std::map<std::size_t, CorankSS> ss;
    for (std::size_t p = 0; p < 3; ++p) ss.emplace(p, corank_ss(in, dual, p));
    auto rep = euler_identity(in, ss);
    CHECK(rep.report.ok);
    REQUIRE(rep.aggregate);
    CHECK(rep.aggregate->first == -2);
    CHECK(rep.aggregate->second == -2);
    // a wrong Euler characteristic for one cusp shows up
    in.cusps[0].chi_gamma = linalg::Rational(3);
    CHECK_FALSE(euler_identity(in, ss).report.ok);
}

TEST_CASE("a corank-2 cusp with nothing below it breaks the shape") {
    auto in = load("isolated_corank2.json");
    auto res = run_corank(in, 0);
    CHECK(res.cross.ok);
    REQUIRE_FALSE(res.shape.ok);
    CHECK_THAT(res.shape.violations.front(), Catch::Matchers::ContainsSubstring("E^1_{2,-1}"));
}

TEST_CASE("the dual complex and the corank filtration") {
    auto in = load("mixed_tetrahedron.json");
    auto dual = build_dual_complex(in);
    CHECK(dual.complex->size() == 4 + 6 + 4);
    CHECK(topo::validate(*dual.complex).ok);
    auto filt = corank_filtration(in, dual);
    REQUIRE(filt.size() == 3);
    CHECK(filt[0].count() == 0);
    CHECK(filt[1].count() == 4);
    CHECK(filt[2].count() == dual.complex->size());
    CHECK(d_of_p(in, 0) == 2);
    CHECK(d_of_p(in, 2) == 1);
    CHECK(to_cork(2, 1) == CorkKey{2, 0});
}

TEST_CASE("input problems are reported with their kind") {
    SECTION("duplicate labels") {
        auto in = load("mixed_pillow.json");
        in.cusps[1].label = "P";
        CHECK_FALSE(validate_input(in).ok);
    }
    SECTION("gluing to a cusp of the same corank") {
        auto in = load("mixed_pillow.json");
        in.gluing[0].target_cusp = "S";
        CHECK_THROWS_AS(build_dual_complex(in), Error);
    }
    SECTION("gluing two cells of one cusp to the same target") {
        auto in = load("mixed_pillow.json");
        in.gluing[1].target_cusp = "P";
        CHECK_THROWS_MATCHES(build_dual_complex(in), Error, Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("GluingInconsistent")));
    }
    SECTION("stalks disagree across a gluing") {
        auto in = load("mixed_pillow.json");
        in.cusps[0].levels[0].dims = {2};
        auto dual = build_dual_complex(in);
        CHECK_THROWS_AS(total_cosheaf(in, dual, 0), Error);
    }
    SECTION("level without data") {
        auto in = load("mixed_tetrahedron.json");
        auto dual = build_dual_complex(in);
        CHECK_THROWS_MATCHES(total_cosheaf(in, dual, 1), Error, Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("MissingCosheaf")));
    }
    SECTION("no augmentation") {
        auto in = load("mixed_tetrahedron.json");
        CHECK_THROWS_MATCHES(eis_dim(in, build_dual_complex(in), 0), Error,
                             Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("MissingAugmentation")));
    }
}

TEST_CASE("Eisenstein dimension from augmentations") {
    auto in = hilbert_example(2, 3);
    in.ambient_dims[0] = 1;
    for (auto& c : in.cusps) c.levels[0].augmentation[0] = linalg::Matrix::identity(1);
    auto res = run_corank(in, 0);
    REQUIRE(res.eis);
    CHECK(*res.eis == 1);
}
