#include <catch2/catch_amalgamated.hpp>

#include "corank/error.hpp"
#include "corank/sheaf/cosheaf.hpp"
#include "corank/topo/delta_complex.hpp"
#include "corank/topo/simplicial.hpp"
#include "../support/generators.hpp"
#include "../support/oracle.hpp"

using namespace corank;
using namespace corank::topo;

namespace {

std::vector<std::size_t> constant_betti(const DeltaComplex& d) {
    auto f = sheaf::Cosheaf::constant(std::make_shared<const DeltaComplex>(d), 1);
    return sheaf::homology_dims(sheaf::chain_complex(f));
}

}  // namespace

TEST_CASE("constant coefficients give the Betti numbers of the standard spaces") {
    CHECK(constant_betti(gen::interval()) == std::vector<std::size_t>{1, 0});
    CHECK(constant_betti(gen::circle()) == std::vector<std::size_t>{1, 1});
    CHECK(constant_betti(gen::sphere()) == std::vector<std::size_t>{1, 0, 1});
    CHECK(constant_betti(gen::torus()) == std::vector<std::size_t>{1, 2, 1});
    CHECK(euler_char(gen::torus()) == 0);
    CHECK(euler_char(gen::sphere()) == 2);
}

TEST_CASE("validation names the broken cell") {
    SECTION("face of the wrong dimension") {
        DeltaComplex d({Cell{0, {0}, {}, ""}, Cell{1, {0, 0}, {0, 0}, ""}, Cell{2, {0, 0, 0}, {0, 1, 1}, ""}});
        auto rep = validate(d);
        REQUIRE_FALSE(rep.ok);
        CHECK_THAT(rep.violations.front(), Catch::Matchers::ContainsSubstring("cell 2"));
    }
    SECTION("simplicial identity broken") {
        // a triangle whose edges do not meet at the right vertices
        DeltaComplex d({Cell{0, {0}, {}, ""}, Cell{0, {1}, {}, ""}, Cell{1, {0, 1}, {1, 0}, ""}, Cell{1, {0, 1}, {1, 0}, ""},
                        Cell{2, {0, 1, 1}, {2, 3, 2}, ""}});
        CHECK_FALSE(validate(d).ok);
    }
    SECTION("the standard complexes are valid") {
        for (const auto& d : {gen::interval(), gen::circle(), gen::sphere(), gen::torus()}) CHECK(validate(d).ok);
    }
}

TEST_CASE("masks: closure, closedness and set operations") {
    DeltaComplex s = gen::sphere();
    auto m = SubcomplexMask::closure(s, {6});
    CHECK(m.count() == 7);
    CHECK(m.is_closed(s));
    auto bad = SubcomplexMask::of(s.size(), {3});
    CHECK_FALSE(bad.is_closed(s));
    CHECK(bad.unclosed_members(s) == std::vector<std::size_t>{3});
    CHECK((m | SubcomplexMask::of(s.size(), {7})).count() == 8);
    CHECK((m & SubcomplexMask::of(s.size(), {0, 7})).ids() == std::vector<std::size_t>{0});
    CHECK(SubcomplexMask::of(s.size(), {0}).subset_of(m));
}

TEST_CASE("simplicial complexes close generators and order by dimension then lexicographically") {
    SimplicialComplex s(4, {{0, 1, 2}, {2, 3}});
    CHECK(s.size() == 4 + 4 + 1);
    CHECK(s.id_of({2, 3}) == 7);
    CHECK(s.maximal() == std::vector<std::size_t>{7, 8});
    CHECK(s.facets(8) == std::vector<std::size_t>{s.id_of({1, 2}), s.id_of({0, 2}), s.id_of({0, 1})});
    CHECK_FALSE(s.find({0, 3}));
    auto d = as_delta(s);
    CHECK(validate(d).ok);
    CHECK(constant_betti(d) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("affine dependence is reported") {
    SimplicialComplex flat(3, {{0, 1, 2}}, {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(2)}});
    CHECK_FALSE(validate(flat).ok);
    CHECK(validate(SimplicialComplex::standard_simplex(3)).ok);
}

TEST_CASE("barycentric subdivision has the expected counts and a cochain map back") {
    for (std::size_t d = 0; d <= 3; ++d) {
        auto s = SimplicialComplex::standard_simplex(d);
        auto sd = barycentric_subdivide(s);
        std::size_t tops = 0;
        for (std::size_t c = 0; c < sd.complex.size(); ++c) tops += sd.complex.simplex(c).size() == d + 1;
        std::size_t fact = 1;
        for (std::size_t k = 2; k <= d + 1; ++k) fact *= k;
        CHECK(tops == fact);
        CHECK(sd.flag_index.size() == sd.complex.size());
        // the subdivided simplex is still contractible
        CHECK(oracle::betti(as_delta(sd.complex), std::vector<char>(sd.complex.size(), 1))[0] == 1);
        auto m = subdivision_chain_map(s, sd);
        auto cs = sheaf::compact_cochain_pair(s, SubcomplexMask(s.size()));
        auto csd = sheaf::compact_cochain_pair(sd.complex, SubcomplexMask(sd.complex.size()));
        for (std::size_t k = 0; k + 1 < m.size(); ++k) CHECK(m[k + 1] * csd.outgoing(k) == cs.outgoing(k) * m[k]);
    }
    CHECK(permutation_sign({0, 1, 2}) == 1);
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({2, 0, 1}) == 1);
}

TEST_CASE("random simplicial complexes: library homology equals the oracle") {
    gen::Rng rng(17);
    for (int t = 0; t < 60; ++t) {
        auto d = as_delta(gen::random_simplicial(rng, 6, 3));
        REQUIRE(constant_betti(d) == oracle::betti(d, std::vector<char>(d.size(), 1)));
        long chi = 0;
        auto b = constant_betti(d);
        for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(b[k]);
        REQUIRE(chi == euler_char(d));
    }
}
