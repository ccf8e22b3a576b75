#include <catch2/catch_amalgamated.hpp>

#include "corank/error.hpp"
#include "corank/sheaf/cosheaf.hpp"
#include "../support/generators.hpp"
#include "../support/oracle.hpp"

using namespace corank;
using namespace corank::sheaf;
using linalg::Matrix;
using linalg::Rational;

TEST_CASE("random cosheaves: boundaries square to zero and the pair sequence is exact") {
    gen::Rng rng(29);
    for (int t = 0; t < 40; ++t) {
        auto base = std::make_shared<const topo::DeltaComplex>(topo::as_delta(gen::random_simplicial(rng, 5, 3)));
        auto f = gen::random_cosheaf(rng, base);
        REQUIRE(validate_cosheaf(f).ok);
        auto c = chain_complex(f);
        REQUIRE(check_complex(c).ok);
        std::vector<Matrix> diffs(c.differential.begin(), c.differential.end());
        REQUIRE(homology_dims(c) == oracle::homology(diffs));
        auto sub = gen::random_closed_mask(rng, *base);
        REQUIRE(les_of_pair_check(f, sub).ok);
    }
}

TEST_CASE("homology bases: representatives are cycles independent of boundaries") {
    auto f = Cosheaf::constant(std::make_shared<const topo::DeltaComplex>(gen::torus()), 2);
    auto c = chain_complex(f);
    auto h = homology(c, 1);
    CHECK(h.dim == 4);
    CHECK(h.representatives.cols() == 4);
    CHECK(h.cycles.contains(linalg::Subspace::span(h.representatives)));
    CHECK(linalg::sum(h.boundaries, linalg::Subspace::span(h.representatives)).dim() == h.boundaries.dim() + 4);
}

TEST_CASE("non-commuting extension maps are caught") {
    auto base = std::make_shared<const topo::DeltaComplex>(gen::sphere());
    Cosheaf f = Cosheaf::constant(base, 1);
    REQUIRE(validate_cosheaf(f).ok);
    f.set_ext(6, 0, Matrix::from_dense(1, 1, {2}));
    auto rep = validate_cosheaf(f);
    CHECK_FALSE(rep.ok);
    CHECK_THROWS_AS(chain_complex(f), Error);
}

TEST_CASE("wrongly shaped extension maps are caught") {
    auto base = std::make_shared<const topo::DeltaComplex>(gen::interval());
    Cosheaf f(base, {1, 1, 2});
    f.set_ext(2, 0, Matrix(2, 2));
    CHECK_FALSE(validate_cosheaf(f).ok);
}

TEST_CASE("missing extension maps act as zero") {
    auto base = std::make_shared<const topo::DeltaComplex>(gen::interval());
    Cosheaf f(base, {1, 1, 1});
    CHECK(f.ext(2, 0).is_zero());
    CHECK(homology_dims(chain_complex(f)) == std::vector<std::size_t>{2, 1});
}

TEST_CASE("relative complexes need closed masks") {
    auto base = std::make_shared<const topo::DeltaComplex>(gen::sphere());
    Cosheaf f = Cosheaf::constant(base, 1);
    CHECK_THROWS_MATCHES(relative_chain_complex(f, topo::SubcomplexMask::of(base->size(), {3})), Error,
                         Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("MaskNotClosed")));
    auto eq = topo::SubcomplexMask::closure(*base, {3, 4, 5});
    CHECK(homology_dims(relative_chain_complex(f, eq)) == std::vector<std::size_t>{0, 0, 2});
    CHECK(les_of_pair_check(f, eq).ok);
}

TEST_CASE("relative cochains of a simplex modulo its boundary") {
    auto s = topo::SimplicialComplex::standard_simplex(2);
    topo::SubcomplexMask bd(s.size());
    for (std::size_t id = 0; id + 1 < s.size(); ++id) bd.insert(id);
    CHECK(homology_dims(compact_cochain_pair(s, bd)) == std::vector<std::size_t>{0, 0, 1});
    CHECK(homology_dims(compact_cochain_pair(s, topo::SubcomplexMask(s.size()))) == std::vector<std::size_t>{1, 0, 0});
}
