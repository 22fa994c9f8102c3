#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "endogate/dichotomy.hpp"

using namespace endogate;
using dichotomy::Verdict;
using reptheory::GroupKind;

namespace {

gf2::BitMatrix random_nonscalar(std::mt19937_64& rng, std::size_t dim) {
    while (true) {
        gf2::BitMatrix m = gf2::random_matrix(rng, dim);
        if (!m.is_scalar()) return m;
    }
}

}  // namespace

TEST_CASE("scalar seeds close to the scalar algebra") {
    const auto g = reptheory::standard_generators(GroupKind::Alternating, 5);
    CHECK(dichotomy::check_dichotomy({}, g).verdict == Verdict::Scalar);

    const std::vector<gf2::BitMatrix> id{gf2::BitMatrix::identity(4)};
    const auto r = dichotomy::check_dichotomy(id, g);
    CHECK(r.verdict == Verdict::Scalar);
    CHECK(r.dimension == 1);
}

TEST_CASE("a group-generator seed closes to the full matrix algebra") {
    const auto g = reptheory::standard_generators(GroupKind::Alternating, 5);
    const std::vector<gf2::BitMatrix> seed{reptheory::qb_matrices(g)[0]};
    const auto basis = dichotomy::closed_algebra(seed, g);
    CHECK(basis.rank() == 16);
}

TEST_CASE("seed dimension mismatch") {
    const auto g = reptheory::standard_generators(GroupKind::Alternating, 7);
    const std::vector<gf2::BitMatrix> wrong{gf2::BitMatrix::identity(4)};
    CHECK_THROWS_AS(dichotomy::closed_algebra(wrong, g), std::invalid_argument);
}

TEST_CASE("randomized dichotomy never sees a violation (1000 trials)") {
    std::mt19937_64 rng(20240817);
    for (std::size_t n : {5u, 7u, 9u, 11u}) {
        const auto g = reptheory::standard_generators(GroupKind::Alternating, n);
        const std::size_t dim = n - 1;
        for (int trial = 0; trial < 250; ++trial) {
            const std::vector<gf2::BitMatrix> seeds{random_nonscalar(rng, dim)};
            const auto r = dichotomy::check_dichotomy(seeds, g);
            REQUIRE(r.verdict == Verdict::Full);
            CHECK(r.dimension == dim * dim);
        }
    }
}

TEST_CASE("symmetric-group conjugation gives the same dichotomy") {
    std::mt19937_64 rng(31);
    const auto g = reptheory::standard_generators(GroupKind::Symmetric, 5);
    for (int trial = 0; trial < 25; ++trial) {
        const std::vector<gf2::BitMatrix> seeds{random_nonscalar(rng, 4)};
        CHECK(dichotomy::check_dichotomy(seeds, g).verdict == Verdict::Full);
    }
}

TEST_CASE("closure is monotone in seeds and idempotent") {
    std::mt19937_64 rng(32);
    const auto g = reptheory::standard_generators(GroupKind::Alternating, 5);
    for (int trial = 0; trial < 10; ++trial) {
        const gf2::BitMatrix a = gf2::random_matrix(rng, 4);
        const gf2::BitMatrix b = gf2::random_matrix(rng, 4);
        const auto just_a = dichotomy::closed_algebra(std::vector{a}, g);
        const auto both = dichotomy::closed_algebra(std::vector{a, b}, g);
        CHECK(just_a.rank() <= both.rank());
        for (const auto& v : just_a.basis()) CHECK(both.contains(v));

        // Closing the closure adds nothing.
        std::vector<gf2::BitMatrix> reclose;
        for (const auto& v : both.basis()) reclose.push_back(gf2::BitMatrix::unflatten(v, 4));
        CHECK(dichotomy::closed_algebra(reclose, g).rank() == both.rank());
    }
}

TEST_CASE("closure dimension is invariant under conjugating the seeds") {
    std::mt19937_64 rng(33);
    const auto g = reptheory::standard_generators(GroupKind::Alternating, 7);
    const auto group_mats = reptheory::qb_matrices(g);
    for (int trial = 0; trial < 10; ++trial) {
        const gf2::BitMatrix seed = random_nonscalar(rng, 6);
        gf2::BitMatrix word = gf2::BitMatrix::identity(6);
        for (int k = 0; k < 5; ++k) word = mat_mul(word, group_mats[rng() % group_mats.size()]);
        const gf2::BitMatrix moved = mat_mul(mat_mul(word, seed), *word.inverse());
        CHECK(dichotomy::closed_algebra(std::vector{seed}, g).rank() ==
              dichotomy::closed_algebra(std::vector{moved}, g).rank());
    }
}

TEST_CASE("observation bound: named cases and the exhaustive sweep") {
    CHECK(dichotomy::observation_bound(5, 2));  // 2^4 <= 2^4 < 60
    CHECK(dichotomy::observation_bound(5, 1));
    CHECK(dichotomy::observation_bound(5, 7));  // vacuous: 49 > 4
    for (unsigned n = 5; n <= 25; ++n)
        for (unsigned c = 1; c * c <= n - 1; ++c) CHECK(dichotomy::observation_bound(n, c));
    CHECK_THROWS_AS(dichotomy::observation_bound(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(dichotomy::observation_bound(5, 0), std::invalid_argument);
}

TEST_CASE("proof trace bookkeeping") {
    const auto g = reptheory::standard_generators(GroupKind::Alternating, 5);

    // Scalar algebra: commutant is everything, center of the full algebra is
    // one-dimensional.
    const auto scalar = dichotomy::proof_trace({}, g);
    CHECK(scalar.verdict == Verdict::Scalar);
    CHECK(scalar.dim_r == 1);
    CHECK(scalar.dim_endo == 16);
    CHECK(scalar.dim_center == 1);
    CHECK(scalar.center_is_prime_field);
    CHECK(scalar.product_consistent);

    // Full algebra: commutant collapses to the scalars.
    const std::vector<gf2::BitMatrix> seed{reptheory::qb_matrices(g)[0]};
    const auto full = dichotomy::proof_trace(seed, g);
    CHECK(full.verdict == Verdict::Full);
    CHECK(full.dim_r == 16);
    CHECK(full.dim_endo == 1);
    CHECK(full.dim_center == 1);
    CHECK(full.product_consistent);
}

TEST_CASE("proof trace for a random full instance at n=7") {
    std::mt19937_64 rng(34);
    const auto g = reptheory::standard_generators(GroupKind::Alternating, 7);
    const std::vector<gf2::BitMatrix> seeds{random_nonscalar(rng, 6)};
    const auto t = dichotomy::proof_trace(seeds, g);
    CHECK(t.verdict == Verdict::Full);
    CHECK(t.dim_r == 36);
    CHECK(t.dim_endo == 1);
    CHECK(t.dim_r * t.dim_endo == 36);
    CHECK(t.center_is_prime_field);
}
