#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "endogate/gf2.hpp"
#include "endogate/qspace.hpp"
#include "endogate/reptheory.hpp"

using namespace endogate;
using gf2::BitMatrix;
using gf2::BitVector;

namespace {

BitMatrix random4(std::mt19937_64& rng) { return gf2::random_matrix(rng, 4); }

}  // namespace

TEST_CASE("bit vector basics") {
    BitVector v(130);
    CHECK(v.is_zero());
    v.set(0, true);
    v.set(129, true);
    CHECK(v.popcount() == 2);
    CHECK(v.first_set() == 0);
    v ^= v;
    CHECK(v.is_zero());

    BitVector a = BitVector::from_bits({1, 0, 1});
    BitVector b = BitVector::from_bits({0, 1, 1});
    CHECK((a ^ b) == BitVector::from_bits({1, 1, 0}));
    CHECK_THROWS_AS(a ^= BitVector(5), std::invalid_argument);
}

TEST_CASE("matrix multiplication: identity and involution") {
    std::mt19937_64 rng(1);
    const BitMatrix id = BitMatrix::identity(4);
    for (int i = 0; i < 10; ++i) {
        const BitMatrix a = random4(rng);
        CHECK(mat_mul(id, a) == a);
        CHECK(mat_mul(a, id) == a);
    }

    // Permutation matrix of a transposition squares to the identity.
    const auto swap01 = qspace::perm_matrix_full(qspace::Permutation::from_cycle(5, {0, 1}));
    CHECK(mat_mul(swap01, swap01) == BitMatrix::identity(5));

    CHECK_THROWS_AS(mat_mul(BitMatrix(3), BitMatrix(4)), std::invalid_argument);
}

TEST_CASE("matrix product of group generators matches composed permutation") {
    const auto g = reptheory::standard_generators(reptheory::GroupKind::Alternating, 5);
    const auto m0 = qspace::perm_matrix(g.gens[0]);
    const auto m1 = qspace::perm_matrix(g.gens[1]);
    CHECK(mat_mul(m0, m1) == qspace::perm_matrix(g.gens[0] * g.gens[1]));
    CHECK(mat_mul(m1, m0) == qspace::perm_matrix(g.gens[1] * g.gens[0]));
}

TEST_CASE("matrix distributivity and associativity hold on random samples") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 25; ++i) {
        const BitMatrix a = random4(rng), b = random4(rng), c = random4(rng);
        CHECK(mat_mul(a ^ b, c) == (mat_mul(a, c) ^ mat_mul(b, c)));
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    }
}

TEST_CASE("flatten round trip") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        const BitMatrix a = gf2::random_matrix(rng, 7);
        CHECK(BitMatrix::unflatten(a.flatten(), 7) == a);
    }
}

TEST_CASE("inverse") {
    const auto g = reptheory::standard_generators(reptheory::GroupKind::Symmetric, 7);
    const auto m = qspace::perm_matrix(g.gens[1]);
    const auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK(mat_mul(m, *inv) == BitMatrix::identity(6));

    BitMatrix singular(3);  // zero matrix
    CHECK_FALSE(singular.inverse().has_value());
}

TEST_CASE("echelonize: zero input, dependent vectors, rank bound") {
    const std::vector<BitVector> zero{BitVector(6)};
    CHECK(echelonize(zero).rank() == 0);

    const std::vector<BitVector> dependent{
        BitVector::from_bits({1, 0, 0}),
        BitVector::from_bits({1, 1, 0}),
        BitVector::from_bits({0, 1, 0}),
    };
    CHECK(echelonize(dependent).rank() == 2);

    // Flattened identity plus 15 random 4x4 matrices: rank at most 16.
    std::mt19937_64 rng(4);
    std::vector<BitVector> flat{BitMatrix::identity(4).flatten()};
    for (int i = 0; i < 15; ++i) flat.push_back(random4(rng).flatten());
    CHECK(echelonize(flat).rank() <= 16);
}

TEST_CASE("echelonize is idempotent and canonical") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<BitVector> vecs;
        for (int i = 0; i < 8; ++i) vecs.push_back(gf2::random_matrix(rng, 3).flatten());
        const gf2::SubspaceBasis first = echelonize(vecs, 9);
        const gf2::SubspaceBasis second = echelonize(first.basis(), 9);
        CHECK(first == second);

        // Pivots strictly increase.
        for (std::size_t i = 1; i < first.basis().size(); ++i)
            CHECK(first.basis()[i - 1].first_set() < first.basis()[i].first_set());

        // Membership agrees with linear span: any sum of basis vectors reduces to zero.
        if (first.rank() >= 2) {
            BitVector combo = first.basis()[0] ^ first.basis()[first.rank() - 1];
            CHECK(first.contains(combo));
        }
    }
}

TEST_CASE("commutant: no generators give the whole matrix space") {
    CHECK(gf2::commutant({}, 3).rank() == 9);
}

TEST_CASE("commutant of the alternating action") {
    const auto g5 = reptheory::standard_generators(reptheory::GroupKind::Alternating, 5);
    CHECK(gf2::commutant(reptheory::qb_matrices(g5), 4).rank() == 1);
    CHECK(gf2::commutant(reptheory::full_matrices(g5), 5).rank() == 2);
}

TEST_CASE("commutant always contains the identity and is conjugation invariant") {
    std::mt19937_64 rng(6);
    const auto g = reptheory::standard_generators(reptheory::GroupKind::Alternating, 5);
    const auto mats = reptheory::qb_matrices(g);
    const auto com = gf2::commutant(mats, 4);
    CHECK(com.contains(BitMatrix::identity(4).flatten()));

    // Conjugating all generators by a fixed invertible u preserves the dimension.
    BitMatrix u = random4(rng);
    while (!u.inverse()) u = random4(rng);
    const BitMatrix ui = *u.inverse();
    std::vector<BitMatrix> conjugated;
    for (const auto& m : mats) conjugated.push_back(mat_mul(mat_mul(u, m), ui));
    CHECK(gf2::commutant(conjugated, 4).rank() == com.rank());
}

TEST_CASE("algebra_closure trivial cases") {
    const auto g = reptheory::standard_generators(reptheory::GroupKind::Alternating, 5);
    const auto conj = reptheory::qb_matrices(g);

    CHECK(gf2::algebra_closure({}, conj, 4).rank() == 1);

    const std::vector<BitMatrix> zero_seed{BitMatrix(4)};  // Id + Id = 0
    CHECK(gf2::algebra_closure(zero_seed, conj, 4).rank() == 1);

    const std::vector<BitMatrix> id_seed{BitMatrix::identity(4)};
    CHECK(gf2::algebra_closure(id_seed, conj, 4).rank() == 1);
}

TEST_CASE("algebra_closure of one group matrix under conjugation is everything") {
    const auto g = reptheory::standard_generators(reptheory::GroupKind::Alternating, 5);
    const auto conj = reptheory::qb_matrices(g);
    const std::vector<BitMatrix> seed{conj[0]};
    gf2::ClosureStats stats;
    const auto closure = gf2::algebra_closure(seed, conj, 4, &stats);
    CHECK(closure.rank() == 16);
    CHECK(stats.rounds <= 18);
}

TEST_CASE("algebra_closure rejects singular conjugators") {
    const std::vector<BitMatrix> bad{BitMatrix(4)};
    CHECK_THROWS_AS(gf2::algebra_closure({}, bad, 4), std::invalid_argument);
}

TEST_CASE("algebra_closure contains seeds and identity; it is a fixed point") {
    std::mt19937_64 rng(7);
    const auto g = reptheory::standard_generators(reptheory::GroupKind::Alternating, 5);
    const auto conj = reptheory::qb_matrices(g);
    std::vector<BitMatrix> conj_inv;
    for (const auto& u : conj) conj_inv.push_back(*u.inverse());

    for (int trial = 0; trial < 10; ++trial) {
        const std::vector<BitMatrix> seeds{random4(rng), random4(rng)};
        const auto closure = gf2::algebra_closure(seeds, conj, 4);

        CHECK(closure.contains(BitMatrix::identity(4).flatten()));
        for (const auto& s : seeds) CHECK(closure.contains(s.flatten()));

        // One more full round of products and conjugations adds nothing.
        std::vector<BitMatrix> elements;
        for (const auto& v : closure.basis()) elements.push_back(BitMatrix::unflatten(v, 4));
        for (const auto& x : elements) {
            for (const auto& y : elements) CHECK(closure.contains(mat_mul(x, y).flatten()));
            for (std::size_t u = 0; u < conj.size(); ++u)
                CHECK(closure.contains(mat_mul(mat_mul(conj[u], x), conj_inv[u]).flatten()));
        }

        // Conjugation by a random word in the group keeps membership.
        BitMatrix word = BitMatrix::identity(4);
        for (int k = 0; k < 6; ++k) word = mat_mul(word, conj[rng() % conj.size()]);
        const BitMatrix word_inv = *word.inverse();
        for (const auto& x : elements)
            CHECK(closure.contains(mat_mul(mat_mul(word, x), word_inv).flatten()));
    }
}

TEST_CASE("kernel_basis solves the homogeneous system") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<BitVector> rows;
        for (int i = 0; i < 5; ++i) rows.push_back(gf2::random_matrix(rng, 3).flatten());
        const auto kernel = gf2::kernel_basis(rows, 9);
        const auto row_space = echelonize(rows, 9);
        CHECK(kernel.size() == 9 - row_space.rank());
        for (const auto& v : kernel) {
            for (const auto& r : rows) {
                // Dot product over GF(2).
                std::size_t parity = 0;
                for (std::size_t i = 0; i < 9; ++i) parity ^= (r.get(i) && v.get(i)) ? 1 : 0;
                CHECK(parity == 0);
            }
        }
    }
}
