#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "endogate/jactwo.hpp"
#include "endogate/reptheory.hpp"

using namespace endogate;
using jactwo::BranchSubset;
using jactwo::TwoTorsionClass;
using jactwo::WeierstrassSet;
using qspace::EvenSubset;
using qspace::Permutation;

namespace {

std::vector<TwoTorsionClass> all_classes(const WeierstrassSet& w) {
    std::vector<TwoTorsionClass> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w.root_count()); ++mask)
        if (std::popcount(mask) % 2 == 0)
            out.push_back(jactwo::normalize(w, BranchSubset{mask, false}));
    return out;
}

}  // namespace

TEST_CASE("normalize: identity, complement rule, already canonical") {
    const WeierstrassSet w(5);
    CHECK(jactwo::normalize(w, BranchSubset{0, false}).is_identity());

    // {infinity, r0} -> {r1, r2, r3, r4}
    const auto c = jactwo::normalize(w, BranchSubset{0b00001, true});
    CHECK(c.rep().mask() == 0b11110);

    const auto d = jactwo::normalize(w, BranchSubset{0b00011, false});
    CHECK(d.rep().mask() == 0b00011);

    CHECK_THROWS_AS(jactwo::normalize(w, BranchSubset{0b00001, false}), std::invalid_argument);
    CHECK_THROWS_AS(jactwo::normalize(w, BranchSubset{0b00011, true}), std::invalid_argument);
}

TEST_CASE("normalize is idempotent and constant on complement pairs") {
    const WeierstrassSet w(7);
    for (std::uint64_t mask = 0; mask < (1u << 7); ++mask) {
        if (std::popcount(mask) % 2 != 0) continue;
        const auto direct = jactwo::normalize(w, BranchSubset{mask, false});
        const auto again = jactwo::normalize(w, BranchSubset{direct.rep().mask(), false});
        CHECK(direct == again);
        const std::uint64_t complement = w.roots().full_mask() & ~mask;
        const auto via_complement = jactwo::normalize(w, BranchSubset{complement, true});
        CHECK(via_complement == direct);
    }
}

TEST_CASE("group law on named cases") {
    const WeierstrassSet w(5);
    const auto r01 = jactwo::normalize(w, BranchSubset{0b00011, false});
    const auto r12 = jactwo::normalize(w, BranchSubset{0b00110, false});
    CHECK(add(r01, r01).is_identity());
    CHECK(add(r01, r12).rep().mask() == 0b00101);

    const WeierstrassSet other(7);
    CHECK_THROWS_AS(add(r01, jactwo::normalize(other, BranchSubset{0, false})),
                    std::invalid_argument);
}

TEST_CASE("the n=5 class group is elementary abelian of order 16") {
    const WeierstrassSet w(5);
    const auto classes = all_classes(w);
    CHECK(classes.size() == 16);  // 2^(n-1) = 2^(2g), g = 2
    CHECK(w.genus() == 2);

    const auto zero = jactwo::normalize(w, BranchSubset{0, false});
    for (const auto& a : classes) {
        CHECK(add(a, zero) == a);
        CHECK(add(a, a) == zero);
        for (const auto& b : classes) {
            CHECK(add(a, b) == add(b, a));
            for (const auto& c : classes) CHECK(add(add(a, b), c) == add(a, add(b, c)));
        }
    }
}

TEST_CASE("galois action basics") {
    const WeierstrassSet w(5);
    const auto c = jactwo::normalize(w, BranchSubset{0b00101, false});  // {r0, r2}
    CHECK(galois_act(Permutation::identity(5), c) == c);
    const auto moved = galois_act(Permutation::from_cycle(5, {0, 1}), c);
    CHECK(moved.rep().mask() == 0b00110);  // {r1, r2}
}

TEST_CASE("galois action is additive, 50 random triples for n=5,7") {
    std::mt19937_64 rng(41);
    for (std::size_t n : {5u, 7u}) {
        const WeierstrassSet w(n);
        auto random_class = [&] {
            std::uint64_t mask = rng() & w.roots().full_mask();
            if (std::popcount(mask) % 2 != 0) mask ^= std::uint64_t{1} << (rng() % n);
            return jactwo::normalize(w, BranchSubset{mask, false});
        };
        auto random_perm = [&] {
            std::vector<std::size_t> img(n);
            for (std::size_t i = 0; i < n; ++i) img[i] = i;
            for (std::size_t i = n; i-- > 1;) std::swap(img[i], img[rng() % (i + 1)]);
            return Permutation(img);
        };
        for (int i = 0; i < 50; ++i) {
            const auto a = random_class(), b = random_class();
            const auto s = random_perm();
            CHECK(galois_act(s, add(a, b)) == add(galois_act(s, a), galois_act(s, b)));
        }
    }
}

TEST_CASE("iso_to_qb is a bijective, additive, equivariant identification") {
    const WeierstrassSet w(5);
    const auto classes = all_classes(w);

    // Round trip over all 16 classes.
    for (const auto& c : classes) CHECK(jactwo::class_from_qb(w, iso_to_qb(c)) == c);
    CHECK(iso_to_qb(jactwo::normalize(w, BranchSubset{0, false})).is_empty());

    // Image group order is 2^(n-1) = 2^(2g): all images distinct.
    std::set<std::uint64_t> images;
    for (const auto& c : classes) images.insert(iso_to_qb(c).mask());
    CHECK(images.size() == 16);

    // Intertwines addition and the group action.
    const auto g = reptheory::standard_generators(reptheory::GroupKind::Alternating, 5);
    for (const auto& a : classes) {
        for (const auto& b : classes)
            CHECK(iso_to_qb(add(a, b)) == symdiff(iso_to_qb(a), iso_to_qb(b)));
        for (const auto& s : g.gens)
            CHECK(iso_to_qb(galois_act(s, a)) == s.apply(iso_to_qb(a)));
    }
}

TEST_CASE("sampled iso checks for n up to 13") {
    std::mt19937_64 rng(42);
    for (std::size_t n : {9u, 13u}) {
        const WeierstrassSet w(n);
        const auto g = reptheory::standard_generators(reptheory::GroupKind::Alternating, n);
        for (int i = 0; i < 100; ++i) {
            std::uint64_t mask = rng() & w.roots().full_mask();
            if (std::popcount(mask) % 2 != 0) mask ^= std::uint64_t{1} << (rng() % n);
            const auto a = jactwo::normalize(w, BranchSubset{mask, false});
            for (const auto& s : g.gens)
                CHECK(iso_to_qb(galois_act(s, a)) == s.apply(iso_to_qb(a)));
        }
    }
}
