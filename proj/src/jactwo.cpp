#include "endogate/jactwo.hpp"

#include <bit>
#include <stdexcept>

namespace endogate::jactwo {

using qspace::EvenSubset;
using qspace::Permutation;

TwoTorsionClass::TwoTorsionClass(const WeierstrassSet& parent, EvenSubset rep)
    : parent_(parent), rep_(std::move(rep)) {
    if (!(rep_.parent() == parent.roots()))
        throw std::invalid_argument("TwoTorsionClass: representative over a different root set");
}

TwoTorsionClass normalize(const WeierstrassSet& w, const BranchSubset& t) {
    if (t.root_mask & ~w.roots().full_mask())
        throw std::invalid_argument("normalize: subset has labels outside the root set");
    const std::size_t card =
        static_cast<std::size_t>(std::popcount(t.root_mask)) + (t.with_infinity ? 1 : 0);
    if (card % 2 != 0)
        throw std::invalid_argument("normalize: subset has odd cardinality " + std::to_string(card));

    std::uint64_t mask = t.root_mask;
    if (t.with_infinity) {
        // Swap to the complement within the full branch locus; |B'| = n+1 is
        // even, so the complement is even too and drops infinity.
        mask = w.roots().full_mask() & ~mask;
    }
    return TwoTorsionClass(w, EvenSubset(w.roots(), mask));
}

TwoTorsionClass add(const TwoTorsionClass& c1, const TwoTorsionClass& c2) {
    if (!(c1.parent() == c2.parent()))
        throw std::invalid_argument("add: classes over different Weierstrass sets");
    // Both representatives avoid infinity, so their symmetric difference does
    // as well; normalization is applied for uniformity.
    return normalize(c1.parent(),
                     BranchSubset{c1.rep().mask() ^ c2.rep().mask(), false});
}

TwoTorsionClass galois_act(const Permutation& s, const TwoTorsionClass& c) {
    if (s.degree() != c.parent().root_count())
        throw std::invalid_argument("galois_act: permutation degree mismatch");
    return TwoTorsionClass(c.parent(), s.apply(c.rep()));
}

qspace::EvenSubset iso_to_qb(const TwoTorsionClass& c) { return c.rep(); }

TwoTorsionClass class_from_qb(const WeierstrassSet& w, const EvenSubset& t) {
    return TwoTorsionClass(w, t);
}

}  // namespace endogate::jactwo
