#pragma once

#include <cstdint>
#include <string>

#include "endogate/qspace.hpp"

namespace endogate::jactwo {

/// The branch locus of y^2 = f(x): the n finite Weierstrass labels (roots of
/// f) plus the distinguished point at infinity, n+1 points in all.
class WeierstrassSet {
public:
    explicit WeierstrassSet(std::size_t n) : roots_(n) {}
    const qspace::LabelSet& roots() const { return roots_; }
    std::size_t root_count() const { return roots_.size(); }
    std::size_t genus() const { return (roots_.size() - 1) / 2; }
    friend bool operator==(const WeierstrassSet&, const WeierstrassSet&) = default;

private:
    qspace::LabelSet roots_;
};

/// An even-cardinality subset of the full branch locus, prior to
/// normalization: a root mask plus an optional infinity membership bit.
struct BranchSubset {
    std::uint64_t root_mask = 0;
    bool with_infinity = false;
};

/// A 2-torsion divisor class in canonical form. Of the two subsets cutting
/// out the same class, the representative is the one avoiding infinity.
class TwoTorsionClass {
public:
    TwoTorsionClass(const WeierstrassSet& parent, qspace::EvenSubset rep);
    const WeierstrassSet& parent() const { return parent_; }
    const qspace::EvenSubset& rep() const { return rep_; }
    bool is_identity() const { return rep_.is_empty(); }
    std::string to_string() const { return rep_.to_string(); }
    friend bool operator==(const TwoTorsionClass&, const TwoTorsionClass&) = default;

private:
    WeierstrassSet parent_;
    qspace::EvenSubset rep_;
};

/// Canonical representative of the class of t: t itself when it avoids
/// infinity, otherwise the complement within the full branch locus.
TwoTorsionClass normalize(const WeierstrassSet& w, const BranchSubset& t);

/// Group law: the class of the symmetric difference of representatives.
TwoTorsionClass add(const TwoTorsionClass& c1, const TwoTorsionClass& c2);

/// Galois action through a permutation of the roots (infinity is rational
/// and stays fixed).
TwoTorsionClass galois_act(const qspace::Permutation& s, const TwoTorsionClass& c);

/// The canonical identification with Q_B and its inverse.
qspace::EvenSubset iso_to_qb(const TwoTorsionClass& c);
TwoTorsionClass class_from_qb(const WeierstrassSet& w, const qspace::EvenSubset& t);

}  // namespace endogate::jactwo
