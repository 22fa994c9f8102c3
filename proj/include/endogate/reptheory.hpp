#pragma once

#include <cstddef>
#include <vector>

#include "endogate/gf2.hpp"
#include "endogate/qspace.hpp"

namespace endogate::reptheory {

enum class GroupKind { Alternating, Symmetric };

/// Two-generator presentation of A_n or S_n in its natural degree-n action.
/// A_n (odd n): the 3-cycle (0 1 2) and the n-cycle; the n-cycle is even
/// because n is odd. S_n: the transposition (0 1) and the n-cycle.
struct GroupGenerators {
    GroupKind kind;
    std::size_t degree;
    std::vector<qspace::Permutation> gens;
};

GroupGenerators standard_generators(GroupKind kind, std::size_t n);

/// Generator matrices of the action on Q_B ((n-1) x (n-1); odd n only).
std::vector<gf2::BitMatrix> qb_matrices(const GroupGenerators& g);

/// Generator matrices of the natural action on GF(2)^B (n x n).
std::vector<gf2::BitMatrix> full_matrices(const GroupGenerators& g);

/// dim of { X : X commutes with the whole action on Q_B }. 1 certifies that
/// the action is absolutely irreducible.
std::size_t commutant_dimension_on_qb(const GroupGenerators& g);

/// dim of the commutant of the n x n permutation action; 2 for any doubly
/// transitive group (identity and all-ones).
std::size_t commutant_dimension_on_full(const GroupGenerators& g);

inline constexpr std::size_t kDefaultSpinCap = 21;

/// Exhaustive irreducibility check: spins every nonzero vector of GF(2)^(n-1)
/// under the generator matrices and demands the full space each time. This is
/// a proof, not sampled evidence; capped because the loop is over 2^(n-1)-1
/// vectors.
bool is_irreducible_by_spin(const GroupGenerators& g, std::size_t degree_cap = kDefaultSpinCap);

struct ReductionStep {
    qspace::Permutation mover;
    qspace::EvenSubset result;
};

/// Constructive witness that the submodule generated by a nonempty even set t
/// contains a 2-element set: each step replaces t_j by t_j Δ s(t_j) for an
/// even 3-cycle s moving exactly one element of t_j out, which lands on a
/// 2-element set directly. The primary 3-cycle choice takes a = largest label
/// in t, b = smallest label outside, c = a second label outside (or inside t
/// when none is left); if the cardinality contract fails, all 3-cycles are
/// searched.
std::vector<ReductionStep> reduce_to_pair(const qspace::EvenSubset& t, const GroupGenerators& g);

}  // namespace endogate::reptheory
