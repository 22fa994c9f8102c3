#include "endogate/reptheory.hpp"

#include <numeric>
#include <stdexcept>

namespace endogate::reptheory {

using qspace::EvenSubset;
using qspace::Permutation;

GroupGenerators standard_generators(GroupKind kind, std::size_t n) {
    if (n < 5) throw std::invalid_argument("standard_generators: degree must be >= 5");
    if (kind == GroupKind::Alternating && n % 2 == 0)
        throw std::invalid_argument(
            "standard_generators: the alternating construction needs odd degree (the n-cycle "
            "must be even)");

    std::vector<std::size_t> full_cycle(n);
    std::iota(full_cycle.begin(), full_cycle.end(), std::size_t{0});

    std::vector<Permutation> gens;
    if (kind == GroupKind::Alternating)
        gens.push_back(Permutation::from_cycle(n, {0, 1, 2}));
    else
        gens.push_back(Permutation::from_cycle(n, {0, 1}));
    gens.push_back(Permutation::from_cycle(n, full_cycle));

    for (const Permutation& s : gens) {
        if (s.is_identity()) throw std::logic_error("standard_generators: identity generator");
        if (kind == GroupKind::Alternating && !s.is_even())
            throw std::logic_error("standard_generators: odd generator for an alternating group");
    }
    return GroupGenerators{kind, n, std::move(gens)};
}

std::vector<gf2::BitMatrix> qb_matrices(const GroupGenerators& g) {
    std::vector<gf2::BitMatrix> mats;
    mats.reserve(g.gens.size());
    for (const Permutation& s : g.gens) mats.push_back(qspace::perm_matrix(s));
    return mats;
}

std::vector<gf2::BitMatrix> full_matrices(const GroupGenerators& g) {
    std::vector<gf2::BitMatrix> mats;
    mats.reserve(g.gens.size());
    for (const Permutation& s : g.gens) mats.push_back(qspace::perm_matrix_full(s));
    return mats;
}

std::size_t commutant_dimension_on_qb(const GroupGenerators& g) {
    const auto mats = qb_matrices(g);
    return gf2::commutant(mats, g.degree - 1).rank();
}

std::size_t commutant_dimension_on_full(const GroupGenerators& g) {
    const auto mats = full_matrices(g);
    return gf2::commutant(mats, g.degree).rank();
}

namespace {

/// Smallest subspace containing v and stable under all generator matrices.
std::size_t spin_dimension(const gf2::BitVector& v, const std::vector<gf2::BitMatrix>& mats,
                           std::size_t dim) {
    gf2::SubspaceBasis span(dim);
    std::vector<gf2::BitVector> work;
    if (span.insert(v)) work.push_back(v);
    while (!work.empty() && span.rank() < dim) {
        gf2::BitVector cur = std::move(work.back());
        work.pop_back();
        for (const gf2::BitMatrix& m : mats) {
            gf2::BitVector img = m.apply(cur);
            if (span.insert(img)) work.push_back(std::move(img));
        }
    }
    return span.rank();
}

}  // namespace

bool is_irreducible_by_spin(const GroupGenerators& g, std::size_t degree_cap) {
    const std::size_t n = g.degree;
    if (n % 2 == 0) throw std::invalid_argument("is_irreducible_by_spin: degree must be odd");
    if (n > degree_cap)
        throw std::invalid_argument("is_irreducible_by_spin: degree " + std::to_string(n) +
                                    " above cap " + std::to_string(degree_cap));
    const std::size_t dim = n - 1;
    const auto mats = qb_matrices(g);

    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << dim); ++bits) {
        gf2::BitVector v(dim);
        for (std::size_t i = 0; i < dim; ++i)
            if ((bits >> i) & 1u) v.set(i, true);
        if (spin_dimension(v, mats, dim) != dim) return false;
    }
    return true;
}

namespace {

bool step_contract_holds(const EvenSubset& t, const Permutation& s) {
    const EvenSubset image = s.apply(t);
    return symdiff(t, image).cardinality() == 2;
}

Permutation find_reduction_cycle(const EvenSubset& t, std::size_t n) {
    // Primary choice: a = largest label in t, b = smallest label outside t,
    // c = another label outside t, falling back to one inside t when the
    // complement has a single element.
    const auto members = t.labels();
    const std::size_t a = members.back();
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < n; ++i)
        if (!t.contains(i)) outside.push_back(i);
    // t is even and n odd, so the complement is never empty.
    const std::size_t b = outside.front();

    // |t| >= 4 here, so members.front() differs from a.
    const std::size_t c = outside.size() >= 2 ? outside[1] : members.front();
    Permutation s = Permutation::from_cycle(n, {a, b, c});
    if (step_contract_holds(t, s)) return s;

    // Verified fallback: scan every 3-cycle for one satisfying the contract.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                Permutation cand = Permutation::from_cycle(n, {x, y, z});
                if (step_contract_holds(t, cand)) return cand;
            }
    throw std::logic_error("reduce_to_pair: no 3-cycle satisfies the cardinality contract");
}

}  // namespace

std::vector<ReductionStep> reduce_to_pair(const EvenSubset& t, const GroupGenerators& g) {
    const std::size_t n = t.parent().size();
    if (t.is_empty()) throw std::invalid_argument("reduce_to_pair: empty set");
    if (g.kind != GroupKind::Alternating)
        throw std::invalid_argument("reduce_to_pair: alternating group required");
    if (g.degree != n) throw std::invalid_argument("reduce_to_pair: degree mismatch");

    std::vector<ReductionStep> trace;
    EvenSubset current = t;
    while (current.cardinality() > 2) {
        const Permutation s = find_reduction_cycle(current, n);
        EvenSubset next = symdiff(current, s.apply(current));
        if (next.cardinality() >= current.cardinality())
            throw std::logic_error("reduce_to_pair: cardinality failed to drop");
        trace.push_back(ReductionStep{s, next});
        current = next;
    }
    return trace;
}

}  // namespace endogate::reptheory
