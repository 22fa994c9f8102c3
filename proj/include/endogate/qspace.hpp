#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "endogate/gf2.hpp"

namespace endogate::qspace {

inline constexpr std::size_t kMinLabels = 5;
inline constexpr std::size_t kMaxLabels = gf2::kMaxDim;

/// The label set B = {0, .., n-1}. n is odd, 5 <= n <= 33.
class LabelSet {
public:
    explicit LabelSet(std::size_t n);
    std::size_t size() const { return n_; }
    std::uint64_t full_mask() const { return (std::uint64_t{1} << n_) - 1; }
    friend bool operator==(const LabelSet&, const LabelSet&) = default;

private:
    std::size_t n_;
};

/// Even-cardinality subset of a label set; the element type of the space Q_B,
/// which carries symmetric difference as its group law.
class EvenSubset {
public:
    EvenSubset(const LabelSet& parent, std::uint64_t mask);
    static EvenSubset empty(const LabelSet& parent) { return EvenSubset(parent, 0); }
    static EvenSubset pair(const LabelSet& parent, std::size_t a, std::size_t b);

    const LabelSet& parent() const { return parent_; }
    std::uint64_t mask() const { return mask_; }
    std::size_t cardinality() const;
    bool contains(std::size_t label) const;
    bool is_empty() const { return mask_ == 0; }

    std::vector<std::size_t> labels() const;
    std::string to_string() const;

    friend bool operator==(const EvenSubset&, const EvenSubset&) = default;

private:
    LabelSet parent_;
    std::uint64_t mask_;
};

EvenSubset symdiff(const EvenSubset& t1, const EvenSubset& t2);

/// Coordinates in the basis T_i = {i, n-1}, i = 0..n-2: coordinate i is the
/// membership bit of label i, so the map is a mask truncation. It is a group
/// isomorphism Q_B -> GF(2)^(n-1).
gf2::BitVector coords(const EvenSubset& t);
EvenSubset subset_from_coords(const gf2::BitVector& v, const LabelSet& parent);

/// Bijection of {0, .., n-1}; images[i] is where label i goes.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> images);
    static Permutation identity(std::size_t n);
    /// Cycle notation: (c0 c1 .. ck) maps c0 -> c1 -> .. -> ck -> c0.
    static Permutation from_cycle(std::size_t n, std::span<const std::size_t> cycle);
    static Permutation from_cycle(std::size_t n, std::initializer_list<std::size_t> cycle);

    std::size_t degree() const { return images_.size(); }
    std::size_t operator()(std::size_t label) const;
    Permutation inverse() const;
    bool is_even() const;
    bool is_identity() const;

    /// Relabeling action on subsets: s(T) = { s(t) : t in T }.
    EvenSubset apply(const EvenSubset& t) const;

    /// Composition: (a * b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;

    std::string to_string() const;

private:
    std::vector<std::size_t> images_;
};

/// (n-1) x (n-1) matrix M with M.coords(t) = coords(s(t)) for every even
/// subset t, built column-by-column from the action on the basis sets {i, n-1}.
gf2::BitMatrix perm_matrix(const Permutation& s);

/// n x n permutation matrix of the action on all subsets (M e_i = e_{s(i)}).
gf2::BitMatrix perm_matrix_full(const Permutation& s);

struct SplittingReport {
    std::size_t n = 0;
    std::size_t dim_qb = 0;
    std::size_t dim_line = 0;
    std::size_t dim_total = 0;
    bool full_set_outside_qb = false;
    bool intersection_trivial = false;
    bool sum_is_everything = false;
    bool pass = false;
};

/// Checks dim Q_B = n-1, B not in Q_B, Q_B ∩ L = 0 and Q_B + L = GF(2)^B,
/// where L is the line spanned by the full set B inside the space of all
/// subsets of B.
SplittingReport verify_splitting(std::size_t n);

}  // namespace endogate::qspace
