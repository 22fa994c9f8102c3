#include "endogate/qspace.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace endogate::qspace {

LabelSet::LabelSet(std::size_t n) : n_(n) {
    if (n < kMinLabels || n > kMaxLabels)
        throw std::invalid_argument("LabelSet: size " + std::to_string(n) + " outside " +
                                    std::to_string(kMinLabels) + ".." + std::to_string(kMaxLabels));
    if (n % 2 == 0)
        throw std::invalid_argument("LabelSet: size must be odd, got " + std::to_string(n));
}

EvenSubset::EvenSubset(const LabelSet& parent, std::uint64_t mask) : parent_(parent), mask_(mask) {
    if (mask & ~parent.full_mask())
        throw std::invalid_argument("EvenSubset: mask has labels outside 0.." +
                                    std::to_string(parent.size() - 1));
    if (std::popcount(mask) % 2 != 0)
        throw std::invalid_argument("EvenSubset: odd cardinality " +
                                    std::to_string(std::popcount(mask)));
}

EvenSubset EvenSubset::pair(const LabelSet& parent, std::size_t a, std::size_t b) {
    if (a == b) throw std::invalid_argument("EvenSubset::pair: labels must differ");
    return EvenSubset(parent, (std::uint64_t{1} << a) | (std::uint64_t{1} << b));
}

std::size_t EvenSubset::cardinality() const { return static_cast<std::size_t>(std::popcount(mask_)); }

bool EvenSubset::contains(std::size_t label) const {
    return label < parent_.size() && ((mask_ >> label) & 1u);
}

std::vector<std::size_t> EvenSubset::labels() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < parent_.size(); ++i)
        if ((mask_ >> i) & 1u) out.push_back(i);
    return out;
}

std::string EvenSubset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t lbl : labels()) {
        if (!first) s += ",";
        s += std::to_string(lbl);
        first = false;
    }
    return s + "}";
}

EvenSubset symdiff(const EvenSubset& t1, const EvenSubset& t2) {
    if (!(t1.parent() == t2.parent()))
        throw std::invalid_argument("symdiff: subsets of different label sets");
    return EvenSubset(t1.parent(), t1.mask() ^ t2.mask());
}

gf2::BitVector coords(const EvenSubset& t) {
    const std::size_t n = t.parent().size();
    gf2::BitVector v(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (t.contains(i)) v.set(i, true);
    return v;
}

EvenSubset subset_from_coords(const gf2::BitVector& v, const LabelSet& parent) {
    const std::size_t n = parent.size();
    if (v.len() != n - 1)
        throw std::invalid_argument("subset_from_coords: expected length " + std::to_string(n - 1) +
                                    ", got " + std::to_string(v.len()));
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (v.get(i)) mask |= std::uint64_t{1} << i;
    // Membership of the last label restores even cardinality.
    if (std::popcount(mask) % 2 != 0) mask |= std::uint64_t{1} << (n - 1);
    return EvenSubset(parent, mask);
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    const std::size_t n = images_.size();
    std::vector<bool> seen(n, false);
    for (std::size_t img : images_) {
        if (img >= n || seen[img])
            throw std::invalid_argument("Permutation: images are not a bijection of 0.." +
                                        std::to_string(n - 1));
        seen[img] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{0});
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycle(std::size_t n, std::span<const std::size_t> cycle) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{0});
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (cycle[i] >= n) throw std::invalid_argument("Permutation::from_cycle: label out of range");
        img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycle(std::size_t n, std::initializer_list<std::size_t> cycle) {
    return from_cycle(n, std::span<const std::size_t>(cycle.begin(), cycle.size()));
}

std::size_t Permutation::operator()(std::size_t label) const {
    if (label >= images_.size()) throw std::out_of_range("Permutation: label out of range");
    return images_[label];
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_even() const {
    // Parity from the cycle decomposition: sign = (-1)^(n - #cycles).
    const std::size_t n = images_.size();
    std::vector<bool> seen(n, false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
    }
    return (n - cycles) % 2 == 0;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

EvenSubset Permutation::apply(const EvenSubset& t) const {
    if (degree() != t.parent().size())
        throw std::invalid_argument("Permutation::apply: degree mismatch");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < degree(); ++i)
        if (t.contains(i)) mask |= std::uint64_t{1} << images_[i];
    return EvenSubset(t.parent(), mask);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("Permutation: degree mismatch in *");
    std::vector<std::size_t> img(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) img[i] = a.images_[b.images_[i]];
    return Permutation(std::move(img));
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(images_[i]);
    }
    return s + "]";
}

gf2::BitMatrix perm_matrix(const Permutation& s) {
    const std::size_t n = s.degree();
    const LabelSet labels(n);  // enforces odd n >= 5
    const std::size_t m = n - 1;
    gf2::BitMatrix mat(m);
    for (std::size_t i = 0; i < m; ++i) {
        const gf2::BitVector col = coords(s.apply(EvenSubset::pair(labels, i, n - 1)));
        for (std::size_t r = 0; r < m; ++r)
            if (col.get(r)) mat.set(r, i, true);
    }
    return mat;
}

gf2::BitMatrix perm_matrix_full(const Permutation& s) {
    const std::size_t n = s.degree();
    gf2::BitMatrix mat(n);
    for (std::size_t i = 0; i < n; ++i) mat.set(s(i), i, true);
    return mat;
}

SplittingReport verify_splitting(std::size_t n) {
    const LabelSet labels(n);  // precondition: odd n in range
    SplittingReport report;
    report.n = n;

    // Work inside GF(2)^B, vectors indexed by labels. Q_B is spanned by the
    // pair sets {i, j}; L by the full set B.
    std::vector<gf2::BitVector> pair_sets;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            gf2::BitVector v(n);
            v.set(i, true);
            v.set(j, true);
            pair_sets.push_back(std::move(v));
        }
    }
    gf2::SubspaceBasis qb = echelonize(pair_sets, n);
    report.dim_qb = qb.rank();

    gf2::BitVector full(n);
    for (std::size_t i = 0; i < n; ++i) full.set(i, true);
    report.dim_line = 1;
    report.full_set_outside_qb = !qb.contains(full);
    // L is one-dimensional, so B outside Q_B already gives Q_B ∩ L = 0.
    report.intersection_trivial = report.full_set_outside_qb;

    gf2::SubspaceBasis sum = qb;
    sum.insert(full);
    report.dim_total = sum.rank();
    report.sum_is_everything = sum.rank() == n;

    report.pass = report.dim_qb == n - 1 && report.full_set_outside_qb &&
                  report.intersection_trivial && report.sum_is_everything;
    return report;
}

}  // namespace endogate::qspace
