#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace endogate::gf2 {

// Matrix dimensions are capped so one row always fits a machine word and a
// flattened matrix stays at most kMaxDim^2 bits. 33 covers the full-space
// action for every admissible label-set size.
inline constexpr std::size_t kMaxDim = 33;

/// Dense bit vector over GF(2); coordinates beyond len() are kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len);
    static BitVector from_bits(std::initializer_list<int> bits);

    std::size_t len() const { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    std::size_t popcount() const;
    bool is_zero() const;

    // Index of the first set coordinate, or -1 for the zero vector.
    std::ptrdiff_t first_set() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::uint64_t word(std::size_t w) const { return words_[w]; }
    std::size_t word_count() const { return words_.size(); }

    std::string to_string() const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Square matrix over GF(2), row-major, one word per row (dim <= kMaxDim).
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t dim);
    static BitMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    std::uint64_t row_bits(std::size_t r) const { return rows_[r]; }

    bool is_zero() const;
    bool is_identity() const;
    /// True for the two scalar matrices 0 and Id.
    bool is_scalar() const { return is_zero() || is_identity(); }

    /// Row-major flattening into a length dim^2 vector.
    BitVector flatten() const;
    static BitMatrix unflatten(const BitVector& v, std::size_t dim);

    /// Matrix times column vector.
    BitVector apply(const BitVector& v) const;

    /// Gauss-Jordan inverse; empty when singular.
    std::optional<BitMatrix> inverse() const;

    BitMatrix& operator^=(const BitMatrix& other);
    friend BitMatrix operator^(BitMatrix a, const BitMatrix& b) {
        a ^= b;
        return a;
    }
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t dim_ = 0;
    std::vector<std::uint64_t> rows_;
};

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

/// Uniformly random dim x dim matrix from a caller-owned engine. Uses raw
/// engine words only, so the sequence is identical on every platform.
BitMatrix random_matrix(std::mt19937_64& rng, std::size_t dim);

/// Reduced row-echelon basis of a subspace of GF(2)^ambient_dim.
/// Pivot columns strictly increase and each pivot column carries a single 1.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<BitVector>& basis() const { return rows_; }

    /// Residue of v after reduction against the basis; zero iff v is in the span.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

    /// Adjoin v, keeping reduced row-echelon form. True iff the rank grew.
    bool insert(BitVector v);

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<BitVector> rows_;
};

SubspaceBasis echelonize(std::span<const BitVector> vectors);
SubspaceBasis echelonize(std::span<const BitVector> vectors, std::size_t ambient_dim);

/// Basis of the solution space { v : rows . v = 0 } (standard dot product).
std::vector<BitVector> kernel_basis(std::span<const BitVector> rows, std::size_t ambient_dim);

/// Commutant { X : X.G = G.X for every generator G } as a subspace of the
/// flattened dim x dim matrix space. No generators means everything commutes.
SubspaceBasis commutant(std::span<const BitMatrix> generators, std::size_t dim);

struct ClosureStats {
    std::size_t rounds = 0;
};

/// Smallest subspace of the matrix space containing seeds and Id, closed under
/// products and under X -> u.X.u^-1 for every conjugator u. Closure under the
/// generators alone suffices: conjugation by a product factors through them.
SubspaceBasis algebra_closure(std::span<const BitMatrix> seeds,
                              std::span<const BitMatrix> conjugators,
                              std::size_t dim,
                              ClosureStats* stats = nullptr);

}  // namespace endogate::gf2
