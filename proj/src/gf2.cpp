#include "endogate/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace endogate::gf2 {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t len) { return (len + kWordBits - 1) / kWordBits; }

}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

bool BitVector::get(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("BitVector::get: index " + std::to_string(i));
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
    if (i >= len_) throw std::out_of_range("BitVector::set: index " + std::to_string(i));
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::ptrdiff_t BitVector::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0)
            return static_cast<std::ptrdiff_t>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
    return -1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (len_ != other.len_)
        throw std::invalid_argument("BitVector: length mismatch " + std::to_string(len_) + " vs " +
                                    std::to_string(other.len_));
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s;
    s.reserve(len_);
    for (std::size_t i = 0; i < len_; ++i) s += get(i) ? '1' : '0';
    return s;
}

BitMatrix::BitMatrix(std::size_t dim) : dim_(dim), rows_(dim, 0) {
    if (dim == 0 || dim > kMaxDim)
        throw std::invalid_argument("BitMatrix: dimension " + std::to_string(dim) + " outside 1.." +
                                    std::to_string(kMaxDim));
}

BitMatrix BitMatrix::identity(std::size_t dim) {
    BitMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.rows_[i] = std::uint64_t{1} << i;
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= dim_ || c >= dim_) throw std::out_of_range("BitMatrix::get");
    return (rows_[r] >> c) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= dim_ || c >= dim_) throw std::out_of_range("BitMatrix::set");
    const std::uint64_t mask = std::uint64_t{1} << c;
    if (value)
        rows_[r] |= mask;
    else
        rows_[r] &= ~mask;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](std::uint64_t r) { return r == 0; });
}

bool BitMatrix::is_identity() const {
    for (std::size_t i = 0; i < dim_; ++i)
        if (rows_[i] != (std::uint64_t{1} << i)) return false;
    return dim_ > 0;
}

BitVector BitMatrix::flatten() const {
    BitVector v(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            if ((rows_[r] >> c) & 1u) v.set(r * dim_ + c, true);
    return v;
}

BitMatrix BitMatrix::unflatten(const BitVector& v, std::size_t dim) {
    if (v.len() != dim * dim) throw std::invalid_argument("BitMatrix::unflatten: length != dim^2");
    BitMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            if (v.get(r * dim + c)) m.rows_[r] |= std::uint64_t{1} << c;
    return m;
}

BitVector BitMatrix::apply(const BitVector& v) const {
    if (v.len() != dim_) throw std::invalid_argument("BitMatrix::apply: dimension mismatch");
    std::uint64_t in = 0;
    for (std::size_t i = 0; i < dim_; ++i)
        if (v.get(i)) in |= std::uint64_t{1} << i;
    BitVector out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        if (std::popcount(rows_[r] & in) & 1) out.set(r, true);
    return out;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
    std::vector<std::uint64_t> a(rows_);
    std::vector<std::uint64_t> inv(dim_);
    for (std::size_t i = 0; i < dim_; ++i) inv[i] = std::uint64_t{1} << i;

    std::size_t row = 0;
    for (std::size_t col = 0; col < dim_; ++col) {
        std::size_t pivot = row;
        while (pivot < dim_ && !((a[pivot] >> col) & 1u)) ++pivot;
        if (pivot == dim_) return std::nullopt;
        std::swap(a[row], a[pivot]);
        std::swap(inv[row], inv[pivot]);
        for (std::size_t r = 0; r < dim_; ++r) {
            if (r != row && ((a[r] >> col) & 1u)) {
                a[r] ^= a[row];
                inv[r] ^= inv[row];
            }
        }
        ++row;
    }
    BitMatrix result(dim_);
    result.rows_ = std::move(inv);
    return result;
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& other) {
    if (dim_ != other.dim_) throw std::invalid_argument("BitMatrix: dimension mismatch in +");
    for (std::size_t r = 0; r < dim_; ++r) rows_[r] ^= other.rows_[r];
    return *this;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("mat_mul: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()));
    const std::size_t m = a.dim();
    BitMatrix c(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t acc = 0;
        std::uint64_t row = a.row_bits(i);
        while (row) {
            const unsigned j = static_cast<unsigned>(std::countr_zero(row));
            acc ^= b.row_bits(j);
            row &= row - 1;
        }
        for (std::size_t jc = 0; jc < m; ++jc)
            if ((acc >> jc) & 1u) c.set(i, jc, true);
    }
    return c;
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t dim) {
    BitMatrix m(dim);
    const std::uint64_t mask = dim == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
    for (std::size_t r = 0; r < dim; ++r) {
        const std::uint64_t bits = rng() & mask;
        for (std::size_t c = 0; c < dim; ++c)
            if ((bits >> c) & 1u) m.set(r, c, true);
    }
    return m;
}

BitVector SubspaceBasis::reduce(BitVector v) const {
    if (v.len() != ambient_) throw std::invalid_argument("SubspaceBasis::reduce: ambient mismatch");
    for (const BitVector& row : rows_) {
        const std::ptrdiff_t p = row.first_set();
        if (p >= 0 && v.get(static_cast<std::size_t>(p))) v ^= row;
    }
    return v;
}

bool SubspaceBasis::insert(BitVector v) {
    BitVector residue = reduce(std::move(v));
    const std::ptrdiff_t p = residue.first_set();
    if (p < 0) return false;
    // Back-substitute, then place the new row in pivot order.
    for (BitVector& row : rows_)
        if (row.get(static_cast<std::size_t>(p))) row ^= residue;
    auto pos = std::find_if(rows_.begin(), rows_.end(),
                            [&](const BitVector& row) { return row.first_set() > p; });
    rows_.insert(pos, std::move(residue));
    return true;
}

SubspaceBasis echelonize(std::span<const BitVector> vectors) {
    return echelonize(vectors, vectors.empty() ? 0 : vectors.front().len());
}

SubspaceBasis echelonize(std::span<const BitVector> vectors, std::size_t ambient_dim) {
    SubspaceBasis result(ambient_dim);
    for (const BitVector& v : vectors) {
        if (v.len() != ambient_dim)
            throw std::invalid_argument("echelonize: vectors of mixed length");
        result.insert(v);
    }
    return result;
}

std::vector<BitVector> kernel_basis(std::span<const BitVector> rows, std::size_t ambient_dim) {
    SubspaceBasis rref = echelonize(rows, ambient_dim);

    std::vector<bool> is_pivot(ambient_dim, false);
    for (const BitVector& row : rref.basis()) is_pivot[static_cast<std::size_t>(row.first_set())] = true;

    std::vector<BitVector> kernel;
    for (std::size_t free_col = 0; free_col < ambient_dim; ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVector v(ambient_dim);
        v.set(free_col, true);
        for (const BitVector& row : rref.basis()) {
            if (row.get(free_col))
                v.set(static_cast<std::size_t>(row.first_set()), true);
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

SubspaceBasis commutant(std::span<const BitMatrix> generators, std::size_t dim) {
    if (dim == 0 || dim > kMaxDim) throw std::invalid_argument("commutant: bad dimension");
    for (const BitMatrix& g : generators)
        if (g.dim() != dim) throw std::invalid_argument("commutant: generator dimension mismatch");

    const std::size_t cells = dim * dim;
    // One linear equation per generator and matrix entry (i,j):
    //   (G.X)_{ij} + (X.G)_{ij} = sum_k G_{ik} X_{kj} + sum_l X_{il} G_{lj} = 0
    // in the unknowns X_{kl}, flattened row-major as k*dim + l.
    std::vector<BitVector> equations;
    equations.reserve(generators.size() * cells);
    for (const BitMatrix& g : generators) {
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                BitVector eq(cells);
                for (std::size_t k = 0; k < dim; ++k)
                    if (g.get(i, k)) eq.set(k * dim + j, !eq.get(k * dim + j));
                for (std::size_t l = 0; l < dim; ++l)
                    if (g.get(l, j)) eq.set(i * dim + l, !eq.get(i * dim + l));
                if (!eq.is_zero()) equations.push_back(std::move(eq));
            }
        }
    }
    std::vector<BitVector> solutions = kernel_basis(equations, cells);
    return echelonize(solutions, cells);
}

SubspaceBasis algebra_closure(std::span<const BitMatrix> seeds,
                              std::span<const BitMatrix> conjugators,
                              std::size_t dim,
                              ClosureStats* stats) {
    if (dim == 0 || dim > kMaxDim) throw std::invalid_argument("algebra_closure: bad dimension");
    for (const BitMatrix& m : seeds)
        if (m.dim() != dim) throw std::invalid_argument("algebra_closure: seed dimension mismatch");

    std::vector<BitMatrix> conj_inverse;
    conj_inverse.reserve(conjugators.size());
    for (const BitMatrix& u : conjugators) {
        if (u.dim() != dim) throw std::invalid_argument("algebra_closure: conjugator dimension mismatch");
        auto inv = u.inverse();
        if (!inv) throw std::invalid_argument("algebra_closure: conjugator is singular");
        conj_inverse.push_back(std::move(*inv));
    }

    const std::size_t cells = dim * dim;
    // Spanning matrices kept verbatim; the echelon form tracks the span so
    // membership tests and the independence check stay cheap. Products are
    // bilinear, so closure on spanning elements is closure on the span.
    std::vector<BitMatrix> span_mats;
    SubspaceBasis span(cells);
    auto try_insert = [&](const BitMatrix& m) {
        if (!span.insert(m.flatten())) return false;
        span_mats.push_back(m);
        return true;
    };

    try_insert(BitMatrix::identity(dim));
    for (const BitMatrix& s : seeds) try_insert(s);

    // Worklist saturation. Rank strictly increases on every productive round
    // and is bounded by dim^2, so the round cap only trips on a bug.
    const std::size_t round_cap = cells + 2;
    std::size_t rounds = 0;
    std::size_t processed = 0;
    while (processed < span_mats.size()) {
        if (++rounds > round_cap) throw std::logic_error("algebra_closure: saturation failed to stabilize");
        const std::size_t batch_end = span_mats.size();
        for (std::size_t i = processed; i < batch_end; ++i) {
            // span_mats may grow while we iterate; products against elements
            // appended later are handled when those elements are processed.
            for (std::size_t j = 0; j < span_mats.size(); ++j) {
                try_insert(mat_mul(span_mats[i], span_mats[j]));
                try_insert(mat_mul(span_mats[j], span_mats[i]));
            }
            for (std::size_t u = 0; u < conjugators.size(); ++u)
                try_insert(mat_mul(mat_mul(conjugators[u], span_mats[i]), conj_inverse[u]));
        }
        processed = batch_end;
    }
    if (stats) stats->rounds = rounds;
    return span;
}

}  // namespace endogate::gf2
