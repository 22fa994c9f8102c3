#include "endogate/dichotomy.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace endogate::dichotomy {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Scalar: return "Scalar";
        case Verdict::Full: return "Full";
        case Verdict::Violation: return "Violation";
    }
    return "?";
}

gf2::SubspaceBasis closed_algebra(std::span<const gf2::BitMatrix> seeds,
                                  const reptheory::GroupGenerators& g,
                                  gf2::ClosureStats* stats) {
    const std::size_t dim = g.degree - 1;
    for (const gf2::BitMatrix& s : seeds)
        if (s.dim() != dim)
            throw std::invalid_argument("closed_algebra: seed dimension " + std::to_string(s.dim()) +
                                        " does not match group degree " + std::to_string(g.degree));
    const auto conjugators = reptheory::qb_matrices(g);
    return gf2::algebra_closure(seeds, conjugators, dim, stats);
}

DichotomyResult check_dichotomy(std::span<const gf2::BitMatrix> seeds,
                                const reptheory::GroupGenerators& g) {
    gf2::ClosureStats stats;
    const gf2::SubspaceBasis algebra = closed_algebra(seeds, g, &stats);
    const std::size_t dim = g.degree - 1;

    DichotomyResult result;
    result.dimension = algebra.rank();
    result.rounds = stats.rounds;
    if (algebra.rank() == 1)
        result.verdict = Verdict::Scalar;
    else if (algebra.rank() == dim * dim)
        result.verdict = Verdict::Full;
    else
        result.verdict = Verdict::Violation;
    return result;
}

bool observation_bound(unsigned n, unsigned c) {
    if (n < 5) throw std::invalid_argument("observation_bound: n >= 5 required");
    if (c < 1) throw std::invalid_argument("observation_bound: c >= 1 required");
    if (static_cast<unsigned long>(c) * c > n - 1) return true;  // vacuous

    mpz_class pow_c2 = 1;
    mpz_mul_2exp(pow_c2.get_mpz_t(), pow_c2.get_mpz_t(), static_cast<unsigned long>(c) * c);
    mpz_class pow_n1 = 1;
    mpz_mul_2exp(pow_n1.get_mpz_t(), pow_n1.get_mpz_t(), n - 1);

    mpz_class half_factorial;
    mpz_fac_ui(half_factorial.get_mpz_t(), n);
    half_factorial /= 2;

    // |GL(c,2)| = prod_{i=0}^{c-1} (2^c - 2^i)
    mpz_class gl_order = 1;
    mpz_class two_c = 1;
    mpz_mul_2exp(two_c.get_mpz_t(), two_c.get_mpz_t(), c);
    for (unsigned i = 0; i < c; ++i) {
        mpz_class two_i = 1;
        mpz_mul_2exp(two_i.get_mpz_t(), two_i.get_mpz_t(), i);
        gl_order *= two_c - two_i;
    }

    return pow_c2 <= pow_n1 && pow_n1 < half_factorial && gl_order < half_factorial;
}

namespace {

std::vector<gf2::BitMatrix> basis_matrices(const gf2::SubspaceBasis& space, std::size_t dim) {
    std::vector<gf2::BitMatrix> mats;
    mats.reserve(space.rank());
    for (const gf2::BitVector& v : space.basis()) mats.push_back(gf2::BitMatrix::unflatten(v, dim));
    return mats;
}

/// Dimension of { x in E : x.b = b.x for every b in E }, solved in the
/// coefficient space of E's basis.
std::size_t center_dimension(const std::vector<gf2::BitMatrix>& e_basis, std::size_t dim) {
    const std::size_t k = e_basis.size();
    if (k == 0) return 0;
    std::vector<gf2::BitVector> equations;
    for (const gf2::BitMatrix& b : e_basis) {
        // For each entry (r,c): sum_i lambda_i (a_i.b + b.a_i)_{rc} = 0.
        std::vector<gf2::BitMatrix> brackets;
        brackets.reserve(k);
        for (const gf2::BitMatrix& a : e_basis)
            brackets.push_back(gf2::mat_mul(a, b) ^ gf2::mat_mul(b, a));
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                gf2::BitVector eq(k);
                for (std::size_t i = 0; i < k; ++i)
                    if (brackets[i].get(r, c)) eq.set(i, true);
                if (!eq.is_zero()) equations.push_back(std::move(eq));
            }
        }
    }
    return gf2::kernel_basis(equations, k).size();
}

}  // namespace

ProofTrace proof_trace(std::span<const gf2::BitMatrix> seeds, const reptheory::GroupGenerators& g) {
    const std::size_t dim = g.degree - 1;
    const gf2::SubspaceBasis algebra = closed_algebra(seeds, g);

    ProofTrace trace;
    trace.dim_r = algebra.rank();

    const auto r_basis = basis_matrices(algebra, dim);
    const gf2::SubspaceBasis endo = gf2::commutant(r_basis, dim);
    trace.dim_endo = endo.rank();

    const auto e_basis = basis_matrices(endo, dim);
    trace.dim_center = center_dimension(e_basis, dim);
    trace.center_is_prime_field = trace.dim_center == 1;

    const std::size_t cells = dim * dim;
    const std::size_t product = trace.dim_r * trace.dim_endo;
    const bool extreme = trace.dim_r == 1 || trace.dim_r == cells;
    trace.product_consistent = product >= cells && (product == cells) == extreme;

    if (trace.dim_r == 1)
        trace.verdict = Verdict::Scalar;
    else if (trace.dim_r == cells)
        trace.verdict = Verdict::Full;
    else
        trace.verdict = Verdict::Violation;
    return trace;
}

}  // namespace endogate::dichotomy
