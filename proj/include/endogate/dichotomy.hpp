#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "endogate/gf2.hpp"
#include "endogate/reptheory.hpp"

namespace endogate::dichotomy {

enum class Verdict { Scalar, Full, Violation };

std::string to_string(Verdict v);

/// Outcome of closing a seed set: Scalar (dim 1), Full (dim (n-1)^2) or
/// Violation. Violation contradicts the dichotomy theorem and therefore
/// flags a software bug, never a mathematical possibility.
struct DichotomyResult {
    Verdict verdict = Verdict::Violation;
    std::size_t dimension = 0;
    std::size_t rounds = 0;
};

/// Smallest unital subalgebra of End(Q_B) containing the seeds and stable
/// under conjugation by the group action.
gf2::SubspaceBasis closed_algebra(std::span<const gf2::BitMatrix> seeds,
                                  const reptheory::GroupGenerators& g,
                                  gf2::ClosureStats* stats = nullptr);

DichotomyResult check_dichotomy(std::span<const gf2::BitMatrix> seeds,
                                const reptheory::GroupGenerators& g);

/// Exact-integer check that c^2 <= n-1 implies both 2^(c^2) <= 2^(n-1) < n!/2
/// and |GL(c,2)| < n!/2; vacuously true when c^2 > n-1.
bool observation_bound(unsigned n, unsigned c);

/// Commutant bookkeeping for a closed algebra R: E = End_R(Q_B), the center
/// of E (expected one-dimensional, i.e. the prime field), and the dimension
/// product dim R * dim E against (n-1)^2.
struct ProofTrace {
    std::size_t dim_r = 0;
    std::size_t dim_endo = 0;
    std::size_t dim_center = 0;
    bool center_is_prime_field = false;
    bool product_consistent = false;
    Verdict verdict = Verdict::Violation;
};

ProofTrace proof_trace(std::span<const gf2::BitMatrix> seeds, const reptheory::GroupGenerators& g);

}  // namespace endogate::dichotomy
