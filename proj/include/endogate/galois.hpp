#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "endogate/polynomial.hpp"

namespace endogate::galois {

/// Raised when a prime divides the leading coefficient or the reduction mod p
/// is not squarefree; the caller skips such primes.
class BadPrime : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Multiset of factor degrees, ascending; sums to deg f. For a good prime
/// this is the cycle type of a Frobenius element of the Galois group.
using CycleType = std::vector<unsigned>;

std::string cycle_type_string(const CycleType& t);

/// Degrees of the distinct irreducible factors of f mod p by distinct-degree
/// factorization. Throws BadPrime when p divides lc(f) or the reduction has a
/// repeated factor.
CycleType factor_degrees_mod_p(const IntPolynomial& f, std::uint64_t p);

enum class GroupId { Symmetric, Alternating, Inconclusive };

std::string to_string(GroupId g);

enum class WitnessKind {
    NCycle,             // cycle type {n}: irreducible reduction
    WindowPrimeCycle,   // {q,1,..,1} with q prime, n/2 < q < n-2
    TranspositionPower, // prime degree n; a power of Frobenius is a transposition
    ThreeCyclePower,    // prime degree n; a power of Frobenius is a 3-cycle
};

std::string to_string(WitnessKind k);

struct CycleWitness {
    std::uint64_t prime = 0;
    CycleType type;
    WitnessKind kind = WitnessKind::NCycle;
    unsigned cycle_len = 0;  // n, q, 2 or 3 depending on kind
};

/// Evidence bundle proving that the Galois group contains A_n and deciding
/// S_n against A_n through the discriminant. Every claim re-verifies from the
/// stored witnesses alone.
struct GaloisCertificate {
    IntPolynomial poly;
    std::size_t n = 0;
    std::optional<CycleWitness> transitive_witness;
    std::optional<CycleWitness> an_witness;
    mpz_class disc;
    bool disc_is_square = false;
    GroupId group = GroupId::Inconclusive;
    std::uint64_t primes_scanned = 0;
    std::uint64_t primes_skipped = 0;
    std::uint64_t prime_budget = 0;
};

/// Smallest prime below the budget whose reduction of f is irreducible
/// (cycle type {n}); certifies transitivity and irreducibility over Q.
std::optional<CycleWitness> find_transitivity_witness(const IntPolynomial& f,
                                                      std::uint64_t prime_budget);

/// Scans primes ascending, skipping bad ones, and collects the smallest
/// transitivity witness plus the smallest witness putting A_n inside the
/// group: either a prime-length cycle in the window n/2 < q < n-2, or, for
/// prime degree n (where transitivity already forces primitivity), a cycle
/// type some power of which is a transposition or a 3-cycle. All criteria are
/// sound; missing witnesses yield Inconclusive, never a wrong group.
GaloisCertificate certify_big_galois(const IntPolynomial& f, std::uint64_t prime_budget);

enum class Conclusion { TrivialEndomorphisms, OutOfHypothesis };

std::string to_string(Conclusion c);

struct EndomorphismVerdict {
    Conclusion conclusion = Conclusion::OutOfHypothesis;
    std::vector<std::string> reasons;
    std::optional<GaloisCertificate> certificate;
    /// Set for certified inputs of even degree; the verdict then rests on the
    /// odd-degree model of degree n-1 over the root field.
    bool even_degree_reduced = false;
};

/// The endomorphism-ring decision for y^2 = f(x) over Q: TrivialEndomorphisms
/// (End = Z) exactly when deg f >= 5, f is squarefree and the certificate
/// lands on S_n or A_n; structured reasons otherwise.
EndomorphismVerdict verdict(const IntPolynomial& f, std::uint64_t prime_budget);

}  // namespace endogate::galois
