#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "endogate/polynomial.hpp"

namespace endogate::fieldreduce {

class NumberFieldContext;

/// Element of Q(a), stored as the canonical representative of degree below
/// the modulus: exact rational coordinates in the power basis 1, a, a^2, ...
class NFElement {
public:
    NFElement() = default;
    explicit NFElement(std::vector<mpq_class> coords) : coords_(std::move(coords)) {}

    const std::vector<mpq_class>& coords() const { return coords_; }
    bool is_zero() const;
    friend bool operator==(const NFElement&, const NFElement&) = default;
    std::string to_string() const;

private:
    std::vector<mpq_class> coords_;
};

/// Polynomial over Q(a), coefficients ascending, leading coefficient nonzero.
class NFPolynomial {
public:
    NFPolynomial() = default;
    NFPolynomial(std::vector<NFElement> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<NFElement>& coeffs() const { return coeffs_; }
    const NFElement& coeff(std::size_t i) const;
    friend bool operator==(const NFPolynomial&, const NFPolynomial&) = default;

private:
    std::vector<NFElement> coeffs_;
};

/// The field Q(a) for a root a of an irreducible rational polynomial;
/// arithmetic is polynomial arithmetic modulo the monic minimal polynomial,
/// so a satisfies the modulus exactly.
class NumberFieldContext {
public:
    explicit NumberFieldContext(const galois::IntPolynomial& f);

    std::size_t degree() const { return degree_; }
    /// Monic minimal polynomial of a, ascending rational coefficients.
    const std::vector<mpq_class>& monic_modulus() const { return monic_; }
    const galois::IntPolynomial& input_poly() const { return input_; }

    NFElement zero() const;
    NFElement one() const;
    NFElement alpha() const;
    NFElement from_rational(const mpq_class& q) const;

    NFElement add(const NFElement& a, const NFElement& b) const;
    NFElement sub(const NFElement& a, const NFElement& b) const;
    NFElement mul(const NFElement& a, const NFElement& b) const;

    NFPolynomial poly_from_int(const galois::IntPolynomial& p) const;
    NFPolynomial poly_add(const NFPolynomial& a, const NFPolynomial& b) const;
    NFPolynomial poly_mul(const NFPolynomial& a, const NFPolynomial& b) const;
    NFElement poly_eval(const NFPolynomial& p, const NFElement& at) const;

private:
    void check_element(const NFElement& e) const;
    galois::IntPolynomial input_;
    std::vector<mpq_class> monic_;  // length degree_+1, leading 1
    std::size_t degree_;
};

/// f / (x - a) by synthetic division at a; exact because f(a) = 0.
NFPolynomial deflate(const NumberFieldContext& ctx);

/// p(x + a) by Horner-style recomposition.
NFPolynomial shift(const NumberFieldContext& ctx, const NFPolynomial& p, const NFElement& a);

/// x^deg(p) * p(1/x): the coefficient list reversed. Requires p(0) != 0.
NFPolynomial reverse(const NumberFieldContext& ctx, const NFPolynomial& p);

struct EvenReduction {
    NumberFieldContext ctx;
    NFPolynomial f1;  // f = (x - a) f1
    NFPolynomial h1;  // reverse of f1(x + a); the odd-degree model
    std::size_t half_degree = 0;
    std::string x_substitution;
    std::string y_substitution;
    bool master_identity_ok = false;
    std::uint64_t irreducibility_witness_prime = 0;
};

/// The even-to-odd degree reduction: for squarefree irreducible f of even
/// degree n >= 6 over Q, produce h1 of odd degree n-1 over Q(a) together with
/// the substitution data x1 = 1/(x-a), y1 = y/(x-a)^(n/2), verifying
/// (x - a) * f1 = f coefficientwise.
EvenReduction reduce_even_degree(const galois::IntPolynomial& f, std::uint64_t prime_budget);

}  // namespace endogate::fieldreduce
