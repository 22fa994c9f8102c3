#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace endogate::galois {

/// Univariate polynomial over the integers, arbitrary precision, coefficients
/// stored ascending. The zero polynomial has an empty coefficient list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    static IntPolynomial from_int_coeffs(std::initializer_list<long> coeffs);
    /// x^k
    static IntPolynomial monomial(std::size_t k, mpz_class coefficient = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; the zero polynomial reports 0 by convention (query is_zero()).
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const mpz_class& leading() const;
    mpz_class coeff(std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    IntPolynomial derivative() const;
    mpz_class evaluate(const mpz_class& x) const;
    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class content() const;
    IntPolynomial primitive_part() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator*(const mpz_class& c) const;
    /// Exact division by a constant; throws when any coefficient fails it.
    IntPolynomial divide_exact(const mpz_class& c) const;
    /// Multiplication by x^k.
    IntPolynomial shifted_up(std::size_t k) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// Parse result: the integer polynomial together with the positive factor the
/// input was scaled by to clear rational coefficients.
struct ParsedPoly {
    IntPolynomial poly;
    mpz_class scaled_by = 1;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Grammar: sum of terms `[+-] [coef] [*] [x [^ exp]]` with integer or
/// rational coefficients and single variable x, e.g. "x^5 - x - 1" or
/// "3/2x^2 + 7". Errors name the offending token.
ParsedPoly parse_polynomial(const std::string& text);

/// Ascending coefficients, each an integer or rational literal.
ParsedPoly poly_from_coeff_strings(const std::vector<std::string>& coeffs);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Resultant by the fraction-free subresultant remainder sequence.
mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b);

/// Degree of gcd(a, b), from the same remainder sequence.
std::size_t gcd_degree(const IntPolynomial& a, const IntPolynomial& b);

/// True iff gcd(f, f') is constant.
bool squarefree_check(const IntPolynomial& f);

/// disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f), an exact integer.
mpz_class discriminant(const IntPolynomial& f);

bool is_square_integer(const mpz_class& d);

}  // namespace endogate::galois
