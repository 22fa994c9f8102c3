#include "endogate/fieldreduce.hpp"

#include <algorithm>
#include <stdexcept>

#include "endogate/galois.hpp"

namespace endogate::fieldreduce {

using galois::IntPolynomial;

bool NFElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& q) { return q == 0; });
}

std::string NFElement::to_string() const {
    std::string s;
    bool printed = false;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        if (printed) s += " + ";
        s += coords_[i].get_str();
        if (i >= 1) s += "*a";
        if (i >= 2) s += "^" + std::to_string(i);
        printed = true;
    }
    return printed ? s : "0";
}

NFPolynomial::NFPolynomial(std::vector<NFElement> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const NFElement& NFPolynomial::coeff(std::size_t i) const {
    if (i >= coeffs_.size()) throw std::out_of_range("NFPolynomial::coeff");
    return coeffs_[i];
}

NumberFieldContext::NumberFieldContext(const IntPolynomial& f) : input_(f) {
    if (f.is_zero() || f.degree() < 2)
        throw std::invalid_argument("NumberFieldContext: modulus degree >= 2 required");
    degree_ = f.degree();
    monic_.resize(degree_ + 1);
    const mpq_class lead(f.leading());
    for (std::size_t i = 0; i <= degree_; ++i) {
        monic_[i] = mpq_class(f.coeff(i)) / lead;
        monic_[i].canonicalize();
    }
}

void NumberFieldContext::check_element(const NFElement& e) const {
    if (e.coords().size() != degree_)
        throw std::invalid_argument("NFElement has wrong coordinate count for this field");
}

NFElement NumberFieldContext::zero() const {
    return NFElement(std::vector<mpq_class>(degree_, mpq_class(0)));
}

NFElement NumberFieldContext::one() const { return from_rational(1); }

NFElement NumberFieldContext::alpha() const {
    std::vector<mpq_class> c(degree_, mpq_class(0));
    c[1] = 1;
    return NFElement(std::move(c));
}

NFElement NumberFieldContext::from_rational(const mpq_class& q) const {
    std::vector<mpq_class> c(degree_, mpq_class(0));
    c[0] = q;
    return NFElement(std::move(c));
}

NFElement NumberFieldContext::add(const NFElement& a, const NFElement& b) const {
    check_element(a);
    check_element(b);
    std::vector<mpq_class> c(degree_);
    for (std::size_t i = 0; i < degree_; ++i) c[i] = a.coords()[i] + b.coords()[i];
    return NFElement(std::move(c));
}

NFElement NumberFieldContext::sub(const NFElement& a, const NFElement& b) const {
    check_element(a);
    check_element(b);
    std::vector<mpq_class> c(degree_);
    for (std::size_t i = 0; i < degree_; ++i) c[i] = a.coords()[i] - b.coords()[i];
    return NFElement(std::move(c));
}

NFElement NumberFieldContext::mul(const NFElement& a, const NFElement& b) const {
    check_element(a);
    check_element(b);
    std::vector<mpq_class> prod(2 * degree_ - 1, mpq_class(0));
    for (std::size_t i = 0; i < degree_; ++i) {
        if (a.coords()[i] == 0) continue;
        for (std::size_t j = 0; j < degree_; ++j) prod[i + j] += a.coords()[i] * b.coords()[j];
    }
    // Reduce modulo the monic modulus: a^n = -(m_0 + m_1 a + .. + m_{n-1} a^{n-1}).
    for (std::size_t k = prod.size(); k-- > degree_;) {
        const mpq_class c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::size_t j = 0; j < degree_; ++j) prod[k - degree_ + j] -= c * monic_[j];
    }
    prod.resize(degree_);
    return NFElement(std::move(prod));
}

NFPolynomial NumberFieldContext::poly_from_int(const IntPolynomial& p) const {
    std::vector<NFElement> coeffs;
    coeffs.reserve(p.coeffs().size());
    for (const mpz_class& c : p.coeffs()) coeffs.push_back(from_rational(mpq_class(c)));
    return NFPolynomial(std::move(coeffs));
}

NFPolynomial NumberFieldContext::poly_add(const NFPolynomial& a, const NFPolynomial& b) const {
    std::vector<NFElement> c(std::max(a.coeffs().size(), b.coeffs().size()), zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const NFElement& av = i < a.coeffs().size() ? a.coeffs()[i] : zero();
        const NFElement& bv = i < b.coeffs().size() ? b.coeffs()[i] : zero();
        c[i] = add(av, bv);
    }
    return NFPolynomial(std::move(c));
}

NFPolynomial NumberFieldContext::poly_mul(const NFPolynomial& a, const NFPolynomial& b) const {
    if (a.is_zero() || b.is_zero()) return NFPolynomial();
    std::vector<NFElement> c(a.coeffs().size() + b.coeffs().size() - 1, zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = add(c[i + j], mul(a.coeffs()[i], b.coeffs()[j]));
    return NFPolynomial(std::move(c));
}

NFElement NumberFieldContext::poly_eval(const NFPolynomial& p, const NFElement& at) const {
    NFElement acc = zero();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = add(mul(acc, at), *it);
    return acc;
}

NFPolynomial deflate(const NumberFieldContext& ctx) {
    const std::size_t n = ctx.degree();
    const NFElement a = ctx.alpha();
    const IntPolynomial& f = ctx.input_poly();

    // Synthetic division of f by (x - a): b_{n-1} = lc(f),
    // b_{k-1} = f_k + a * b_k. The remainder f_0 + a*b_0 is f(a) = 0.
    std::vector<NFElement> quotient(n, ctx.zero());
    NFElement carry = ctx.from_rational(mpq_class(f.leading()));
    quotient[n - 1] = carry;
    for (std::size_t k = n - 1; k >= 1; --k) {
        carry = ctx.add(ctx.from_rational(mpq_class(f.coeff(k))), ctx.mul(a, carry));
        quotient[k - 1] = carry;
    }
    NFElement remainder =
        ctx.add(ctx.from_rational(mpq_class(f.coeff(0))), ctx.mul(a, quotient[0]));
    if (!remainder.is_zero())
        throw std::logic_error("deflate: nonzero remainder, modulus does not kill alpha");
    return NFPolynomial(std::move(quotient));
}

NFPolynomial shift(const NumberFieldContext& ctx, const NFPolynomial& p, const NFElement& a) {
    // Horner recomposition: acc <- acc * (x + a) + p_k from the top down.
    NFPolynomial acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        std::vector<NFElement> next(acc.coeffs().size() + 1, ctx.zero());
        for (std::size_t i = 0; i < acc.coeffs().size(); ++i) {
            next[i + 1] = ctx.add(next[i + 1], acc.coeffs()[i]);           // * x
            next[i] = ctx.add(next[i], ctx.mul(acc.coeffs()[i], a));       // * a
        }
        next[0] = ctx.add(next[0], *it);
        acc = NFPolynomial(std::move(next));
    }
    return acc;
}

NFPolynomial reverse(const NumberFieldContext& ctx, const NFPolynomial& p) {
    (void)ctx;
    if (p.is_zero() || p.coeffs().front().is_zero())
        throw std::invalid_argument("reverse: constant term is zero, the degree would drop");
    std::vector<NFElement> rev(p.coeffs().rbegin(), p.coeffs().rend());
    return NFPolynomial(std::move(rev));
}

EvenReduction reduce_even_degree(const IntPolynomial& f, std::uint64_t prime_budget) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("reduce_even_degree: not a curve polynomial");
    const std::size_t n = f.degree();
    if (n % 2 != 0)
        throw std::invalid_argument("reduce_even_degree: degree " + std::to_string(n) +
                                    " is odd; no reduction is needed");
    if (n < 6)
        throw std::invalid_argument("reduce_even_degree: even degree >= 6 required, got " +
                                    std::to_string(n));
    if (!squarefree_check(f))
        throw std::invalid_argument("reduce_even_degree: polynomial has multiple roots");

    const auto witness = galois::find_transitivity_witness(f, prime_budget);
    if (!witness)
        throw std::invalid_argument(
            "reduce_even_degree: no irreducibility witness within prime budget " +
            std::to_string(prime_budget) + "; the polynomial may be reducible");

    EvenReduction out{NumberFieldContext(f), {}, {}, n / 2, "", "", false, witness->prime};
    const NumberFieldContext& ctx = out.ctx;

    out.f1 = deflate(ctx);

    // Master identity: (x - a) * f1 reproduces f exactly.
    std::vector<NFElement> x_minus_a{ctx.sub(ctx.zero(), ctx.alpha()), ctx.one()};
    const NFPolynomial recombined = ctx.poly_mul(NFPolynomial(std::move(x_minus_a)), out.f1);
    out.master_identity_ok = recombined == ctx.poly_from_int(f);
    if (!out.master_identity_ok)
        throw std::logic_error("reduce_even_degree: master identity (x - a) f1 = f failed");

    const NFPolynomial h = shift(ctx, out.f1, ctx.alpha());
    out.h1 = reverse(ctx, h);
    if (out.h1.degree() != n - 1)
        throw std::logic_error("reduce_even_degree: expected degree n-1 after reversal");

    out.x_substitution = "x1 = 1/(x - a)";
    out.y_substitution = "y1 = y/(x - a)^" + std::to_string(out.half_degree);
    return out;
}

}  // namespace endogate::fieldreduce
