#include "endogate/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace endogate::galois {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::from_int_coeffs(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(std::size_t k, mpz_class coefficient) {
    std::vector<mpz_class> c(k + 1, 0);
    c[k] = std::move(coefficient);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("IntPolynomial::leading: zero polynomial");
    return coeffs_.back();
}

mpz_class IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return IntPolynomial();
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return IntPolynomial(std::move(d));
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const mpz_class& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    return divide_exact(content());
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const mpz_class& c) const {
    std::vector<mpz_class> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const mpz_class& c) const {
    if (c == 0) throw std::domain_error("IntPolynomial::divide_exact: division by zero");
    std::vector<mpz_class> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
        if (r != 0) throw std::domain_error("IntPolynomial::divide_exact: not divisible");
        out[i] = std::move(q);
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted_up(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<mpz_class> out(coeffs_.size() + k, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        const mpz_class a = abs(c);
        if (a != 1 || i == 0) s += a.get_str();
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return text[pos];
    }
    [[noreturn]] void fail(const std::string& what) {
        std::string token;
        std::size_t p = pos;
        while (p < text.size() && !std::isspace(static_cast<unsigned char>(text[p])) &&
               token.size() < 16)
            token += text[p++];
        if (token.empty()) token = "<end of input>";
        throw ParseError("polynomial parse error at offset " + std::to_string(pos) + " near '" +
                         token + "': " + what);
    }
    mpz_class read_integer() {
        skip_space();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty()) fail("expected digits");
        return mpz_class(digits);
    }
};

}  // namespace

ParsedPoly parse_polynomial(const std::string& text) {
    Cursor cur{text};
    std::vector<mpq_class> terms;  // index = exponent
    auto add_term = [&](std::size_t exp, const mpq_class& c) {
        if (exp >= terms.size()) terms.resize(exp + 1, mpq_class(0));
        terms[exp] += c;
    };

    bool any = false;
    while (!cur.done()) {
        // Sign
        mpq_class sign = 1;
        char ch = cur.peek();
        if (ch == '+' || ch == '-') {
            if (ch == '-') sign = -1;
            ++cur.pos;
        } else if (any) {
            cur.fail("expected '+' or '-' between terms");
        }
        if (cur.done()) cur.fail("dangling sign");

        // Coefficient
        mpq_class coef = 1;
        bool saw_coef = false;
        ch = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            mpz_class num = cur.read_integer();
            mpz_class den = 1;
            if (!cur.done() && cur.peek() == '/') {
                ++cur.pos;
                den = cur.read_integer();
                if (den == 0) cur.fail("zero denominator");
            }
            coef = mpq_class(num) / mpq_class(den);
            saw_coef = true;
            if (!cur.done() && cur.peek() == '*') ++cur.pos;
        }

        // Variable part
        std::size_t exp = 0;
        bool saw_var = false;
        if (!cur.done() && (cur.peek() == 'x' || cur.peek() == 'X')) {
            ++cur.pos;
            exp = 1;
            saw_var = true;
            if (!cur.done() && cur.peek() == '^') {
                ++cur.pos;
                mpz_class e = cur.read_integer();
                if (e > 64) cur.fail("exponent too large");
                exp = e.get_ui();
            }
        } else if (!saw_coef) {
            cur.fail("expected a coefficient or 'x'");
        }

        // Trailing divisor, as in "x^2/2".
        if (saw_var && !cur.done() && cur.peek() == '/') {
            ++cur.pos;
            mpz_class den = cur.read_integer();
            if (den == 0) cur.fail("zero denominator");
            coef /= mpq_class(den);
        }

        add_term(exp, sign * coef);
        any = true;
    }
    if (!any) throw ParseError("polynomial parse error: empty input");

    // Clear denominators by their lcm.
    mpz_class lcm = 1;
    for (const mpq_class& t : terms)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.get_den().get_mpz_t());
    std::vector<mpz_class> coeffs;
    coeffs.reserve(terms.size());
    for (const mpq_class& t : terms) {
        mpq_class scaled = t * mpq_class(lcm);
        coeffs.push_back(scaled.get_num());
    }
    return ParsedPoly{IntPolynomial(std::move(coeffs)), lcm};
}

ParsedPoly poly_from_coeff_strings(const std::vector<std::string>& coeffs) {
    std::vector<mpq_class> values;
    values.reserve(coeffs.size());
    for (const std::string& s : coeffs) {
        try {
            mpq_class q(s);
            q.canonicalize();
            values.push_back(std::move(q));
        } catch (const std::invalid_argument&) {
            throw ParseError("coefficient parse error near '" + s + "': expected integer or p/q");
        }
    }
    mpz_class lcm = 1;
    for (const mpq_class& v : values)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(values.size());
    for (const mpq_class& v : values) ints.push_back(mpq_class(v * mpq_class(lcm)).get_num());
    return ParsedPoly{IntPolynomial(std::move(ints)), lcm};
}

// ---------------------------------------------------------------------------
// Subresultant machinery

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_remainder: division by zero polynomial");
    if (a.is_zero() || a.degree() < b.degree()) return a;

    const std::size_t e = b.degree();
    const mpz_class& lb = b.leading();
    const std::size_t bound = a.degree() - e + 1;

    IntPolynomial r = a;
    std::size_t steps = 0;
    while (!r.is_zero() && r.degree() >= e) {
        const std::size_t shift = r.degree() - e;
        const mpz_class lr = r.leading();
        r = r * lb - (b * lr).shifted_up(shift);
        ++steps;
    }
    // Top up to exactly lc(b)^(deg a - deg b + 1) * a mod b.
    for (; steps < bound; ++steps) r = r * lb;
    return r;
}

namespace {

mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

}  // namespace

mpz_class resultant(const IntPolynomial& a_in, const IntPolynomial& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) {
        // Res(c, 0) with both constant is the empty determinant.
        if (a_in.is_zero() && b_in.is_zero()) return 0;
        const IntPolynomial& nz = a_in.is_zero() ? b_in : a_in;
        return nz.degree() == 0 ? mpz_class(1) : mpz_class(0);
    }

    IntPolynomial a = a_in, b = b_in;
    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    }
    if (a.degree() == 0) return 1;  // two nonzero constants
    if (b.degree() == 0) {
        mpz_class r = pow_mpz(b.leading(), a.degree());
        return sign < 0 ? mpz_class(-r) : r;
    }

    const mpz_class cont_a = a.content();
    const mpz_class cont_b = b.content();
    a = a.divide_exact(cont_a);
    b = b.divide_exact(cont_b);
    mpz_class acc = pow_mpz(cont_a, b.degree()) * pow_mpz(cont_b, a.degree());
    if (sign < 0) acc = -acc;

    mpz_class g = 1, h = 1;
    while (true) {
        const std::size_t d = a.degree(), e = b.degree();
        const std::size_t delta = d - e;
        if (d % 2 == 1 && e % 2 == 1) acc = -acc;

        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) return 0;  // positive-degree common factor

        a = b;
        b = r.divide_exact(g * pow_mpz(h, delta));
        g = a.leading();
        // h = g^delta * h^(1-delta), by exact division for delta > 1.
        if (delta == 1)
            h = g;
        else if (delta > 1) {
            mpz_class num = pow_mpz(g, delta);
            mpz_class den = pow_mpz(h, delta - 1);
            mpz_class q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (rem != 0) throw std::logic_error("resultant: inexact h update");
            h = q;
        }

        if (b.degree() == 0) {
            // acc * lc(b)^(deg a) / h^(deg a - 1)
            mpz_class num = pow_mpz(b.leading(), a.degree());
            mpz_class den = pow_mpz(h, a.degree() - 1);
            mpz_class q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (rem != 0) throw std::logic_error("resultant: inexact final division");
            return acc * q;
        }
    }
}

std::size_t gcd_degree(const IntPolynomial& a_in, const IntPolynomial& b_in) {
    if (a_in.is_zero()) return b_in.degree();
    if (b_in.is_zero()) return a_in.degree();

    IntPolynomial a = a_in, b = b_in;
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.degree() == 0) return 0;
    a = a.primitive_part();
    b = b.primitive_part();

    mpz_class g = 1, h = 1;
    while (true) {
        const std::size_t delta = a.degree() - b.degree();
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) return b.degree();
        if (r.degree() == 0) return 0;
        a = b;
        b = r.divide_exact(g * pow_mpz(h, delta));
        g = a.leading();
        if (delta == 1)
            h = g;
        else if (delta > 1) {
            mpz_class num = pow_mpz(g, delta);
            mpz_class den = pow_mpz(h, delta - 1);
            h = num / den;
        }
    }
}

bool squarefree_check(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_check: zero polynomial");
    if (f.degree() == 0) return true;
    return gcd_degree(f, f.derivative()) == 0;
}

mpz_class discriminant(const IntPolynomial& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("discriminant: degree >= 1 required");
    const std::size_t n = f.degree();
    mpz_class res = resultant(f, f.derivative());
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
    if (rem != 0) throw std::logic_error("discriminant: resultant not divisible by lc");
    if ((n * (n - 1) / 2) % 2 == 1) q = -q;
    return q;
}

bool is_square_integer(const mpz_class& d) {
    if (d < 0) return false;
    return mpz_perfect_square_p(d.get_mpz_t()) != 0;
}

}  // namespace endogate::galois
