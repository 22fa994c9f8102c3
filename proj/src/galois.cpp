#include "endogate/galois.hpp"

#include <algorithm>
#include <numeric>

namespace endogate::galois {

std::string cycle_type_string(const CycleType& t) {
    std::string s = "{";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + "}";
}

std::string to_string(GroupId g) {
    switch (g) {
        case GroupId::Symmetric: return "symmetric";
        case GroupId::Alternating: return "alternating";
        case GroupId::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::NCycle: return "n_cycle";
        case WitnessKind::WindowPrimeCycle: return "window_prime_cycle";
        case WitnessKind::TranspositionPower: return "transposition_power";
        case WitnessKind::ThreeCyclePower: return "three_cycle_power";
    }
    return "?";
}

std::string to_string(Conclusion c) {
    return c == Conclusion::TrivialEndomorphisms ? "TrivialEndomorphisms" : "OutOfHypothesis";
}

// ---------------------------------------------------------------------------
// Arithmetic mod p. Coefficients live in [0, p) with p < 2^31, so products
// fit a 64-bit word.

namespace {

using ModPoly = std::vector<std::uint64_t>;  // ascending, trimmed

void trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

ModPoly reduce_mod_p(const IntPolynomial& f, std::uint64_t p) {
    ModPoly out(f.coeffs().size());
    const mpz_class pz(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), pz.get_mpz_t());
        out[i] = r.get_ui();
    }
    trim(out);
    return out;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}

/// Remainder of a by monic m.
ModPoly mod_rem(ModPoly a, const ModPoly& m, std::uint64_t p) {
    while (deg(a) >= deg(m)) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - m.size();
        if (c != 0)
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::uint64_t sub = c * m[i] % p;
                std::uint64_t& tgt = a[i + shift];
                tgt = (tgt + p - sub) % p;
            }
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    while (!b.empty()) {
        // Make b monic for the remainder step.
        const std::uint64_t inv = mod_inverse(b.back(), p);
        for (std::uint64_t& c : b) c = c * inv % p;
        ModPoly r = mod_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t inv = mod_inverse(a.back(), p);
        for (std::uint64_t& c : a) c = c * inv % p;
    }
    return a;
}

ModPoly mod_derivative(const ModPoly& f, std::uint64_t p) {
    if (f.size() <= 1) return {};
    ModPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * (i % p) % p;
    trim(d);
    return d;
}

/// Exact quotient by a monic divisor.
ModPoly mod_div_monic(const ModPoly& a, const ModPoly& m, std::uint64_t p) {
    ModPoly rem = a;
    ModPoly q(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, 0);
    while (deg(rem) >= deg(m)) {
        const std::uint64_t c = rem.back();
        const std::size_t shift = rem.size() - m.size();
        q[shift] = c;
        if (c != 0)
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::uint64_t sub = c * m[i] % p;
                std::uint64_t& tgt = rem[i + shift];
                tgt = (tgt + p - sub) % p;
            }
        rem.pop_back();
        trim(rem);
        if (rem.empty()) break;
    }
    trim(q);
    return q;
}

ModPoly mod_pow_poly(ModPoly base, std::uint64_t e, const ModPoly& m, std::uint64_t p) {
    ModPoly acc{1};
    base = mod_rem(std::move(base), m, p);
    while (e) {
        if (e & 1) acc = mod_rem(mod_mul(acc, base, p), m, p);
        base = mod_rem(mod_mul(base, base, p), m, p);
        e >>= 1;
    }
    return acc;
}

}  // namespace

CycleType factor_degrees_mod_p(const IntPolynomial& f, std::uint64_t p) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("factor_degrees_mod_p: degree >= 1 required");
    if (p < 2 || p >= (std::uint64_t{1} << 31))
        throw std::invalid_argument("factor_degrees_mod_p: prime out of supported range");

    ModPoly reduced = reduce_mod_p(f, p);
    if (static_cast<std::size_t>(deg(reduced)) != f.degree())
        throw BadPrime("prime " + std::to_string(p) + " divides the leading coefficient");

    // Monic copy.
    const std::uint64_t inv = mod_inverse(reduced.back(), p);
    for (std::uint64_t& c : reduced) c = c * inv % p;

    ModPoly d = mod_derivative(reduced, p);
    ModPoly g = mod_gcd(reduced, d, p);
    if (deg(g) != 0)
        throw BadPrime("prime " + std::to_string(p) + " divides the discriminant");

    // Distinct-degree factorization: peel off the product of all irreducible
    // factors of degree d via gcd(f, x^(p^d) - x).
    CycleType parts;
    ModPoly remaining = reduced;
    ModPoly x{0, 1};
    ModPoly frob = x;  // x^(p^d) mod remaining
    unsigned degree_step = 0;
    while (deg(remaining) > 0 && 2 * (degree_step + 1) <= static_cast<unsigned>(deg(remaining))) {
        ++degree_step;
        frob = mod_pow_poly(std::move(frob), p, remaining, p);
        ModPoly diff = frob;
        // diff = frob - x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        ModPoly common = mod_gcd(remaining, diff, p);
        if (deg(common) > 0) {
            for (unsigned k = 0; k < static_cast<unsigned>(deg(common)) / degree_step; ++k)
                parts.push_back(degree_step);
            remaining = mod_div_monic(remaining, common, p);
            frob = mod_rem(std::move(frob), remaining, p);
        }
    }
    if (deg(remaining) > 0) parts.push_back(static_cast<unsigned>(deg(remaining)));
    std::sort(parts.begin(), parts.end());

    const unsigned total = std::accumulate(parts.begin(), parts.end(), 0u);
    if (total != f.degree())
        throw std::logic_error("factor_degrees_mod_p: parts do not sum to the degree");
    return parts;
}

// ---------------------------------------------------------------------------
// Certification

namespace {

bool is_small_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

bool is_n_cycle(const CycleType& t, std::size_t n) {
    return t.size() == 1 && t[0] == n;
}

/// Literal window pattern {q, 1, .., 1} with q prime, n/2 < q < n-2.
std::optional<unsigned> window_cycle(const CycleType& t, std::size_t n) {
    unsigned q = 0;
    for (unsigned part : t) {
        if (part == 1) continue;
        if (q != 0) return std::nullopt;  // a second nontrivial part
        q = part;
    }
    if (q == 0) return std::nullopt;
    if (!is_small_prime(q)) return std::nullopt;
    if (2 * q <= n || q + 2 >= n) return std::nullopt;
    return q;
}

/// True when some power of a permutation with this cycle type is a q-cycle:
/// the type contains q exactly once and every other part is coprime to q.
/// Raising to the lcm of the other parts kills them and keeps the q-cycle.
bool power_gives_cycle(const CycleType& t, unsigned q) {
    unsigned count_q = 0;
    for (unsigned part : t) {
        if (part == q) {
            ++count_q;
        } else if (std::gcd(part, q) != 1) {
            return false;
        }
    }
    return count_q == 1;
}

}  // namespace

std::optional<CycleWitness> find_transitivity_witness(const IntPolynomial& f,
                                                      std::uint64_t prime_budget) {
    const std::size_t n = f.degree();
    for (std::uint64_t p : primes_up_to(prime_budget)) {
        try {
            CycleType t = factor_degrees_mod_p(f, p);
            if (is_n_cycle(t, n))
                return CycleWitness{p, std::move(t), WitnessKind::NCycle,
                                    static_cast<unsigned>(n)};
        } catch (const BadPrime&) {
        }
    }
    return std::nullopt;
}

GaloisCertificate certify_big_galois(const IntPolynomial& f, std::uint64_t prime_budget) {
    const std::size_t n = f.degree();
    if (f.is_zero() || n < 5)
        throw std::invalid_argument("certify_big_galois: degree >= 5 required");
    if (!squarefree_check(f))
        throw std::invalid_argument("certify_big_galois: polynomial has multiple roots");

    GaloisCertificate cert;
    cert.poly = f;
    cert.n = n;
    cert.prime_budget = prime_budget;
    cert.disc = discriminant(f);
    cert.disc_is_square = is_square_integer(cert.disc);

    const bool prime_degree = is_small_prime(n);

    for (std::uint64_t p : primes_up_to(prime_budget)) {
        if (cert.transitive_witness && cert.an_witness) break;
        ++cert.primes_scanned;
        CycleType t;
        try {
            t = factor_degrees_mod_p(f, p);
        } catch (const BadPrime&) {
            ++cert.primes_skipped;
            continue;
        }

        if (!cert.transitive_witness && is_n_cycle(t, n))
            cert.transitive_witness =
                CycleWitness{p, t, WitnessKind::NCycle, static_cast<unsigned>(n)};

        if (!cert.an_witness) {
            if (auto q = window_cycle(t, n)) {
                cert.an_witness = CycleWitness{p, t, WitnessKind::WindowPrimeCycle, *q};
            } else if (prime_degree && power_gives_cycle(t, 2)) {
                // For prime degree, transitivity forces primitivity, and a
                // primitive group with a transposition is the full symmetric
                // group.
                cert.an_witness = CycleWitness{p, t, WitnessKind::TranspositionPower, 2};
            } else if (prime_degree && power_gives_cycle(t, 3)) {
                // Likewise, a primitive group with a 3-cycle contains A_n.
                cert.an_witness = CycleWitness{p, t, WitnessKind::ThreeCyclePower, 3};
            }
        }
    }

    if (cert.transitive_witness && cert.an_witness) {
        cert.group = cert.disc_is_square ? GroupId::Alternating : GroupId::Symmetric;
        if (cert.an_witness->kind == WitnessKind::TranspositionPower && cert.disc_is_square)
            throw std::logic_error(
                "certify_big_galois: transposition witness with square discriminant");
    } else {
        cert.group = GroupId::Inconclusive;
    }
    return cert;
}

EndomorphismVerdict verdict(const IntPolynomial& f, std::uint64_t prime_budget) {
    EndomorphismVerdict v;

    if (f.is_zero() || f.degree() < 1) {
        v.reasons.push_back("input is not a curve polynomial (degree < 1)");
        return v;
    }
    const std::size_t n = f.degree();
    if (n < 5) {
        v.reasons.push_back("degree " + std::to_string(n) +
                            " is below 5; the dichotomy requires n >= 5");
        return v;
    }
    if (!squarefree_check(f)) {
        v.reasons.push_back("polynomial has multiple roots; y^2 = f(x) is not a smooth "
                            "hyperelliptic model");
        return v;
    }

    GaloisCertificate cert = certify_big_galois(f, prime_budget);
    const GroupId group = cert.group;
    v.certificate = std::move(cert);

    if (group == GroupId::Inconclusive) {
        v.reasons.push_back("no S_n/A_n certificate within prime budget " +
                            std::to_string(prime_budget) +
                            "; the Galois hypothesis is unverified");
        return v;
    }

    if (n % 2 == 0) {
        v.even_degree_reduced = true;
        v.reasons.push_back("even degree " + std::to_string(n) +
                            ": the substitution x1 = 1/(x - a), y1 = y/(x - a)^" +
                            std::to_string(n / 2) +
                            " moves to a birationally isomorphic odd-degree model of degree " +
                            std::to_string(n - 1) + " over the root field Q(a), with Galois "
                            "group S_" + std::to_string(n - 1) + " or A_" + std::to_string(n - 1));
    }
    v.conclusion = Conclusion::TrivialEndomorphisms;
    v.reasons.push_back("Galois group is " +
                        std::string(group == GroupId::Symmetric ? "S_" : "A_") +
                        std::to_string(n) + " with n >= 5 over Q (characteristic 0), so the "
                        "endomorphism ring of the Jacobian is Z");
    return v;
}

}  // namespace endogate::galois
