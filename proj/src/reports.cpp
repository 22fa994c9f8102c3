#include "endogate/reports.hpp"

#include <bit>
#include <random>

#include "endogate/dichotomy.hpp"
#include "endogate/fieldreduce.hpp"
#include "endogate/galois.hpp"
#include "endogate/jactwo.hpp"
#include "endogate/qspace.hpp"
#include "endogate/reptheory.hpp"

namespace endogate::reports {

namespace {

Json header(const char* command, const RunConfig& config) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    j["config"] = Json{{"prime_budget", config.prime_budget},
                       {"max_n", config.max_n},
                       {"trials", config.trials},
                       {"rng_seed", config.rng_seed}};
    return j;
}

Json poly_json(const galois::IntPolynomial& p) {
    Json coeffs = Json::array();
    for (const mpz_class& c : p.coeffs()) coeffs.push_back(c.get_str());
    return Json{{"text", p.to_string()},
                {"degree", p.is_zero() ? 0 : p.degree()},
                {"coeffs", std::move(coeffs)}};
}

Json witness_json(const galois::CycleWitness& w) {
    Json type = Json::array();
    for (unsigned part : w.type) type.push_back(part);
    return Json{{"prime", w.prime},
                {"cycle_type", std::move(type)},
                {"criterion", galois::to_string(w.kind)},
                {"cycle_length", w.cycle_len}};
}

Json certificate_json(const galois::GaloisCertificate& cert) {
    Json j;
    j["group"] = galois::to_string(cert.group);
    j["degree"] = cert.n;
    j["discriminant"] = cert.disc.get_str();
    j["disc_is_square"] = cert.disc_is_square;
    j["transitivity_witness"] =
        cert.transitive_witness ? witness_json(*cert.transitive_witness) : Json(nullptr);
    j["an_containment_witness"] =
        cert.an_witness ? witness_json(*cert.an_witness) : Json(nullptr);
    j["primes_scanned"] = cert.primes_scanned;
    j["primes_skipped"] = cert.primes_skipped;
    j["prime_budget"] = cert.prime_budget;
    return j;
}

Json nf_poly_json(const fieldreduce::NFPolynomial& p) {
    Json out = Json::array();
    for (const fieldreduce::NFElement& e : p.coeffs()) {
        Json el = Json::array();
        for (const mpq_class& q : e.coords()) el.push_back(q.get_str());
        out.push_back(std::move(el));
    }
    return out;
}

void ensure_valid_n(std::size_t n, const RunConfig& config) {
    if (n % 2 == 0 || n < qspace::kMinLabels || n > config.max_n)
        throw std::invalid_argument("n must be odd and within " +
                                    std::to_string(qspace::kMinLabels) + ".." +
                                    std::to_string(config.max_n) + ", got " + std::to_string(n));
}

}  // namespace

CommandResult run_certify(const galois::ParsedPoly& input, const std::string& source,
                          const RunConfig& config) {
    Json j = header("certify", config);
    j["input"] = poly_json(input.poly);
    j["input"]["source"] = source;
    j["input"]["scaled_by"] = input.scaled_by.get_str();

    const galois::EndomorphismVerdict v = galois::verdict(input.poly, config.prime_budget);

    j["squarefree"] = input.poly.is_zero() || input.poly.degree() < 1
                          ? Json(nullptr)
                          : Json(galois::squarefree_check(input.poly));
    j["certificate"] = v.certificate ? certificate_json(*v.certificate) : Json(nullptr);

    if (v.even_degree_reduced) {
        const auto reduction =
            fieldreduce::reduce_even_degree(input.poly, config.prime_budget);
        j["even_degree_reduction"] = Json{
            {"reduced_degree", reduction.h1.degree()},
            {"number_field_degree", reduction.ctx.degree()},
            {"irreducibility_witness_prime", reduction.irreducibility_witness_prime},
            {"master_identity", reduction.master_identity_ok},
            {"x1", reduction.x_substitution},
            {"y1", reduction.y_substitution}};
    } else {
        j["even_degree_reduction"] = nullptr;
    }

    j["verdict"] = galois::to_string(v.conclusion);
    j["endomorphism_ring"] =
        v.conclusion == galois::Conclusion::TrivialEndomorphisms ? "Z" : "undetermined";
    j["reasons"] = v.reasons;

    const int code =
        v.conclusion == galois::Conclusion::TrivialEndomorphisms ? kExitOk : kExitOutOfHypothesis;
    return CommandResult{std::move(j), code};
}

CommandResult run_dichotomy(std::size_t n, const RunConfig& config) {
    ensure_valid_n(n, config);
    Json j = header("dichotomy", config);
    j["n"] = n;
    const std::size_t dim = n - 1;
    j["full_dimension"] = dim * dim;

    const auto group = reptheory::standard_generators(reptheory::GroupKind::Alternating, n);
    std::mt19937_64 rng(config.rng_seed);

    std::size_t full = 0, scalar = 0, violation = 0;
    Json sample = Json::array();
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        const gf2::BitMatrix seed = gf2::random_matrix(rng, dim);
        const std::vector<gf2::BitMatrix> seeds{seed};
        const dichotomy::DichotomyResult r = dichotomy::check_dichotomy(seeds, group);
        switch (r.verdict) {
            case dichotomy::Verdict::Full: ++full; break;
            case dichotomy::Verdict::Scalar: ++scalar; break;
            case dichotomy::Verdict::Violation: ++violation; break;
        }
        if (trial < 5)
            sample.push_back(Json{{"trial", trial},
                                  {"verdict", dichotomy::to_string(r.verdict)},
                                  {"dimension", r.dimension},
                                  {"rounds", r.rounds}});
    }
    j["histogram"] = Json{{"Full", full}, {"Scalar", scalar}, {"Violation", violation}};
    j["first_trials"] = std::move(sample);
    j["all_consistent"] = violation == 0;
    return CommandResult{std::move(j), violation == 0 ? kExitOk : kExitViolation};
}

CommandResult run_lemmas(std::size_t n, const RunConfig& config) {
    ensure_valid_n(n, config);
    if (n > config.spin_cap)
        throw std::invalid_argument("n " + std::to_string(n) + " above the spin cap " +
                                    std::to_string(config.spin_cap));
    Json j = header("lemmas", config);
    j["n"] = n;
    j["group"] = "alternating";

    const qspace::SplittingReport split = qspace::verify_splitting(n);
    j["splitting"] = Json{{"dim_qb", split.dim_qb},
                          {"dim_line", split.dim_line},
                          {"dim_total", split.dim_total},
                          {"full_set_outside_qb", split.full_set_outside_qb},
                          {"intersection_trivial", split.intersection_trivial},
                          {"sum_is_everything", split.sum_is_everything},
                          {"pass", split.pass}};

    const auto group = reptheory::standard_generators(reptheory::GroupKind::Alternating, n);
    const std::size_t dim_qb = reptheory::commutant_dimension_on_qb(group);
    const std::size_t dim_full = reptheory::commutant_dimension_on_full(group);
    const bool irreducible = reptheory::is_irreducible_by_spin(group, config.spin_cap);

    j["commutant_dim_qb"] = dim_qb;
    j["commutant_dim_full"] = dim_full;
    j["irreducible_by_spin"] = irreducible;
    j["absolutely_simple"] = irreducible && dim_qb == 1;

    Json sweep = Json::array();
    bool sweep_ok = true;
    for (unsigned c = 1; static_cast<std::size_t>(c) * c <= n - 1; ++c) {
        const bool ok = dichotomy::observation_bound(static_cast<unsigned>(n), c);
        sweep_ok = sweep_ok && ok;
        sweep.push_back(Json{{"c", c}, {"holds", ok}});
    }
    j["observation_bound"] = Json{{"cases", std::move(sweep)}, {"all_hold", sweep_ok}};

    const bool all_pass = split.pass && dim_qb == 1 && dim_full == 2 && irreducible && sweep_ok;
    j["all_pass"] = all_pass;
    return CommandResult{std::move(j), all_pass ? kExitOk : kExitViolation};
}

namespace {

/// Exhaustive class-group checks for small n, sampled ones above.
Json two_torsion_checks(std::size_t n, std::uint64_t seed, bool& all_pass) {
    const jactwo::WeierstrassSet w(n);
    const qspace::LabelSet& labels = w.roots();
    const auto group = reptheory::standard_generators(reptheory::GroupKind::Alternating, n);

    bool identity_ok = true, self_inverse_ok = true, associativity_ok = true;
    bool normalize_ok = true, iso_additive_ok = true, iso_equivariant_ok = true;
    std::size_t classes_checked = 0;

    auto class_of = [&](std::uint64_t even_mask) {
        return jactwo::normalize(w, jactwo::BranchSubset{even_mask, false});
    };

    const bool exhaustive = n <= 7;
    if (exhaustive) {
        std::vector<jactwo::TwoTorsionClass> all;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (std::popcount(mask) % 2 != 0) continue;
            all.push_back(class_of(mask));
        }
        classes_checked = all.size();
        const jactwo::TwoTorsionClass zero = class_of(0);
        for (const auto& c : all) {
            identity_ok = identity_ok && add(c, zero) == c;
            self_inverse_ok = self_inverse_ok && add(c, c) == zero;
            // Normalization is constant on {T, complement-of-T}.
            const jactwo::TwoTorsionClass via_complement =
                jactwo::normalize(w, jactwo::BranchSubset{labels.full_mask() & ~c.rep().mask(), true});
            normalize_ok = normalize_ok && via_complement == c;
        }
        for (const auto& a : all)
            for (const auto& b : all) {
                iso_additive_ok =
                    iso_additive_ok &&
                    iso_to_qb(add(a, b)) == symdiff(iso_to_qb(a), iso_to_qb(b));
                for (const auto& c : all) {
                    if (!associativity_ok) break;
                    associativity_ok = add(add(a, b), c) == add(a, add(b, c));
                }
            }
        for (const auto& a : all)
            for (const auto& s : group.gens)
                iso_equivariant_ok = iso_equivariant_ok &&
                                     iso_to_qb(galois_act(s, a)) == s.apply(iso_to_qb(a));
    } else {
        std::mt19937_64 rng(seed);
        auto random_class = [&]() {
            gf2::BitVector v(n - 1);
            const std::uint64_t bits = rng();
            for (std::size_t i = 0; i + 1 < n; ++i)
                if ((bits >> i) & 1u) v.set(i, true);
            return jactwo::class_from_qb(w, qspace::subset_from_coords(v, labels));
        };
        const jactwo::TwoTorsionClass zero = class_of(0);
        classes_checked = 1000;
        for (std::size_t i = 0; i < classes_checked; ++i) {
            const auto a = random_class();
            const auto b = random_class();
            const auto c = random_class();
            identity_ok = identity_ok && add(a, zero) == a;
            self_inverse_ok = self_inverse_ok && add(a, a) == zero;
            associativity_ok = associativity_ok && add(add(a, b), c) == add(a, add(b, c));
            iso_additive_ok = iso_additive_ok &&
                              iso_to_qb(add(a, b)) == symdiff(iso_to_qb(a), iso_to_qb(b));
            const jactwo::TwoTorsionClass via_complement = jactwo::normalize(
                w, jactwo::BranchSubset{labels.full_mask() & ~a.rep().mask(), true});
            normalize_ok = normalize_ok && via_complement == a;
            for (const auto& s : group.gens) {
                iso_equivariant_ok = iso_equivariant_ok &&
                                     iso_to_qb(galois_act(s, a)) == s.apply(iso_to_qb(a));
                iso_equivariant_ok =
                    iso_equivariant_ok &&
                    galois_act(s, add(a, b)) == add(galois_act(s, a), galois_act(s, b));
            }
        }
    }

    all_pass = identity_ok && self_inverse_ok && associativity_ok && normalize_ok &&
               iso_additive_ok && iso_equivariant_ok;
    return Json{{"exhaustive", exhaustive},
                {"classes_checked", classes_checked},
                {"identity", identity_ok},
                {"self_inverse", self_inverse_ok},
                {"associativity", associativity_ok},
                {"normalize_complement_pair", normalize_ok},
                {"iso_additive", iso_additive_ok},
                {"iso_equivariant", iso_equivariant_ok}};
}

}  // namespace

CommandResult run_two_torsion(std::size_t n, const RunConfig& config) {
    ensure_valid_n(n, config);
    Json j = header("two-torsion", config);
    j["n"] = n;
    const jactwo::WeierstrassSet w(n);
    j["genus"] = w.genus();
    j["class_count_log2"] = n - 1;

    bool all_pass = false;
    j["checks"] = two_torsion_checks(n, config.rng_seed, all_pass);
    j["all_pass"] = all_pass;
    return CommandResult{std::move(j), all_pass ? kExitOk : kExitViolation};
}

CommandResult run_reduce_even(const galois::ParsedPoly& input, const std::string& source,
                              const RunConfig& config) {
    Json j = header("reduce-even", config);
    j["input"] = poly_json(input.poly);
    j["input"]["source"] = source;
    j["input"]["scaled_by"] = input.scaled_by.get_str();

    const fieldreduce::EvenReduction r =
        fieldreduce::reduce_even_degree(input.poly, config.prime_budget);

    Json modulus = Json::array();
    for (const mpq_class& q : r.ctx.monic_modulus()) modulus.push_back(q.get_str());
    j["number_field"] = Json{{"degree", r.ctx.degree()}, {"monic_modulus", std::move(modulus)}};
    j["irreducibility_witness_prime"] = r.irreducibility_witness_prime;
    j["f1"] = nf_poly_json(r.f1);
    j["h1"] = nf_poly_json(r.h1);
    j["substitution"] =
        Json{{"x1", r.x_substitution}, {"y1", r.y_substitution}, {"m", r.half_degree}};
    j["f1_irreducible_over_extension"] =
        "inherited from the irreducibility of f; not recomputed over Q(a)";

    const bool h1_deg_ok = r.h1.degree() == r.ctx.degree() - 1;
    const bool h1_const_ok = !r.h1.coeffs().empty() && !r.h1.coeffs().front().is_zero();
    j["checks"] = Json{{"master_identity", r.master_identity_ok},
                       {"h1_degree", r.h1.degree()},
                       {"h1_degree_expected", r.ctx.degree() - 1},
                       {"h1_constant_nonzero", h1_const_ok}};
    const bool all_pass = r.master_identity_ok && h1_deg_ok && h1_const_ok;
    j["all_pass"] = all_pass;
    return CommandResult{std::move(j), all_pass ? kExitOk : kExitViolation};
}

std::string render_text(const Json& report) {
    std::string out;
    auto walk = [&out](auto&& self, const Json& node, const std::string& path) -> void {
        if (node.is_object()) {
            for (auto it = node.begin(); it != node.end(); ++it)
                self(self, it.value(), path.empty() ? it.key() : path + "." + it.key());
        } else if (node.is_array()) {
            std::size_t i = 0;
            for (const auto& el : node) self(self, el, path + "[" + std::to_string(i++) + "]");
            if (node.empty()) out += path + " = []\n";
        } else {
            out += path + " = " + node.dump() + "\n";
        }
    };
    walk(walk, report, "");
    return out;
}

}  // namespace endogate::reports
