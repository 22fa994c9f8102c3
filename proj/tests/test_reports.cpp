#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "endogate/reports.hpp"

using namespace endogate;
using reports::CommandResult;
using reports::RunConfig;

namespace {

RunConfig base_config() {
    RunConfig c;
    c.trials = 10;
    c.rng_seed = 7;
    return c;
}

}  // namespace

TEST_CASE("certify report carries the certificate and verdict") {
    const auto parsed = galois::parse_polynomial("x^5 - x - 1");
    const CommandResult r = reports::run_certify(parsed, "x^5 - x - 1", base_config());
    CHECK(r.exit_code == reports::kExitOk);
    CHECK(r.report["schema"] == 1);
    CHECK(r.report["verdict"] == "TrivialEndomorphisms");
    CHECK(r.report["endomorphism_ring"] == "Z");
    CHECK(r.report["certificate"]["group"] == "symmetric");
    CHECK(r.report["certificate"]["discriminant"] == "2869");

    const auto quartic = galois::parse_polynomial("x^4 + 1");
    const CommandResult out = reports::run_certify(quartic, "x^4 + 1", base_config());
    CHECK(out.exit_code == reports::kExitOutOfHypothesis);
    CHECK(out.report["verdict"] == "OutOfHypothesis");
    CHECK(out.report["certificate"].is_null());
}

TEST_CASE("certify on an even-degree input embeds the reduction note") {
    const auto parsed = galois::parse_polynomial("x^8 - x - 1");
    const CommandResult r = reports::run_certify(parsed, "x^8 - x - 1", base_config());
    CHECK(r.exit_code == reports::kExitOk);
    CHECK(r.report["even_degree_reduction"]["reduced_degree"] == 7);
    CHECK(r.report["even_degree_reduction"]["master_identity"] == true);
}

TEST_CASE("dichotomy report is deterministic and violation-free") {
    const CommandResult a = reports::run_dichotomy(5, base_config());
    const CommandResult b = reports::run_dichotomy(5, base_config());
    CHECK(a.exit_code == reports::kExitOk);
    CHECK(a.report.dump(2) == b.report.dump(2));
    CHECK(a.report["histogram"]["Violation"] == 0);
    const unsigned full = a.report["histogram"]["Full"];
    const unsigned scalar = a.report["histogram"]["Scalar"];
    CHECK(full + scalar == 10);

    RunConfig other = base_config();
    other.rng_seed = 8;
    const CommandResult c = reports::run_dichotomy(5, other);
    CHECK(c.report["histogram"]["Violation"] == 0);

    CHECK_THROWS_AS(reports::run_dichotomy(4, base_config()), std::invalid_argument);
}

TEST_CASE("lemmas report aggregates all the checks") {
    const CommandResult r = reports::run_lemmas(5, base_config());
    CHECK(r.exit_code == reports::kExitOk);
    CHECK(r.report["all_pass"] == true);
    CHECK(r.report["commutant_dim_qb"] == 1);
    CHECK(r.report["commutant_dim_full"] == 2);
    CHECK(r.report["irreducible_by_spin"] == true);
    CHECK(r.report["splitting"]["pass"] == true);
    CHECK(r.report["observation_bound"]["all_hold"] == true);

    const CommandResult nine = reports::run_lemmas(9, base_config());
    CHECK(nine.report["all_pass"] == true);
    CHECK(nine.report["commutant_dim_qb"] == 1);
    CHECK(nine.report["commutant_dim_full"] == 2);

    CHECK_THROWS_AS(reports::run_lemmas(6, base_config()), std::invalid_argument);
    CHECK_THROWS_AS(reports::run_lemmas(23, base_config()), std::invalid_argument);
}

TEST_CASE("two-torsion report, exhaustive and sampled") {
    const CommandResult five = reports::run_two_torsion(5, base_config());
    CHECK(five.exit_code == reports::kExitOk);
    CHECK(five.report["checks"]["exhaustive"] == true);
    CHECK(five.report["checks"]["classes_checked"] == 16);
    CHECK(five.report["all_pass"] == true);

    const CommandResult seven = reports::run_two_torsion(7, base_config());
    CHECK(seven.report["checks"]["exhaustive"] == true);
    CHECK(seven.report["checks"]["classes_checked"] == 64);
    CHECK(seven.report["all_pass"] == true);

    const CommandResult nine = reports::run_two_torsion(9, base_config());
    CHECK(nine.report["checks"]["exhaustive"] == false);
    CHECK(nine.report["all_pass"] == true);

    CHECK_THROWS_AS(reports::run_two_torsion(4, base_config()), std::invalid_argument);
}

TEST_CASE("reduce-even report") {
    const auto parsed = galois::parse_polynomial("x^6 - x - 1");
    const CommandResult r = reports::run_reduce_even(parsed, "x^6 - x - 1", base_config());
    CHECK(r.exit_code == reports::kExitOk);
    CHECK(r.report["all_pass"] == true);
    CHECK(r.report["checks"]["master_identity"] == true);
    CHECK(r.report["checks"]["h1_degree"] == 5);
    CHECK(r.report["h1"].size() == 6);
    CHECK(r.report["number_field"]["degree"] == 6);

    const auto odd = galois::parse_polynomial("x^5 - x - 1");
    CHECK_THROWS_AS(reports::run_reduce_even(odd, "x^5 - x - 1", base_config()),
                    std::invalid_argument);
}

TEST_CASE("reports are byte-stable across repeated runs") {
    const auto parsed = galois::parse_polynomial("x^5 - x - 1");
    const std::string once = reports::run_certify(parsed, "p", base_config()).report.dump(2);
    const std::string twice = reports::run_certify(parsed, "p", base_config()).report.dump(2);
    CHECK(once == twice);

    const std::string lemmas_once = reports::run_lemmas(7, base_config()).report.dump(2);
    const std::string lemmas_twice = reports::run_lemmas(7, base_config()).report.dump(2);
    CHECK(lemmas_once == lemmas_twice);
}

TEST_CASE("text rendering flattens every leaf") {
    const auto parsed = galois::parse_polynomial("x^5 - x - 1");
    const CommandResult r = reports::run_certify(parsed, "x^5 - x - 1", base_config());
    const std::string text = reports::render_text(r.report);
    CHECK(text.find("verdict = \"TrivialEndomorphisms\"") != std::string::npos);
    CHECK(text.find("certificate.group = \"symmetric\"") != std::string::npos);
    CHECK(text.find("certificate.transitivity_witness.prime = 3") != std::string::npos);
}
