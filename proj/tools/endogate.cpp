#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "endogate/reports.hpp"

namespace {

using endogate::reports::CommandResult;
using endogate::reports::Json;
using endogate::reports::RunConfig;

struct PolyInput {
    std::string poly_text;
    std::string coeffs_csv;
    std::string file_path;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--poly", poly_text, "polynomial as text, e.g. \"x^5 - x - 1\"");
        auto* b = cmd->add_option("--coeffs", coeffs_csv,
                                  "ascending coefficients, comma separated, e.g. 120,120,60,20,5,1");
        auto* c = cmd->add_option("--file", file_path,
                                  "file with one polynomial per line; '#' starts a comment");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }

    bool from_file() const { return !file_path.empty(); }

    /// Parses the single-polynomial forms.
    std::pair<endogate::galois::ParsedPoly, std::string> parse_one() const {
        if (!poly_text.empty())
            return {endogate::galois::parse_polynomial(poly_text), poly_text};
        if (!coeffs_csv.empty()) {
            std::vector<std::string> parts;
            std::stringstream ss(coeffs_csv);
            std::string item;
            while (std::getline(ss, item, ',')) parts.push_back(item);
            return {endogate::galois::poly_from_coeff_strings(parts), "coeffs:" + coeffs_csv};
        }
        throw endogate::galois::ParseError("no polynomial given: use --poly, --coeffs or --file");
    }

    std::vector<std::pair<endogate::galois::ParsedPoly, std::string>> parse_file() const {
        std::ifstream in(file_path);
        if (!in) throw std::runtime_error("cannot open input file: " + file_path);
        std::vector<std::pair<endogate::galois::ParsedPoly, std::string>> out;
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            const auto last = line.find_last_not_of(" \t\r");
            const std::string text = line.substr(first, last - first + 1);
            out.emplace_back(endogate::galois::parse_polynomial(text), text);
        }
        if (out.empty()) throw std::runtime_error("no polynomials in file: " + file_path);
        return out;
    }
};

void emit(const Json& report, const std::string& output_path, const std::string& format) {
    const std::string body =
        format == "text" ? endogate::reports::render_text(report) : report.dump(2) + "\n";
    if (output_path.empty() || output_path == "-") {
        std::cout << body;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + output_path);
        out << body;
    }
}

/// Runs `action` per polynomial; aggregates a JSON array for file input.
template <typename Action>
int run_poly_command(const PolyInput& input, const std::string& output, const std::string& format,
                     Action&& action) {
    if (!input.from_file()) {
        const auto [poly, source] = input.parse_one();
        const CommandResult result = action(poly, source);
        emit(result.report, output, format);
        return result.exit_code;
    }
    Json reports = Json::array();
    int code = endogate::reports::kExitOk;
    for (const auto& [poly, source] : input.parse_file()) {
        const CommandResult result = action(poly, source);
        reports.push_back(result.report);
        code = std::max(code, result.exit_code);
    }
    emit(reports, output, format);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"endogate: certifies End(J) = Z for hyperelliptic Jacobians y^2 = f(x) with "
                 "big Galois group, and verifies the underlying GF(2) dichotomy"};
    app.require_subcommand(1);

    RunConfig config;
    if (const char* env = std::getenv("ENDOGATE_PRIME_BUDGET")) {
        try {
            config.prime_budget = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: ENDOGATE_PRIME_BUDGET is not a number: " << env << "\n";
            return endogate::reports::kExitUsage;
        }
    }
    std::string output;
    std::string format = "json";
    app.add_option("--prime-budget", config.prime_budget,
                   "largest prime scanned for witnesses (flag wins over ENDOGATE_PRIME_BUDGET)");
    app.add_option("--output", output, "write the report here instead of stdout");
    app.add_option("--format", format, "json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* certify = app.add_subcommand(
        "certify", "decide the endomorphism ring of J(y^2 = f) from the Galois group of f");
    PolyInput certify_input;
    certify_input.attach(certify);

    auto* dicho = app.add_subcommand(
        "dichotomy", "random-seed trials of the scalar-or-everything subalgebra dichotomy");
    std::size_t dicho_n = 5;
    dicho->add_option("--n", dicho_n, "number of labels (odd, >= 5)")->required();
    dicho->add_option("--trials", config.trials, "number of random seeds");
    dicho->add_option("--seed", config.rng_seed, "RNG seed (reports are deterministic per seed)");

    auto* lemmas = app.add_subcommand(
        "lemmas", "commutant dimensions, spin irreducibility, splitting and counting bounds");
    std::size_t lemmas_n = 5;
    lemmas->add_option("--n", lemmas_n, "number of labels (odd, >= 5)")->required();

    auto* twotor = app.add_subcommand(
        "two-torsion", "2-torsion class group demo: group law, normalization, Galois action");
    std::size_t twotor_n = 5;
    twotor->add_option("--n", twotor_n, "number of roots (odd, >= 5)")->required();
    twotor->add_option("--seed", config.rng_seed, "RNG seed for the sampled checks (n > 7)");

    auto* reduce = app.add_subcommand(
        "reduce-even", "even-to-odd degree model reduction over the root field Q(a)");
    PolyInput reduce_input;
    reduce_input.attach(reduce);

    CLI11_PARSE(app, argc, argv);

    try {
        if (certify->parsed())
            return run_poly_command(certify_input, output, format,
                                    [&](const auto& poly, const std::string& source) {
                                        return endogate::reports::run_certify(poly, source, config);
                                    });
        if (dicho->parsed()) {
            const CommandResult result = endogate::reports::run_dichotomy(dicho_n, config);
            emit(result.report, output, format);
            return result.exit_code;
        }
        if (lemmas->parsed()) {
            const CommandResult result = endogate::reports::run_lemmas(lemmas_n, config);
            emit(result.report, output, format);
            return result.exit_code;
        }
        if (twotor->parsed()) {
            const CommandResult result = endogate::reports::run_two_torsion(twotor_n, config);
            emit(result.report, output, format);
            return result.exit_code;
        }
        if (reduce->parsed())
            return run_poly_command(reduce_input, output, format,
                                    [&](const auto& poly, const std::string& source) {
                                        return endogate::reports::run_reduce_even(poly, source,
                                                                                  config);
                                    });
    } catch (const endogate::galois::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return endogate::reports::kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return endogate::reports::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return endogate::reports::kExitViolation;
    }
    return endogate::reports::kExitUsage;
}
