#include "dynzeta/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dynzeta/json_io.hpp"
#include "dynzeta/spectral.hpp"
#include "dynzeta/verify.hpp"

namespace dynzeta {

namespace {

constexpr int kMaxOrder = 4096;

struct CliError {
    std::string code;
    std::string detail;
    int exit_code;
};

[[noreturn]] void bail(const std::string& code, const std::string& detail, int exit_code) {
    throw CliError{code, detail, exit_code};
}

/// "-" reads stdin, an existing path reads the file, anything else is
/// taken as inline JSON.
json load_input(const std::string& source, std::istream& in) {
    std::string text;
    if (source == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    } else if (std::filesystem::exists(source) && !std::filesystem::is_directory(source)) {
        std::ifstream file(source);
        if (!file) bail("io-error", "cannot read input file '" + source + "'", kExitInputError);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    } else {
        text = source;
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bail("malformed-json", e.what(), kExitInputError);
    }
}

void emit(const json& doc, const std::string& output_path, std::ostream& out) {
    std::string text = doc.dump();
    if (output_path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream file(output_path);
    if (!file) bail("io-error", "cannot write output file '" + output_path + "'", kExitInputError);
    file << text << "\n";
}

int checked_order(long long order) {
    if (order < 0 || order > kMaxOrder)
        bail("order-overflow", "order must lie in [0, " + std::to_string(kMaxOrder) + "]",
             kExitInputError);
    return static_cast<int>(order);
}

json sequence_report(const std::vector<Rational>& values) {
    IntegralityReport witness = integrality(values);
    json out{{"values", sequence_to_json(values)}, {"integral", witness.integral}};
    out["first_fractional"] = witness.integral ? json(nullptr) : json(witness.first_fractional);
    return out;
}

std::vector<Rational> truncated_values(std::vector<Rational> values, int order, bool order_given) {
    if (order_given && static_cast<size_t>(order) < values.size())
        values.resize(static_cast<size_t>(order));
    return values;
}

struct Options {
    long long order = 32;
    bool order_given = false;
    std::string input;
    std::string output;
};

/// Attaches the shared --order/--input/--output options to a subcommand.
Options* attach_common(CLI::App* cmd, std::vector<std::unique_ptr<Options>>& storage,
                       bool needs_input) {
    storage.push_back(std::make_unique<Options>());
    Options* opt = storage.back().get();
    cmd->add_option("--order", opt->order, "Working series order (default 32)");
    auto* input = cmd->add_option("--input,--input-series,-i", opt->input,
                                  "Inline JSON, a file path, or '-' for stdin");
    if (needs_input) input->required();
    cmd->add_option("--output,-o", opt->output, "Output file (default stdout)");
    cmd->callback([cmd, opt] { opt->order_given = cmd->count("--order") > 0; });
    return opt;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
    CLI::App app{"dynzeta: exact dynamical zeta function toolkit"};
    app.require_subcommand(1);
    std::vector<std::unique_ptr<Options>> storage;

    auto* zeta_from = app.add_subcommand("zeta-from-indices",
                                         "Zeta function of a fixed point index sequence");
    Options* zeta_from_opt = attach_common(zeta_from, storage, true);

    auto* indices_from = app.add_subcommand("indices-from-zeta",
                                            "Index sequence of a monic series");
    Options* indices_from_opt = attach_common(indices_from, storage, true);

    auto* sp_from = app.add_subcommand("sp-from-indices",
                                       "Symmetric-product index sequence from indices");
    Options* sp_from_opt = attach_common(sp_from, storage, true);

    auto* indices_from_sp_cmd = app.add_subcommand("indices-from-sp",
                                                   "Indices from a symmetric-product sequence");
    Options* indices_from_sp_opt = attach_common(indices_from_sp_cmd, storage, true);

    auto* dold_check_cmd = app.add_subcommand("dold-check",
                                              "Check the Dold congruences on a sequence");
    Options* dold_check_opt = attach_common(dold_check_cmd, storage, true);

    auto* dold_coeff_cmd = app.add_subcommand("dold-coefficients",
                                              "Dold coefficients of an index sequence");
    Options* dold_coeff_opt = attach_common(dold_coeff_cmd, storage, true);

    auto* factorize_cmd = app.add_subcommand("factorize",
                                             "Factor a monic series into (1-t^n) powers");
    Options* factorize_opt = attach_common(factorize_cmd, storage, true);

    auto* expand_cmd = app.add_subcommand("expand", "Expand a factor-exponent map into a series");
    Options* expand_opt = attach_common(expand_cmd, storage, true);

    auto* linear_cmd = app.add_subcommand("linear-zeta",
                                          "Closed-form zeta of a hyperbolic linear map class");
    Options* linear_opt = attach_common(linear_cmd, storage, false);
    int sigma_minus = 0, sigma_plus = 0;
    linear_cmd->add_option("--sigma-minus", sigma_minus, "Parity of eigenvalues below -1")
        ->required()->check(CLI::Range(0, 1));
    linear_cmd->add_option("--sigma-plus", sigma_plus, "Parity of eigenvalues above +1")
        ->required()->check(CLI::Range(0, 1));

    auto* matrix_cmd = app.add_subcommand("matrix-zeta",
                                          "Zeta data of an exact rational matrix");
    Options* matrix_opt = attach_common(matrix_cmd, storage, true);

    auto* orbit_cmd = app.add_subcommand("orbit-zeta", "Zeta function of an orbit table");
    Options* orbit_opt = attach_common(orbit_cmd, storage, true);

    auto* iterate_cmd = app.add_subcommand("iterate",
                                           "Apply the t -> t^k iteration substitution");
    Options* iterate_opt = attach_common(iterate_cmd, storage, true);
    int iterate_k = 1;
    iterate_cmd->add_option("--k", iterate_k, "Iterate index k")->required();

    auto* macdonald_cmd = app.add_subcommand("macdonald",
                                             "Symmetric-product Euler characteristic series");
    Options* macdonald_opt = attach_common(macdonald_cmd, storage, false);
    long long chi = 0;
    macdonald_cmd->add_option("--chi", chi, "Euler characteristic")->required();

    auto* lecalvez_cmd = app.add_subcommand("lecalvez",
                                            "Local zeta (1-t^q)^r / (1-t) of a surface fixed point");
    Options* lecalvez_opt = attach_common(lecalvez_cmd, storage, false);
    int lc_q = 1, lc_r = 0;
    lecalvez_cmd->add_option("--q", lc_q, "Period of the unstable branches")->required();
    lecalvez_cmd->add_option("--r", lc_r, "Branch count parameter")->required();

    auto* admissibility_cmd = app.add_subcommand("admissibility",
                                                 "Largest order with no small root-of-unity eigenvalue");
    Options* admissibility_opt = attach_common(admissibility_cmd, storage, true);
    int n_max = 0;
    admissibility_cmd->add_option("--n-max", n_max, "Search bound (default: --order)");

    auto* commutativity_cmd = app.add_subcommand("commutativity",
                                                 "Compare the zeta data of AB and BA");
    Options* commutativity_opt = attach_common(commutativity_cmd, storage, true);

    auto* verify_cmd = app.add_subcommand("verify", "Run the cross-module identity suites");
    Options* verify_opt = attach_common(verify_cmd, storage, false);
    unsigned long long verify_seed = 0;
    int verify_count = 100;
    std::string mutate;
    verify_cmd->add_option("--seed", verify_seed, "Deterministic generator seed");
    verify_cmd->add_option("--count", verify_count, "Instances per property");
    verify_cmd->add_option("--mutate", mutate,
                           "Negative-control corruption (testing hook): none | mul-top-coeff");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        // keep stdout JSON-only; usage text is a diagnostic
        return app.exit(e, err, err);
    } catch (const CLI::ParseError& e) {
        out << json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
        return kExitInputError;
    }

    try {
        if (*zeta_from) {
            const Options& o = *zeta_from_opt;
            int order = checked_order(o.order);
            std::vector<Rational> values = truncated_values(
                sequence_from_json(load_input(o.input, in)), order, o.order_given);
            emit(series_to_json(zeta_from_indices(IndexSequence(values)).series()), o.output, out);
        } else if (*indices_from) {
            const Options& o = *indices_from_opt;
            MonicSeries z = monic_from_json(load_input(o.input, in));
            if (o.order_given && checked_order(o.order) < z.order())
                z = z.truncated(checked_order(o.order));
            emit(sequence_report(indices_from_zeta(z).values), o.output, out);
        } else if (*sp_from) {
            const Options& o = *sp_from_opt;
            std::vector<Rational> values = truncated_values(
                sequence_from_json(load_input(o.input, in)), checked_order(o.order), o.order_given);
            emit(sequence_report(sp_from_indices_recurrence(IndexSequence(values)).values),
                 o.output, out);
        } else if (*indices_from_sp_cmd) {
            const Options& o = *indices_from_sp_opt;
            std::vector<Rational> values = truncated_values(
                sequence_from_json(load_input(o.input, in)), checked_order(o.order), o.order_given);
            emit(sequence_report(indices_from_sp_recurrence(SPIndexSequence(values)).values),
                 o.output, out);
        } else if (*dold_check_cmd) {
            const Options& o = *dold_check_opt;
            std::vector<Rational> values = truncated_values(
                sequence_from_json(load_input(o.input, in)), checked_order(o.order), o.order_given);
            DoldVerdict verdict = dold_check(IndexSequence(values));
            emit(dold_verdict_to_json(verdict), o.output, out);
            return verdict.pass ? kExitSuccess : kExitCheckFailed;
        } else if (*dold_coeff_cmd) {
            const Options& o = *dold_coeff_opt;
            std::vector<Rational> values = truncated_values(
                sequence_from_json(load_input(o.input, in)), checked_order(o.order), o.order_given);
            DoldCoefficients coeffs = dold_coefficients(IndexSequence(values));
            json flags = json::array();
            for (bool f : coeffs.integral) flags.push_back(f);
            emit(json{{"values", sequence_to_json(coeffs.values)}, {"integral", std::move(flags)}},
                 o.output, out);
        } else if (*factorize_cmd) {
            const Options& o = *factorize_opt;
            MonicSeries z = monic_from_json(load_input(o.input, in));
            if (o.order_given && checked_order(o.order) < z.order())
                z = z.truncated(checked_order(o.order));
            emit(exponents_to_json(factorize(z)), o.output, out);
        } else if (*expand_cmd) {
            const Options& o = *expand_opt;
            FactorExponents f = exponents_from_json(load_input(o.input, in));
            emit(series_to_json(expand_factors(f, checked_order(o.order)).series()), o.output, out);
        } else if (*linear_cmd) {
            const Options& o = *linear_opt;
            emit(series_to_json(
                     linear_zeta(SpectralClass{sigma_minus, sigma_plus}, checked_order(o.order))
                         .series()),
                 o.output, out);
        } else if (*matrix_cmd) {
            const Options& o = *matrix_opt;
            int order = checked_order(o.order);
            RationalMatrix a = matrix_from_json(load_input(o.input, in));
            SpectralClass c = spectral_class(a);
            IndexSequence idx = index_sequence_of_matrix(a, order);
            MonicSeries from_indices = zeta_from_indices(idx);
            if (!(from_indices == linear_zeta(c, order)))
                throw std::logic_error("matrix-zeta: the two computation paths disagree");
            emit(json{{"sigma_minus", c.sigma_minus},
                      {"sigma_plus", c.sigma_plus},
                      {"indices", sequence_to_json(idx.values)},
                      {"zeta", series_to_json(from_indices.series())}},
                 o.output, out);
        } else if (*orbit_cmd) {
            const Options& o = *orbit_opt;
            OrbitTable table = orbit_table_from_json(load_input(o.input, in));
            emit(series_to_json(orbit_zeta(table, checked_order(o.order)).series()), o.output, out);
        } else if (*iterate_cmd) {
            const Options& o = *iterate_opt;
            MonicSeries z = monic_from_json(load_input(o.input, in));
            if (iterate_k < 1) bail("invalid-input", "--k must be >= 1", kExitInputError);
            long long target = o.order_given ? o.order
                                             : static_cast<long long>(iterate_k) * z.order();
            emit(series_to_json(
                     iterate_zeta_axiom(z, iterate_k, checked_order(target)).series()),
                 o.output, out);
        } else if (*macdonald_cmd) {
            const Options& o = *macdonald_opt;
            emit(series_to_json(macdonald_series(chi, checked_order(o.order)).series()), o.output,
                 out);
        } else if (*lecalvez_cmd) {
            const Options& o = *lecalvez_opt;
            emit(series_to_json(lecalvez_zeta(lc_q, lc_r, checked_order(o.order)).series()),
                 o.output, out);
        } else if (*admissibility_cmd) {
            const Options& o = *admissibility_opt;
            int bound = admissibility_cmd->count("--n-max") > 0 ? n_max : checked_order(o.order);
            if (bound < 1) bail("invalid-input", "--n-max must be >= 1", kExitInputError);
            RationalMatrix a = matrix_from_json(load_input(o.input, in));
            emit(json{{"admissibility_order", admissibility_order(a, bound)}, {"n_max", bound}},
                 o.output, out);
        } else if (*commutativity_cmd) {
            const Options& o = *commutativity_opt;
            json doc = load_input(o.input, in);
            if (!doc.is_object() || !doc.contains("a") || !doc.contains("b"))
                bail("invalid-input", "commutativity input must be {\"a\": matrix, \"b\": matrix}",
                     kExitInputError);
            CommutativityReport report =
                commutativity_witness(matrix_from_json(doc.at("a")), matrix_from_json(doc.at("b")),
                                      checked_order(o.order));
            emit(commutativity_report_to_json(report), o.output, out);
            return report.pass ? kExitSuccess : kExitCheckFailed;
        } else if (*verify_cmd) {
            const Options& o = *verify_opt;
            VerifyReport report = run_verify(checked_order(o.order),
                                             static_cast<unsigned long>(verify_seed), verify_count,
                                             mutation_from_name(mutate));
            emit(verify_report_to_json(report), o.output, out);
            return report.all_pass() ? kExitSuccess : kExitCheckFailed;
        }
        return kExitSuccess;
    } catch (const CliError& e) {
        out << json{{"error", e.code}, {"detail", e.detail}}.dump() << "\n";
        return e.exit_code;
    } catch (const NonAdmissibleError& e) {
        out << json{{"error", "non-admissible"},
                    {"detail", e.what()},
                    {"failing_order", e.failing_order()}}.dump()
            << "\n";
        return kExitInputError;
    } catch (const std::length_error& e) {
        out << json{{"error", "size-cap"}, {"detail", e.what()}}.dump() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        out << json{{"error", "invalid-input"}, {"detail", e.what()}}.dump() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        out << json{{"error", "invalid-input"}, {"detail", e.what()}}.dump() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        out << json{{"error", "invalid-input"}, {"detail", e.what()}}.dump() << "\n";
        return kExitInputError;
    } catch (const std::logic_error& e) {
        // an internal dual-route assertion tripped: a mathematical check
        // failed, not an input problem
        out << json{{"error", "internal-check-failed"}, {"detail", e.what()}}.dump() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        out << json{{"error", "invalid-input"}, {"detail", e.what()}}.dump() << "\n";
        return kExitInputError;
    }
}

}  // namespace dynzeta
