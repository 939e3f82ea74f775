// Command-line front end: exact integrals of characteristic classes over
// Grassmannians, plus direct access to the interpolation identities the
// integration engine is built on.
//
// Exit codes: 0 success, 1 usage/parse/validation error, 2 violated
// mathematical precondition (degree above the dimension, missing symmetry).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chern/chern.hpp"

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 12345;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SEED")) {
        std::string s(env);
        bool ok = !s.empty();
        for (char c : s) ok = ok && c >= '0' && c <= '9';
        if (!ok)
            throw chern::InvalidArgument("SEED environment variable must be a nonnegative integer, got '" +
                                         s + "'");
        return std::stoull(s);
    }
    return kDefaultSeed;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

chern::WeightVector parse_lambdas(const std::string& text, int n) {
    std::vector<chern::Rational> values;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string piece = trim(comma == std::string::npos ? text.substr(start)
                                                            : text.substr(start, comma - start));
        if (piece.empty()) throw chern::InvalidArgument("empty entry in --lambdas");
        values.push_back(chern::Rational::from_string(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(values.size()) != n)
        throw chern::InvalidArgument("--lambdas needs exactly n = " + std::to_string(n) +
                                     " entries, got " + std::to_string(values.size()));
    return chern::WeightVector(std::move(values));
}

chern::WeightVector choose_weights(const std::optional<std::string>& lambdas, int n,
                                   const std::optional<std::uint64_t>& seed) {
    if (lambdas) return parse_lambdas(*lambdas, n);
    std::mt19937_64 rng(resolve_seed(seed));
    return chern::sample_weights(static_cast<std::size_t>(n), rng);
}

/// Raw-variable integrands must stay within the Chern-root alphabets of
/// G(k,n); anything else is a usage error rather than a precondition failure.
void check_alphabets(const chern::Polynomial& p, const chern::GrassmannSpec& spec) {
    for (chern::VarId v : p.variables()) {
        bool ok = (v.alphabet() == chern::Alphabet::X &&
                   v.index() <= static_cast<std::uint32_t>(spec.k)) ||
                  (v.alphabet() == chern::Alphabet::Y &&
                   v.index() <= static_cast<std::uint32_t>(spec.n - spec.k));
        if (!ok)
            throw chern::InvalidArgument("variable " + v.name() + " is outside x1..x" +
                                         std::to_string(spec.k) + ", y1..y" +
                                         std::to_string(spec.n - spec.k) + " for G(" +
                                         std::to_string(spec.k) + "," +
                                         std::to_string(spec.n) + ")");
    }
}

struct IntegrateOptions {
    int k = 0;
    int n = 0;
    std::string expr;
    int oracle_trials = 0;
    std::optional<std::uint64_t> seed;
    bool json = false;
};

int run_integrate(const IntegrateOptions& opt) {
    chern::GrassmannSpec spec(opt.k, opt.n);
    chern::ParsedExpression parsed = chern::parse_expression(opt.expr);
    chern::Polynomial expanded;
    if (const chern::Polynomial* p = std::get_if<chern::Polynomial>(&parsed)) {
        check_alphabets(*p, spec);
        expanded = *p;
    } else {
        expanded = chern::expand_class(std::get<chern::ClassExpr>(parsed), spec);
    }
    chern::Rational value = chern::integrate(expanded, spec);
    std::optional<bool> agree;
    if (opt.oracle_trials > 0) {
        chern::CertifyReport report = chern::certify_constant(
            expanded, spec, opt.oracle_trials, resolve_seed(opt.seed));
        agree = report.value == value;
    }
    if (opt.json) {
        ordered_json out;
        out["value"] = value.str();
        if (agree) {
            out["oracle"] = ordered_json{{"trials", opt.oracle_trials}, {"agree", *agree}};
        } else {
            out["oracle"] = nullptr;
        }
        out["spec"] = ordered_json{{"k", opt.k}, {"n", opt.n}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value.str() << "\n";
        if (agree)
            std::cout << "oracle: " << (*agree ? "agree" : "DISAGREE") << " ("
                      << opt.oracle_trials << " trials)\n";
    }
    return agree && !*agree ? 1 : 0;
}

struct IdentityOptions {
    int k = 0;
    int n = 0;
    long m = 0;
    std::string expr;
    std::optional<std::string> lambdas;
    std::optional<std::uint64_t> seed;
};

int report_verdict(const chern::WeightVector& lambdas, const std::string& lhs,
                   const std::string& rhs) {
    bool equal = lhs == rhs;
    std::cout << "lambda = " << lambdas.str() << "\n";
    std::cout << "lhs = " << lhs << "\n";
    std::cout << "rhs = " << rhs << "\n";
    std::cout << "VERDICT: " << (equal ? "equal" : "unequal") << "\n";
    return equal ? 0 : 1;
}

int run_identity_prop1(const IdentityOptions& opt) {
    chern::WeightVector lambdas = choose_weights(opt.lambdas, opt.n, opt.seed);
    chern::Polynomial p = chern::parse_polynomial(opt.expr);
    chern::Rational lhs = chern::divided_difference(p, lambdas);
    chern::Rational rhs(0);
    std::set<chern::VarId> vars = p.variables();
    if (vars.empty()) {
        if (opt.n == 1) rhs = p.constant_value();
    } else {
        rhs = p.coefficient(
            chern::Monomial::var(*vars.begin(), static_cast<std::uint32_t>(opt.n - 1)));
    }
    return report_verdict(lambdas, lhs.str(), rhs.str());
}

int run_identity_power_sum(const IdentityOptions& opt) {
    chern::WeightVector lambdas = choose_weights(opt.lambdas, opt.n, opt.seed);
    chern::IdentitySides sides = chern::power_sum_identity(opt.m, lambdas);
    return report_verdict(lambdas, sides.lhs.str(), sides.rhs.str());
}

int run_identity_main(const IdentityOptions& opt) {
    chern::WeightVector lambdas = choose_weights(opt.lambdas, opt.n, opt.seed);
    chern::Polynomial p = chern::parse_polynomial(opt.expr);
    chern::Rational lhs = chern::symmetric_interpolation_sum(p, opt.k, lambdas);
    chern::Rational rhs = chern::symmetric_coefficient_formula(p, opt.k, opt.n);
    return report_verdict(lambdas, lhs.str(), rhs.str());
}

int run_identity_double(const IdentityOptions& opt) {
    chern::WeightVector lambdas = choose_weights(opt.lambdas, opt.n, opt.seed);
    chern::Polynomial p = chern::parse_polynomial(opt.expr);
    chern::Rational lhs = chern::double_interpolation_sum(p, opt.k, lambdas);
    chern::Rational rhs = chern::double_coefficient_formula(p, opt.k, opt.n);
    return report_verdict(lambdas, lhs.str(), rhs.str());
}

int run_identity_chen_louck(const IdentityOptions& opt) {
    chern::WeightVector lambdas = choose_weights(opt.lambdas, opt.n, opt.seed);
    chern::Polynomial p = chern::parse_polynomial(opt.expr);
    chern::Polynomial reconstructed = chern::chen_louck_interpolate(p, opt.k, lambdas);
    return report_verdict(lambdas, reconstructed.str(), p.str());
}

int run_coeff(const std::string& poly_text, const std::string& monomial_text) {
    chern::Polynomial p = chern::parse_polynomial(poly_text);
    chern::Polynomial m = chern::parse_polynomial(monomial_text);
    if (m.term_count() != 1 || !(m.terms().begin()->second == chern::Rational(1)))
        throw chern::InvalidArgument(
            "second argument must be a single monomial with coefficient 1, e.g. x1^2*x2");
    std::cout << p.coefficient(m.terms().begin()->first).str() << "\n";
    return 0;
}

int run_expand(int k, int n, const std::string& expr) {
    chern::GrassmannSpec spec(k, n);
    chern::ParsedExpression parsed = chern::parse_expression(expr);
    if (const chern::Polynomial* p = std::get_if<chern::Polynomial>(&parsed)) {
        check_alphabets(*p, spec);
        std::cout << p->str() << "\n";
    } else {
        std::cout << chern::expand_class(std::get<chern::ClassExpr>(parsed), spec).str()
                  << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact integrals of characteristic classes over Grassmannians G(k,n)"};
    app.require_subcommand(1);

    IntegrateOptions integrate_opt;
    CLI::App* integrate_cmd =
        app.add_subcommand("integrate", "Integrate a characteristic class over G(k,n)");
    integrate_cmd->add_option("-k", integrate_opt.k, "Subspace dimension k")->required();
    integrate_cmd->add_option("-n", integrate_opt.n, "Ambient dimension n")->required();
    integrate_cmd->add_option("expr", integrate_opt.expr, "Class expression")->required();
    integrate_cmd->add_option("--oracle", integrate_opt.oracle_trials,
                              "Cross-check with the localization sum at TRIALS random weights");
    integrate_cmd->add_option("--seed", integrate_opt.seed,
                              "Random seed (default: env SEED, then 12345)");
    integrate_cmd->add_flag("--json", integrate_opt.json, "Emit JSON");

    IdentityOptions identity_opt;
    CLI::App* identity_cmd =
        app.add_subcommand("identity", "Check one of the interpolation identities");
    identity_cmd->require_subcommand(1);

    CLI::App* prop1_cmd = identity_cmd->add_subcommand(
        "prop1", "Divided-difference sum vs. leading coefficient, univariate");
    prop1_cmd->add_option("-n", identity_opt.n, "Number of weights")->required();
    prop1_cmd->add_option("poly", identity_opt.expr, "Univariate polynomial in z")->required();

    CLI::App* power_sum_cmd = identity_cmd->add_subcommand(
        "power_sum", "Weighted power sum vs. complete homogeneous value");
    power_sum_cmd->add_option("-n", identity_opt.n, "Number of weights")->required();
    power_sum_cmd->add_option("-m", identity_opt.m, "Power")->required();

    CLI::App* main_cmd = identity_cmd->add_subcommand(
        "main", "Subset sum vs. coefficient formula, one alphabet");
    main_cmd->add_option("-k", identity_opt.k, "Subset size k")->required();
    main_cmd->add_option("-n", identity_opt.n, "Number of weights")->required();
    main_cmd->add_option("poly", identity_opt.expr, "Symmetric polynomial in x1..xk")
        ->required();

    CLI::App* double_cmd = identity_cmd->add_subcommand(
        "double", "Subset sum vs. coefficient formula, two alphabets");
    double_cmd->add_option("-k", identity_opt.k, "Subset size k")->required();
    double_cmd->add_option("-n", identity_opt.n, "Number of weights")->required();
    double_cmd
        ->add_option("poly", identity_opt.expr,
                     "Doubly symmetric polynomial in x1..xk, y1..y(n-k)")
        ->required();

    CLI::App* chen_louck_cmd = identity_cmd->add_subcommand(
        "chen_louck", "Reconstruct a symmetric polynomial from subset evaluations");
    chen_louck_cmd->add_option("-k", identity_opt.k, "Subset size k")->required();
    chen_louck_cmd->add_option("-n", identity_opt.n, "Number of weights")->required();
    chen_louck_cmd
        ->add_option("poly", identity_opt.expr,
                     "Symmetric polynomial in x1..xk, partial degrees at most n-k")
        ->required();

    for (CLI::App* sub : {prop1_cmd, power_sum_cmd, main_cmd, double_cmd, chen_louck_cmd}) {
        sub->add_option("--lambdas", identity_opt.lambdas,
                        "Comma-separated distinct rational weights (default: sampled)");
        sub->add_option("--seed", identity_opt.seed,
                        "Random seed (default: env SEED, then 12345)");
    }

    std::string coeff_poly, coeff_monomial;
    CLI::App* coeff_cmd =
        app.add_subcommand("coeff", "Coefficient of a monomial in a polynomial");
    coeff_cmd->add_option("poly", coeff_poly, "Polynomial")->required();
    coeff_cmd->add_option("monomial", coeff_monomial, "Monomial, e.g. x1^2*x2")->required();

    int expand_k = 0, expand_n = 0;
    std::string expand_expr;
    CLI::App* expand_cmd = app.add_subcommand(
        "expand", "Expand a class into a polynomial in the Chern roots");
    expand_cmd->add_option("-k", expand_k, "Subspace dimension k")->required();
    expand_cmd->add_option("-n", expand_n, "Ambient dimension n")->required();
    expand_cmd->add_option("expr", expand_expr, "Class expression")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (integrate_cmd->parsed()) return run_integrate(integrate_opt);
        if (prop1_cmd->parsed()) return run_identity_prop1(identity_opt);
        if (power_sum_cmd->parsed()) return run_identity_power_sum(identity_opt);
        if (main_cmd->parsed()) return run_identity_main(identity_opt);
        if (double_cmd->parsed()) return run_identity_double(identity_opt);
        if (chen_louck_cmd->parsed()) return run_identity_chen_louck(identity_opt);
        if (coeff_cmd->parsed()) return run_coeff(coeff_poly, coeff_monomial);
        if (expand_cmd->parsed()) return run_expand(expand_k, expand_n, expand_expr);
    } catch (const chern::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
