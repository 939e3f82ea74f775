// Acceptance gate: one pass/fail line per criterion, all checks exact.
// Usage: acceptance_tests <path-to-cli>

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chern/chern.hpp"
#include "test_util.hpp"

using namespace chern;

namespace {

using Failure = std::optional<std::string>;

Polynomial truncate_to_degree(const Polynomial& p, long long bound) {
    Polynomial kept;
    for (const auto& [d, part] : p.homogeneous_components())
        if (d <= bound) kept += part;
    return kept;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> box;
    std::vector<unsigned> parts(static_cast<std::size_t>(rows), 0);
    while (true) {
        std::vector<unsigned> trimmed;
        for (unsigned p : parts)
            if (p > 0) trimmed.push_back(p);
        std::sort(trimmed.rbegin(), trimmed.rend());
        Partition candidate(trimmed);
        bool seen = false;
        for (const Partition& b : box) seen = seen || b == candidate;
        if (!seen) box.push_back(candidate);
        std::size_t at = 0;
        while (at < parts.size() && parts[at] == static_cast<unsigned>(cols)) {
            parts[at] = 0;
            ++at;
        }
        if (at == parts.size()) break;
        ++parts[at];
    }
    return box;
}

// 1. Power sum identity for n <= 6, 0 <= m <= 2n, 10 random weight vectors
//    each; divided difference equals the z^{n-1} coefficient for random
//    univariate polynomials up to n = 8.
Failure criterion1() {
    std::mt19937_64 rng(101);
    for (int n = 2; n <= 6; ++n) {
        for (long m = 0; m <= 2 * n; ++m) {
            for (int t = 0; t < 10; ++t) {
                WeightVector lam = sample_weights(static_cast<std::size_t>(n), rng);
                IdentitySides sides = power_sum_identity(m, lam);
                if (sides.lhs != sides.rhs)
                    return "power sum sides differ at n=" + std::to_string(n) +
                           ", m=" + std::to_string(m) + ", lambda=" + lam.str();
            }
        }
    }
    for (int n = 1; n <= 8; ++n) {
        for (int t = 0; t < 10; ++t) {
            WeightVector lam = sample_weights(static_cast<std::size_t>(n), rng);
            Polynomial p;
            for (int d = 0; d <= n - 1; ++d)
                p += Polynomial(testutil::random_rational(rng)) *
                     Polynomial::variable(VarId::z()).pow(static_cast<std::uint64_t>(d));
            Rational top =
                p.coefficient(Monomial::var(VarId::z(), static_cast<std::uint32_t>(n - 1)));
            if (divided_difference(p, lam) != top)
                return "divided difference mismatch at n=" + std::to_string(n) +
                       ", p=" + p.str();
        }
    }
    return std::nullopt;
}

// 2. Subset-sum and coefficient formulas agree, and the subset sums are
//    independent of the weights, across 10 random weight vectors for each of
//    the six shapes, on random Schur-combination integrands (one and two
//    alphabets).
Failure criterion2() {
    std::mt19937_64 rng(102);
    const std::pair<int, int> shapes[] = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 5}};
    for (auto [k, n] : shapes) {
        long long dim = static_cast<long long>(k) * (n - k);
        for (int rep = 0; rep < 2; ++rep) {
            Polynomial p = truncate_to_degree(
                testutil::random_schur_combination(rng, k, n - k, 3), dim);
            Rational rhs = symmetric_coefficient_formula(p, k, n);
            for (int t = 0; t < 10; ++t) {
                WeightVector lam = sample_weights(static_cast<std::size_t>(n), rng);
                if (symmetric_interpolation_sum(p, k, lam) != rhs)
                    return "one-alphabet subset sum differs from the formula at k=" +
                           std::to_string(k) + ", n=" + std::to_string(n) +
                           ", lambda=" + lam.str();
            }
            Polynomial q = truncate_to_degree(
                testutil::random_double_schur_combination(rng, k, n - k, 2, 3), dim);
            Rational rhs2 = double_coefficient_formula(q, k, n);
            for (int t = 0; t < 10; ++t) {
                WeightVector lam = sample_weights(static_cast<std::size_t>(n), rng);
                if (double_interpolation_sum(q, k, lam) != rhs2)
                    return "two-alphabet subset sum differs from the formula at k=" +
                           std::to_string(k) + ", n=" + std::to_string(n) +
                           ", lambda=" + lam.str();
            }
        }
    }
    return std::nullopt;
}

// 3. The coefficient of x1^{k-1}..xk^{k-1} in prod_{i != j}(x_i - x_j) is k!
//    for k = 1..5.
Failure criterion3() {
    for (int k = 1; k <= 5; ++k) {
        std::vector<VarId> xs = x_alphabet(static_cast<std::uint32_t>(k));
        Rational c = coefficient_of_product(
            {vandermonde_double(xs)},
            detail::staircase(xs, static_cast<std::uint32_t>(k - 1)));
        if (c != factorial(static_cast<unsigned long>(k)))
            return "staircase coefficient is " + c.str() + " for k = " + std::to_string(k);
    }
    return std::nullopt;
}

// 4. Classical constants by both evaluation routes, which must agree exactly;
//    the whole criterion must finish in under 10 seconds.
Failure criterion4() {
    auto begin = std::chrono::steady_clock::now();

    auto both_routes = [](const ClassExpr& c, int k, int n,
                          const Rational& expected) -> Failure {
        GrassmannSpec spec(k, n);
        Rational direct = integrate(c, spec);
        if (direct != expected)
            return "coefficient route gives " + direct.str() + ", expected " +
                   expected.str() + " on G(" + std::to_string(k) + "," + std::to_string(n) +
                   ")";
        CertifyReport oracle = certify_constant(c, spec, 3, 4242);
        if (oracle.value != expected)
            return "localization route gives " + oracle.value.str() + ", expected " +
                   expected.str() + " on G(" + std::to_string(k) + "," + std::to_string(n) +
                   ")";
        return std::nullopt;
    };

    ClassExpr c1q = ClassExpr::chern(1, BundleExpr::Q());
    if (Failure f = both_routes(c1q, 1, 2, Rational(1))) return f;
    if (Failure f = both_routes(ClassExpr::power(c1q, 4), 2, 4, Rational(2))) return f;
    if (Failure f = both_routes(ClassExpr::power(c1q, 6), 2, 5, Rational(5))) return f;
    if (Failure f = both_routes(
            ClassExpr::euler(BundleExpr::sym(3, BundleExpr::dual(BundleExpr::S()))), 2, 4,
            Rational(27)))
        return f;
    if (Failure f = both_routes(
            ClassExpr::euler(BundleExpr::sym(5, BundleExpr::dual(BundleExpr::S()))), 2, 5,
            Rational(2875)))
        return f;
    const std::pair<int, int> chi_shapes[] = {{1, 2}, {1, 3}, {2, 4}, {2, 5}};
    for (auto [k, n] : chi_shapes) {
        ClassExpr tangent = ClassExpr::euler(
            BundleExpr::tensor(BundleExpr::Q(), BundleExpr::dual(BundleExpr::S())));
        Rational expected(static_cast<long>(detail::binomial(
            static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k))));
        if (Failure f = both_routes(tangent, k, n, expected)) return f;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - begin)
                       .count();
    if (elapsed >= 10000)
        return "took " + std::to_string(elapsed) + " ms, bound is 10 seconds";
    return std::nullopt;
}

// 5. Schubert duality: s_lambda(Q) pairs to 1 against its box complement and
//    to 0 against every other partition of complementary degree, over the
//    full boxes of G(2,4) and G(2,5).
Failure criterion5() {
    const std::pair<int, int> shapes[] = {{2, 4}, {2, 5}};
    for (auto [k, n] : shapes) {
        GrassmannSpec spec(k, n);
        // For s-classes of Q the admissible partitions live in the box with
        // n-k rows and k columns.
        int rows = n - k, cols = k;
        std::vector<Partition> box = partitions_in_box(rows, cols);
        for (const Partition& lam : box) {
            Partition dual = lam.complement_in_box(rows, cols);
            for (const Partition& mu : box) {
                if (lam.weight() + mu.weight() != static_cast<unsigned long>(spec.dimension()))
                    continue;
                Rational value = integrate(
                    ClassExpr::schur_class(lam, BundleExpr::Q()) *
                        ClassExpr::schur_class(mu, BundleExpr::Q()),
                    spec);
                Rational expected = (mu == dual) ? Rational(1) : Rational(0);
                if (value != expected)
                    return "pairing of " + lam.str() + " and " + mu.str() + " on G(" +
                           std::to_string(k) + "," + std::to_string(n) + ") is " +
                           value.str() + ", expected " + expected.str();
            }
        }
    }
    return std::nullopt;
}

// 6. Interpolation from subset evaluations reconstructs random symmetric
//    polynomials exactly, term map against term map.
Failure criterion6() {
    std::mt19937_64 rng(106);
    const std::pair<int, int> shapes[] = {{2, 4}, {2, 5}, {3, 6}};
    for (auto [k, n] : shapes) {
        for (int rep = 0; rep < 5; ++rep) {
            Polynomial p = testutil::random_schur_combination(rng, k, n - k, 3);
            WeightVector lam = sample_weights(static_cast<std::size_t>(n), rng);
            Polynomial back = chen_louck_interpolate(p, k, lam);
            if (!(back == p))
                return "reconstruction differs at k=" + std::to_string(k) +
                       ", n=" + std::to_string(n) + ": got " + back.str() + ", expected " +
                       p.str();
        }
    }
    return std::nullopt;
}

// 7. Over-degree integrands and asymmetric polynomials are rejected with the
//    designated error types, and the CLI turns that family into exit code 2.
Failure criterion7() {
    GrassmannSpec spec(2, 4);
    Polynomial c1 = expand_class(ClassExpr::chern(1, BundleExpr::Q()), spec);
    bool threw = false;
    try {
        integrate(c1.pow(static_cast<std::uint64_t>(spec.dimension() + 1)), spec);
    } catch (const DegreeExceedsDimension&) {
        threw = true;
    }
    if (!threw) return "degree k(n-k)+1 integrand was not rejected";

    threw = false;
    try {
        integrate(Polynomial::variable(VarId::x(1)), spec);
    } catch (const NotDoublySymmetric&) {
        threw = true;
    }
    if (!threw) return "asymmetric integrand was not rejected";

    threw = false;
    try {
        WeightVector lam({Rational(0), Rational(1), Rational(2)});
        symmetric_interpolation_sum(Polynomial::variable(VarId::x(1)), 2, lam);
    } catch (const NotSymmetric&) {
        threw = true;
    }
    if (!threw) return "asymmetric subset-sum input was not rejected";

    testutil::RunResult over =
        testutil::run_cli({"integrate", "-k", "1", "-n", "2", "c(1,Q)^2"});
    if (over.exit_code != 2)
        return "CLI exit code for an over-degree integrand is " +
               std::to_string(over.exit_code) + ", expected 2";
    testutil::RunResult asym = testutil::run_cli(
        {"identity", "main", "-k", "2", "-n", "3", "x1", "--lambdas", "0,1,2"});
    if (asym.exit_code != 2)
        return "CLI exit code for an asymmetric polynomial is " +
               std::to_string(asym.exit_code) + ", expected 2";
    return std::nullopt;
}

// 8. The full CLI example set is byte-identical across repeated runs under a
//    fixed seed, including outputs of the error paths.
Failure criterion8() {
    const std::vector<std::vector<std::string>> example_set = {
        {"integrate", "-k", "1", "-n", "2", "c(1,Q)", "--json"},
        {"integrate", "-k", "2", "-n", "4", "euler(sym(3,dual(S)))", "--oracle", "3",
         "--seed", "7", "--json"},
        {"integrate", "-k", "2", "-n", "5", "euler(sym(5,dual(S)))"},
        {"integrate", "-k", "2", "-n", "5", "c(1,Q)^6", "--oracle", "2", "--seed", "9"},
        {"integrate", "-k", "2", "-n", "4", "(y1+y2)^4"},
        {"identity", "prop1", "-n", "4", "z^3 - 2*z", "--seed", "11"},
        {"identity", "power_sum", "-n", "5", "-m", "7", "--seed", "11"},
        {"identity", "main", "-k", "2", "-n", "4", "x1*x2 + x1 + x2", "--seed", "11"},
        {"identity", "double", "-k", "2", "-n", "4", "(x1+x2)*(y1+y2)", "--seed", "11"},
        {"identity", "chen_louck", "-k", "2", "-n", "5", "x1^2*x2^2", "--seed", "11"},
        {"coeff", "(x1+x2)^3", "x1^2*x2"},
        {"expand", "-k", "2", "-n", "5", "schur([2,1],Q)"},
        {"integrate", "-k", "1", "-n", "2", "c(1,Q)^2"},
        {"bogus"},
    };
    auto run_all = [&example_set]() {
        std::ostringstream transcript;
        for (const std::vector<std::string>& args : example_set) {
            testutil::RunResult r = testutil::run_cli(args);
            transcript << "exit=" << r.exit_code << "\n--- stdout\n" << r.out
                       << "--- stderr\n" << r.err << "---\n";
        }
        return transcript.str();
    };
    std::string first = run_all();
    std::string second = run_all();
    if (first != second) return "two runs of the example set differ";
    if (first.find("VERDICT: unequal") != std::string::npos)
        return "an identity check in the example set reported unequal sides";
    if (first.find("27") == std::string::npos || first.find("2875") == std::string::npos)
        return "expected classical values are missing from the transcript";
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) testutil::cli_path_storage() = argv[1];
    if (testutil::cli_path().empty()) {
        std::cerr << "usage: acceptance_tests <path-to-cli>\n";
        return 2;
    }

    struct Entry {
        const char* label;
        std::function<Failure()> run;
    };
    const Entry criteria[] = {
        {"1. interpolation identity suite (power sums, divided differences)", criterion1},
        {"2. subset sums equal coefficient formulas, weight-independent", criterion2},
        {"3. staircase coefficient of the double Vandermonde product is k!", criterion3},
        {"4. classical integrals by both routes, under 10 seconds", criterion4},
        {"5. Schubert duality pairing over the full boxes", criterion5},
        {"6. exact reconstruction from subset evaluations", criterion6},
        {"7. precondition rejection, library errors and CLI exit 2", criterion7},
        {"8. byte-identical CLI runs under a fixed seed", criterion8},
    };

    int failures = 0;
    for (const Entry& entry : criteria) {
        Failure failure;
        try {
            failure = entry.run();
        } catch (const std::exception& e) {
            failure = std::string("unexpected exception: ") + e.what();
        }
        if (failure) {
            ++failures;
            std::cout << "[FAIL] " << entry.label << ": " << *failure << "\n";
        } else {
            std::cout << "[PASS] " << entry.label << "\n";
        }
    }
    return failures == 0 ? 0 : 1;
}
