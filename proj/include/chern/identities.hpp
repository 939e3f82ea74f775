#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chern/errors.hpp"
#include "chern/polynomial.hpp"
#include "chern/rational.hpp"
#include "chern/symmetric.hpp"
#include "chern/weights.hpp"

namespace chern {

namespace detail {

inline void check_vars_within(const Polynomial& p, const std::vector<VarId>& allowed,
                              const std::string& what) {
    std::set<VarId> ok(allowed.begin(), allowed.end());
    for (VarId v : p.variables())
        if (!ok.contains(v))
            throw InvalidArgument("polynomial mentions " + v.name() + "; expected only " +
                                  what);
}

/// prod_{i in I} prod_{j notin I} (lambda_i - lambda_j).
inline Rational subset_denominator(const IndexSubset& I, const WeightVector& lambdas) {
    Rational d(1);
    for (int i : I.members())
        for (int j : I.complement()) d *= lambdas[i - 1] - lambdas[j - 1];
    return d;
}

/// Monomial v^e for every v in vars.
inline Monomial staircase(const std::vector<VarId>& vars, std::uint32_t e) {
    std::vector<Monomial::Entry> entries;
    entries.reserve(vars.size());
    for (VarId v : vars) entries.push_back({v, e});
    return Monomial(std::move(entries));
}

inline void require_symmetric(const Polynomial& p, const std::vector<VarId>& vars) {
    for (std::size_t t = 0; t + 1 < vars.size(); ++t)
        if (swap_variables(p, vars[t], vars[t + 1]) != p)
            throw NotSymmetric("polynomial is not symmetric: swapping " + vars[t].name() +
                               " and " + vars[t + 1].name() + " changes it");
}

inline void check_total_degree(const Polynomial& p, long long bound, const std::string& why) {
    DegreeInfo info = p.degree_info();
    if (info.total && *info.total > bound)
        throw DegreeTooHigh("total degree " + std::to_string(*info.total) + " exceeds " +
                            why + " = " + std::to_string(bound));
}

}  // namespace detail

/// Lagrange basis polynomial through the given nodes: the unique polynomial
/// of degree n-1 in z that is 1 at lambda_i and 0 at every other lambda_j.
/// i is 1-based.
inline Polynomial lagrange_basis(int i, const WeightVector& lambdas) {
    int n = static_cast<int>(lambdas.size());
    if (i < 1 || i > n)
        throw IndexOutOfRange("basis index " + std::to_string(i) + " outside 1.." +
                              std::to_string(n));
    Polynomial numerator(1);
    Rational denominator(1);
    Polynomial z = Polynomial::variable(VarId::z());
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        numerator *= z - Polynomial(lambdas[j - 1]);
        denominator *= lambdas[i - 1] - lambdas[j - 1];
    }
    return numerator * Polynomial(Rational(1) / denominator);
}

/// The interpolating polynomial in z taking values[i] at lambdas[i].
inline Polynomial lagrange_interpolate(const std::vector<Rational>& values,
                                       const WeightVector& lambdas) {
    if (values.size() != lambdas.size())
        throw InvalidArgument("need exactly one value per interpolation node");
    Polynomial p;
    for (std::size_t i = 0; i < values.size(); ++i)
        p += Polynomial(values[i]) * lagrange_basis(static_cast<int>(i + 1), lambdas);
    return p;
}

/// The (n-1)-st divided difference of a univariate polynomial over the nodes
/// lambda: sum_i p(lambda_i) / prod_{j != i} (lambda_i - lambda_j).  For
/// deg p <= n-1 this equals the coefficient of z^{n-1} in p, which is the
/// univariate seed of all the subset-sum identities below.
inline Rational divided_difference(const Polynomial& p, const WeightVector& lambdas) {
    if (p.variables().size() > 1)
        throw InvalidArgument("divided difference expects a univariate polynomial");
    long long n = static_cast<long long>(lambdas.size());
    DegreeInfo info = p.degree_info();
    if (info.total && *info.total > n - 1)
        throw DegreeTooHigh("degree " + std::to_string(*info.total) +
                            " exceeds n-1 = " + std::to_string(n - 1));
    std::set<VarId> vars = p.variables();
    Rational sum(0);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        std::map<VarId, Rational> point;
        if (!vars.empty()) point.emplace(*vars.begin(), lambdas[i]);
        Rational denom(1);
        for (std::size_t j = 0; j < lambdas.size(); ++j)
            if (j != i) denom *= lambdas[i] - lambdas[j];
        sum += p.evaluate(point) / denom;
    }
    return sum;
}

/// Both sides of the weighted power sum identity: lhs is
/// sum_i lambda_i^m / prod_{j != i}(lambda_i - lambda_j), rhs is the
/// complete homogeneous value h_{m-n+1}(lambda).  The two agree for every
/// admissible input; returning the pair keeps the check honest.
struct IdentitySides {
    Rational lhs;
    Rational rhs;
};

inline IdentitySides power_sum_identity(long m, const WeightVector& lambdas) {
    if (m < 0) throw InvalidArgument("power sum exponent must be nonnegative");
    std::size_t n = lambdas.size();
    if (n < 2) throw InvalidArgument("power sum identity needs at least two weights");
    Rational lhs(0);
    for (std::size_t i = 0; i < n; ++i) {
        Rational denom(1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) denom *= lambdas[i] - lambdas[j];
        lhs += lambdas[i].pow(static_cast<std::uint64_t>(m)) / denom;
    }
    std::vector<VarId> zs = z_alphabet(static_cast<std::uint32_t>(n));
    Polynomial h = complete_homogeneous(m - static_cast<long>(n) + 1, zs);
    std::map<VarId, Rational> point;
    for (std::size_t i = 0; i < n; ++i) point.emplace(zs[i], lambdas[i]);
    return {lhs, h.evaluate(point)};
}

/// Subset sum sum_{|I|=k} p(lambda_I) / prod_{i in I, j notin I}
/// (lambda_i - lambda_j) for p symmetric in x1..xk with total degree at most
/// k(n-k).  Independent of the choice of weights; see
/// symmetric_coefficient_formula for the closed form it equals.
inline Rational symmetric_interpolation_sum(const Polynomial& p, int k,
                                            const WeightVector& lambdas) {
    int n = static_cast<int>(lambdas.size());
    if (k < 1 || k >= n)
        throw InvalidArgument("need 1 <= k < n; got k = " + std::to_string(k) +
                              ", n = " + std::to_string(n));
    std::vector<VarId> xs = x_alphabet(static_cast<std::uint32_t>(k));
    detail::check_vars_within(p, xs, "x1..x" + std::to_string(k));
    detail::require_symmetric(p, xs);
    detail::check_total_degree(p, static_cast<long long>(k) * (n - k), "k(n-k)");
    Rational sum(0);
    for (const IndexSubset& I : all_k_subsets(n, k)) {
        std::map<VarId, Rational> point;
        for (std::size_t t = 0; t < I.size(); ++t)
            point.emplace(xs[t], lambdas[I.members()[t] - 1]);
        sum += p.evaluate(point) / detail::subset_denominator(I, lambdas);
    }
    return sum;
}

/// Closed form of the subset sum above: the coefficient of
/// x1^{n-1}...xk^{n-1} in p * prod_{i != j}(x_i - x_j), divided by k!.
inline Rational symmetric_coefficient_formula(const Polynomial& p, int k, int n) {
    if (k < 1 || k >= n)
        throw InvalidArgument("need 1 <= k < n; got k = " + std::to_string(k) +
                              ", n = " + std::to_string(n));
    std::vector<VarId> xs = x_alphabet(static_cast<std::uint32_t>(k));
    detail::check_vars_within(p, xs, "x1..x" + std::to_string(k));
    detail::require_symmetric(p, xs);
    detail::check_total_degree(p, static_cast<long long>(k) * (n - k), "k(n-k)");
    Rational c = coefficient_of_product(
        {p, vandermonde_double(xs)},
        detail::staircase(xs, static_cast<std::uint32_t>(n - 1)));
    return c / factorial(static_cast<unsigned long>(k));
}

/// Two-alphabet subset sum: p lives in x1..xk and y1..y{n-k}, is symmetric
/// within each alphabet, and is evaluated with the x's at lambda_I and the
/// y's at the complementary weights.
inline Rational double_interpolation_sum(const Polynomial& p, int k,
                                         const WeightVector& lambdas) {
    int n = static_cast<int>(lambdas.size());
    if (k < 1 || k >= n)
        throw InvalidArgument("need 1 <= k < n; got k = " + std::to_string(k) +
                              ", n = " + std::to_string(n));
    std::vector<VarId> xs = x_alphabet(static_cast<std::uint32_t>(k));
    std::vector<VarId> ys = y_alphabet(static_cast<std::uint32_t>(n - k));
    std::vector<VarId> all(xs);
    all.insert(all.end(), ys.begin(), ys.end());
    detail::check_vars_within(p, all, "x1..x" + std::to_string(k) + " and y1..y" +
                                          std::to_string(n - k));
    if (!is_doubly_symmetric(p, xs, ys))
        throw NotDoublySymmetric(
            "polynomial is not symmetric within each of the x and y alphabets");
    detail::check_total_degree(p, static_cast<long long>(k) * (n - k), "k(n-k)");
    Rational sum(0);
    for (const IndexSubset& I : all_k_subsets(n, k)) {
        std::map<VarId, Rational> point;
        for (std::size_t t = 0; t < I.size(); ++t)
            point.emplace(xs[t], lambdas[I.members()[t] - 1]);
        std::vector<int> comp = I.complement();
        for (std::size_t t = 0; t < comp.size(); ++t)
            point.emplace(ys[t], lambdas[comp[t] - 1]);
        sum += p.evaluate(point) / detail::subset_denominator(I, lambdas);
    }
    return sum;
}

/// Closed form of the two-alphabet subset sum: the coefficient of the full
/// staircase x1^{n-1}..y{n-k}^{n-1} in
/// p * prod_{i!=j}(x_i-x_j) * prod_{i!=j}(y_i-y_j) * prod_{i,j}(y_i-x_j),
/// divided by k!(n-k)!.
inline Rational double_coefficient_formula(const Polynomial& p, int k, int n) {
    if (k < 1 || k >= n)
        throw InvalidArgument("need 1 <= k < n; got k = " + std::to_string(k) +
                              ", n = " + std::to_string(n));
    std::vector<VarId> xs = x_alphabet(static_cast<std::uint32_t>(k));
    std::vector<VarId> ys = y_alphabet(static_cast<std::uint32_t>(n - k));
    std::vector<VarId> all(xs);
    all.insert(all.end(), ys.begin(), ys.end());
    detail::check_vars_within(p, all, "x1..x" + std::to_string(k) + " and y1..y" +
                                          std::to_string(n - k));
    if (!is_doubly_symmetric(p, xs, ys))
        throw NotDoublySymmetric(
            "polynomial is not symmetric within each of the x and y alphabets");
    detail::check_total_degree(p, static_cast<long long>(k) * (n - k), "k(n-k)");
    Rational d = coefficient_of_product(
        {p, vandermonde_double(xs), vandermonde_double(ys), cross_difference(ys, xs)},
        detail::staircase(all, static_cast<std::uint32_t>(n - 1)));
    return d / (factorial(static_cast<unsigned long>(k)) *
                factorial(static_cast<unsigned long>(n - k)));
}

/// Reconstructs a symmetric polynomial with partial degrees at most n-k from
/// its values at the k-subsets of the weights:
///   p(x) = sum_{|I|=k} p(lambda_I)
///          * prod_i prod_{j notin I} (x_i - lambda_j) / denominator(I).
/// This is the multivariate interpolation formula of Chen and Louck.
inline Polynomial chen_louck_interpolate(const Polynomial& p, int k,
                                         const WeightVector& lambdas) {
    int n = static_cast<int>(lambdas.size());
    if (k < 1 || k >= n)
        throw InvalidArgument("need 1 <= k < n; got k = " + std::to_string(k) +
                              ", n = " + std::to_string(n));
    std::vector<VarId> xs = x_alphabet(static_cast<std::uint32_t>(k));
    detail::check_vars_within(p, xs, "x1..x" + std::to_string(k));
    detail::require_symmetric(p, xs);
    DegreeInfo info = p.degree_info();
    for (const auto& [v, d] : info.partial)
        if (d > n - k)
            throw PartialDegreeTooHigh("partial degree " + std::to_string(d) + " of " +
                                       v.name() + " exceeds n-k = " + std::to_string(n - k));
    Polynomial result;
    for (const IndexSubset& I : all_k_subsets(n, k)) {
        std::map<VarId, Rational> point;
        for (std::size_t t = 0; t < I.size(); ++t)
            point.emplace(xs[t], lambdas[I.members()[t] - 1]);
        Rational scale = p.evaluate(point) / detail::subset_denominator(I, lambdas);
        if (scale.is_zero()) continue;
        Polynomial basis(1);
        for (VarId x : xs)
            for (int j : I.complement())
                basis *= Polynomial::variable(x) - Polynomial(lambdas[j - 1]);
        result += basis * Polynomial(scale);
    }
    return result;
}

}  // namespace chern
