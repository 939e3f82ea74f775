#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chern/bundle.hpp"
#include "chern/errors.hpp"
#include "chern/integrate.hpp"
#include "chern/polynomial.hpp"
#include "chern/weights.hpp"

namespace chern {

/// The torus-fixed points of G(k,n) are the coordinate k-planes, one per
/// k-subset I of {1..n}.  This is the equivariant Euler class of the tangent
/// space at that point: prod_{i in I} prod_{j notin I} (lambda_j - lambda_i).
inline Rational euler_class_at(const IndexSubset& I, const WeightVector& lambdas) {
    if (static_cast<std::size_t>(I.ambient()) != lambdas.size())
        throw InvalidArgument("subset ambient size " + std::to_string(I.ambient()) +
                              " does not match the " + std::to_string(lambdas.size()) +
                              " weights");
    Rational e(1);
    for (int i : I.members())
        for (int j : I.complement()) e *= lambdas[j - 1] - lambdas[i - 1];
    return e;
}

/// Value of an expanded class at the fixed point I: the x roots specialize
/// to lambda_I and the y roots to the complementary weights, both in
/// increasing index order.  Well defined for doubly symmetric integrands,
/// where the order within each alphabet cannot matter.
inline Rational restrict_class(const Polynomial& expanded, const IndexSubset& I,
                               const WeightVector& lambdas, const GrassmannSpec& spec) {
    if (static_cast<int>(I.size()) != spec.k)
        throw InvalidArgument("fixed point subset must have size k = " +
                              std::to_string(spec.k));
    if (I.ambient() != spec.n || lambdas.size() != static_cast<std::size_t>(spec.n))
        throw InvalidArgument("fixed point data must match G(k,n) with n = " +
                              std::to_string(spec.n));
    std::map<VarId, Rational> point;
    const std::vector<int>& members = I.members();
    for (std::size_t t = 0; t < members.size(); ++t)
        point.emplace(VarId::x(static_cast<std::uint32_t>(t + 1)), lambdas[members[t] - 1]);
    std::vector<int> comp = I.complement();
    for (std::size_t t = 0; t < comp.size(); ++t)
        point.emplace(VarId::y(static_cast<std::uint32_t>(t + 1)), lambdas[comp[t] - 1]);
    return expanded.evaluate(point);
}

inline Rational restrict_class(const ClassExpr& c, const IndexSubset& I,
                               const WeightVector& lambdas, const GrassmannSpec& spec) {
    return restrict_class(expand_class(c, spec), I, lambdas, spec);
}

/// Localization route for the same integrals: sum over the fixed points of
/// restriction divided by the equivariant Euler class.  Independent of the
/// weights, and an independent cross-check of the coefficient-extraction
/// route in integrate().
inline Rational abbv_integrate(const Polynomial& p, const GrassmannSpec& spec,
                               const WeightVector& lambdas) {
    if (lambdas.size() != static_cast<std::size_t>(spec.n))
        throw InvalidArgument("need exactly n = " + std::to_string(spec.n) + " weights");
    detail::validate_integrand(p, spec);
    Rational sum(0);
    for (const IndexSubset& I : all_k_subsets(spec.n, spec.k))
        sum += restrict_class(p, I, lambdas, spec) / euler_class_at(I, lambdas);
    return sum;
}

inline Rational abbv_integrate(const ClassExpr& c, const GrassmannSpec& spec,
                               const WeightVector& lambdas) {
    return abbv_integrate(expand_class(c, spec), spec, lambdas);
}

/// Thrown when the localization sum changes between two weight choices,
/// which would mean the value is not the constant it must be.  Carries both
/// offending weight vectors and values for diagnosis.
class NotConstant : public Error {
public:
    NotConstant(WeightVector first, Rational first_value, WeightVector second,
                Rational second_value)
        : Error("localization sum is not constant: value " + first_value.str() + " at " +
                first.str() + " but " + second_value.str() + " at " + second.str()),
          first_(std::move(first)),
          second_(std::move(second)),
          first_value_(std::move(first_value)),
          second_value_(std::move(second_value)) {}

    const WeightVector& first_weights() const { return first_; }
    const WeightVector& second_weights() const { return second_; }
    const Rational& first_value() const { return first_value_; }
    const Rational& second_value() const { return second_value_; }

private:
    WeightVector first_;
    WeightVector second_;
    Rational first_value_;
    Rational second_value_;
};

/// Result of a successful independence check.
struct CertifyReport {
    Rational value;
    int trials = 0;
};

namespace detail {

/// Evaluates fn at `trials` freshly sampled weight vectors and insists the
/// results all agree.  Generic so the disagreement path stays testable.
template <class Fn>
CertifyReport certify_with(Fn&& fn, int n, int trials, std::uint64_t seed) {
    if (trials < 2)
        throw InvalidArgument("certification needs at least 2 trials");
    std::mt19937_64 rng(seed);
    WeightVector first = sample_weights(static_cast<std::size_t>(n), rng);
    Rational value = fn(first);
    for (int t = 1; t < trials; ++t) {
        WeightVector next = sample_weights(static_cast<std::size_t>(n), rng);
        Rational v = fn(next);
        if (v != value) throw NotConstant(first, value, next, v);
    }
    return CertifyReport{value, trials};
}

}  // namespace detail

/// Runs the localization sum at several independently sampled weight vectors
/// and reports the common value.  The degree gate runs once, before any
/// sampling, so an over-degree integrand fails fast.
inline CertifyReport certify_constant(const Polynomial& p, const GrassmannSpec& spec,
                                      int trials, std::uint64_t seed) {
    detail::validate_integrand(p, spec);
    return detail::certify_with(
        [&](const WeightVector& lambdas) { return abbv_integrate(p, spec, lambdas); },
        spec.n, trials, seed);
}

inline CertifyReport certify_constant(const ClassExpr& c, const GrassmannSpec& spec,
                                      int trials, std::uint64_t seed) {
    return certify_constant(expand_class(c, spec), spec, trials, seed);
}

}  // namespace chern
