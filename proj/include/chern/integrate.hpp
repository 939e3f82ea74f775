#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chern/bundle.hpp"
#include "chern/errors.hpp"
#include "chern/identities.hpp"
#include "chern/polynomial.hpp"
#include "chern/symmetric.hpp"

namespace chern {

namespace detail {

/// Appends the sums of every size-m multiset (nondecreasing index tuples) of
/// roots, in lexicographic tuple order.
inline void multiset_sums(const std::vector<Polynomial>& roots, std::uint32_t m,
                          std::size_t from, const Polynomial& partial,
                          std::vector<Polynomial>& out) {
    if (m == 0) {
        out.push_back(partial);
        return;
    }
    for (std::size_t i = from; i < roots.size(); ++i)
        multiset_sums(roots, m - 1, i, partial + roots[i], out);
}

/// Appends the sums of every size-m subset (strictly increasing index
/// tuples) of roots, in lexicographic tuple order.
inline void subset_sums(const std::vector<Polynomial>& roots, std::uint32_t m,
                        std::size_t from, const Polynomial& partial,
                        std::vector<Polynomial>& out) {
    if (m == 0) {
        out.push_back(partial);
        return;
    }
    for (std::size_t i = from; i + (m - 1) < roots.size(); ++i)
        subset_sums(roots, m - 1, i + 1, partial + roots[i], out);
}

}  // namespace detail

/// Chern roots of a bundle expression under the splitting principle: linear
/// forms in the x and y variables whose elementary symmetric functions are
/// the Chern classes of the bundle.
inline std::vector<Polynomial> roots_of(const BundleExpr& b, const GrassmannSpec& spec) {
    switch (b.kind()) {
        case BundleExpr::Kind::Sub: {
            std::vector<Polynomial> roots;
            for (VarId v : x_alphabet(static_cast<std::uint32_t>(spec.k)))
                roots.push_back(Polynomial::variable(v));
            return roots;
        }
        case BundleExpr::Kind::Quot: {
            std::vector<Polynomial> roots;
            for (VarId v : y_alphabet(static_cast<std::uint32_t>(spec.n - spec.k)))
                roots.push_back(Polynomial::variable(v));
            return roots;
        }
        case BundleExpr::Kind::Dual: {
            std::vector<Polynomial> roots = roots_of(b.left(), spec);
            for (Polynomial& r : roots) r = -r;
            return roots;
        }
        case BundleExpr::Kind::Sym: {
            std::vector<Polynomial> inner = roots_of(b.left(), spec);
            std::vector<Polynomial> roots;
            detail::multiset_sums(inner, b.multiplicity(), 0, Polynomial(), roots);
            return roots;
        }
        case BundleExpr::Kind::Tensor: {
            std::vector<Polynomial> left = roots_of(b.left(), spec);
            std::vector<Polynomial> right = roots_of(b.right(), spec);
            std::vector<Polynomial> roots;
            roots.reserve(left.size() * right.size());
            for (const Polynomial& a : left)
                for (const Polynomial& c : right) roots.push_back(a + c);
            return roots;
        }
        case BundleExpr::Kind::Wedge: {
            std::vector<Polynomial> inner = roots_of(b.left(), spec);
            std::vector<Polynomial> roots;
            detail::subset_sums(inner, b.multiplicity(), 0, Polynomial(), roots);
            return roots;
        }
    }
    throw InvalidArgument("unknown bundle expression");
}

/// Expands a characteristic class into a polynomial in the Chern roots
/// x1..xk, y1..y{n-k}.  Chern classes become elementary symmetric functions
/// of the roots, the Euler class their product, Schur classes the
/// corresponding Schur polynomial.
inline Polynomial expand_class(const ClassExpr& c, const GrassmannSpec& spec) {
    switch (c.kind()) {
        case ClassExpr::Kind::Constant: return Polynomial(c.value());
        case ClassExpr::Kind::Chern: return elementary(c.index(), roots_of(c.bundle(), spec));
        case ClassExpr::Kind::Euler: {
            Polynomial product(1);
            for (const Polynomial& r : roots_of(c.bundle(), spec)) product *= r;
            return product;
        }
        case ClassExpr::Kind::Schur:
            return schur(c.partition(), roots_of(c.bundle(), spec));
        case ClassExpr::Kind::Sum:
            return expand_class(c.left(), spec) + expand_class(c.right(), spec);
        case ClassExpr::Kind::Product:
            return expand_class(c.left(), spec) * expand_class(c.right(), spec);
        case ClassExpr::Kind::Power:
            return expand_class(c.left(), spec).pow(c.exponent());
    }
    throw InvalidArgument("unknown class expression");
}

namespace detail {

/// Shared validation for every integration route: the integrand must live in
/// the x/y alphabets of the Grassmannian, be symmetric within each alphabet,
/// and have no homogeneous component above the dimension k(n-k).
inline void validate_integrand(const Polynomial& p, const GrassmannSpec& spec) {
    std::vector<VarId> xs = x_alphabet(static_cast<std::uint32_t>(spec.k));
    std::vector<VarId> ys = y_alphabet(static_cast<std::uint32_t>(spec.n - spec.k));
    std::vector<VarId> all(xs);
    all.insert(all.end(), ys.begin(), ys.end());
    check_vars_within(p, all, "x1..x" + std::to_string(spec.k) + " and y1..y" +
                                  std::to_string(spec.n - spec.k));
    if (!is_doubly_symmetric(p, xs, ys))
        throw NotDoublySymmetric(
            "integrand is not symmetric within each of the x and y alphabets");
    for (const auto& [degree, component] : p.homogeneous_components())
        if (degree > spec.dimension())
            throw DegreeExceedsDimension(
                "integrand component of degree " + std::to_string(degree) +
                " exceeds the dimension k(n-k) = " + std::to_string(spec.dimension()));
}

}  // namespace detail

/// Integral over G(k,n) of a class written as a doubly symmetric polynomial
/// in the Chern roots.  Computed by coefficient extraction:
///   (-1)^{k(n-k)} / (k!(n-k)!) times the coefficient of the full staircase
/// monomial in p * prod(x_i-x_j) * prod(y_i-y_j) * prod(y_i-x_j).
/// Components of degree below k(n-k) contribute nothing (their staircase
/// coefficient vanishes by degree count); components above it are an error.
inline Rational integrate(const Polynomial& p, const GrassmannSpec& spec) {
    detail::validate_integrand(p, spec);
    std::vector<VarId> xs = x_alphabet(static_cast<std::uint32_t>(spec.k));
    std::vector<VarId> ys = y_alphabet(static_cast<std::uint32_t>(spec.n - spec.k));
    std::vector<VarId> all(xs);
    all.insert(all.end(), ys.begin(), ys.end());
    Rational d = coefficient_of_product(
        {p, vandermonde_double(xs), vandermonde_double(ys), cross_difference(ys, xs)},
        detail::staircase(all, static_cast<std::uint32_t>(spec.n - 1)));
    Rational scaled = d / (factorial(static_cast<unsigned long>(spec.k)) *
                           factorial(static_cast<unsigned long>(spec.n - spec.k)));
    return spec.dimension() % 2 == 0 ? scaled : -scaled;
}

inline Rational integrate(const ClassExpr& c, const GrassmannSpec& spec) {
    return integrate(expand_class(c, spec), spec);
}

}  // namespace chern
