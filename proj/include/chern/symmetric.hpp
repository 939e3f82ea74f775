#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chern/errors.hpp"
#include "chern/partition.hpp"
#include "chern/polynomial.hpp"
#include "chern/rational.hpp"
#include "chern/variable.hpp"

namespace chern {

/// Elementary symmetric polynomial e_i in the given variables.  e_0 = 1,
/// e_i = 0 for i beyond the variable count; negative i is rejected.
inline Polynomial elementary(long i, const std::vector<VarId>& vars) {
    if (i < 0) throw NegativeIndex("elementary symmetric index must be nonnegative");
    std::vector<Polynomial> e(static_cast<std::size_t>(i) + 1);
    e[0] = Polynomial(1);
    for (VarId v : vars) {
        Polynomial pv = Polynomial::variable(v);
        for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += pv * e[j - 1];
    }
    return e[static_cast<std::size_t>(i)];
}

/// Complete homogeneous symmetric polynomial h_i; h_0 = 1 and h_i = 0 for
/// negative i (the convention the interpolation identities rely on).
inline Polynomial complete_homogeneous(long i, const std::vector<VarId>& vars) {
    if (i < 0) return Polynomial();
    std::vector<Polynomial> h(static_cast<std::size_t>(i) + 1);
    h[0] = Polynomial(1);
    for (VarId v : vars) {
        Polynomial pv = Polynomial::variable(v);
        for (std::size_t j = 1; j < h.size(); ++j) h[j] += pv * h[j - 1];
    }
    return h[static_cast<std::size_t>(i)];
}

namespace detail {

/// Rewrites a polynomial in z1..zm as a polynomial in the given forms,
/// substituting z_t -> forms[t-1].  This is how the symmetric constructors
/// accept arbitrary linear forms while the combinatorial core stays on plain
/// variables.
inline Polynomial substitute_z(const Polynomial& p, const std::vector<Polynomial>& forms) {
    std::map<VarId, Polynomial> repl;
    for (std::size_t t = 0; t < forms.size(); ++t)
        repl.emplace(VarId::z(static_cast<std::uint32_t>(t + 1)), forms[t]);
    return p.substitute(repl);
}

/// Determinant by cofactor expansion along the first row; entry sizes stay
/// tiny for the matrix orders used here.
template <class Ring>
Ring determinant(const std::vector<std::vector<Ring>>& m) {
    std::size_t n = m.size();
    if (n == 0) return Ring(1);
    if (n == 1) return m[0][0];
    Ring det(0);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<Ring>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Ring> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Ring term = m[0][col] * determinant(minor);
        if (col % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

}  // namespace detail

inline Polynomial elementary(long i, const std::vector<Polynomial>& forms) {
    return detail::substitute_z(
        elementary(i, z_alphabet(static_cast<std::uint32_t>(forms.size()))), forms);
}

inline Polynomial complete_homogeneous(long i, const std::vector<Polynomial>& forms) {
    return detail::substitute_z(
        complete_homogeneous(i, z_alphabet(static_cast<std::uint32_t>(forms.size()))), forms);
}

/// Schur polynomial s_lambda via the Jacobi-Trudi determinant
/// det(h_{lambda_i - i + j}).  The partition may not have more nonzero parts
/// than there are variables.
inline Polynomial schur(const Partition& lambda, const std::vector<VarId>& vars) {
    std::size_t len = lambda.length();
    if (len > vars.size())
        throw PartitionTooLong("partition " + lambda.str() + " has more parts than the " +
                               std::to_string(vars.size()) + " available variables");
    if (len == 0) return Polynomial(1);
    std::vector<std::vector<Polynomial>> jt(len, std::vector<Polynomial>(len));
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j < len; ++j) {
            long index = static_cast<long>(lambda.parts()[i]) - static_cast<long>(i) +
                         static_cast<long>(j);
            jt[i][j] = complete_homogeneous(index, vars);
        }
    return detail::determinant(jt);
}

inline Polynomial schur(const Partition& lambda, const std::vector<Polynomial>& forms) {
    return detail::substitute_z(
        schur(lambda, z_alphabet(static_cast<std::uint32_t>(forms.size()))), forms);
}

/// Schur value at a point via the bialternant ratio
/// det(a_j^{lambda_i + m - i}) / det(a_j^{m - i}).  Kept as an independent
/// cross-check of the Jacobi-Trudi construction; requires distinct
/// coordinates so the Vandermonde determinant in the denominator is nonzero.
inline Rational schur_bialternant_at(const Partition& lambda,
                                     const std::vector<Rational>& point) {
    std::size_t m = point.size();
    if (m == 0) throw InvalidArgument("bialternant needs at least one coordinate");
    if (lambda.length() > m)
        throw PartitionTooLong("partition " + lambda.str() + " has more parts than the " +
                               std::to_string(m) + " coordinates");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (point[i] == point[j])
                throw InvalidArgument("bialternant needs pairwise distinct coordinates");
    std::vector<std::uint32_t> padded(lambda.parts());
    padded.resize(m, 0);
    std::vector<std::vector<Rational>> num(m, std::vector<Rational>(m));
    std::vector<std::vector<Rational>> den(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::uint64_t shift = m - 1 - i;
            num[i][j] = point[j].pow(padded[i] + shift);
            den[i][j] = point[j].pow(shift);
        }
    return detail::determinant(num) / detail::determinant(den);
}

/// Product of (v_i - v_j) over all ordered pairs i != j; equals
/// (-1)^{m(m-1)/2} times the squared Vandermonde determinant, and 1 for a
/// single variable.
inline Polynomial vandermonde_double(const std::vector<VarId>& vars) {
    Polynomial p(1);
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = 0; j < vars.size(); ++j) {
            if (i == j) continue;
            p *= Polynomial::variable(vars[i]) - Polynomial::variable(vars[j]);
        }
    return p;
}

/// Product of (y_i - x_j) over every y variable and every x variable.
inline Polynomial cross_difference(const std::vector<VarId>& yvars,
                                   const std::vector<VarId>& xvars) {
    Polynomial p(1);
    for (VarId y : yvars)
        for (VarId x : xvars) p *= Polynomial::variable(y) - Polynomial::variable(x);
    return p;
}

/// The polynomial with the roles of variables a and b exchanged.
inline Polynomial swap_variables(const Polynomial& p, VarId a, VarId b) {
    Polynomial result;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> entries;
        entries.reserve(m.entries().size());
        for (const auto& [v, e] : m.entries()) {
            VarId w = (v == a) ? b : (v == b) ? a : v;
            entries.push_back({w, e});
        }
        result += Polynomial::monomial(c, Monomial(std::move(entries)));
    }
    return result;
}

/// Invariance under all permutations of vars, verified through the adjacent
/// transpositions that generate them.
inline bool is_symmetric(const Polynomial& p, const std::vector<VarId>& vars) {
    for (std::size_t t = 0; t + 1 < vars.size(); ++t)
        if (swap_variables(p, vars[t], vars[t + 1]) != p) return false;
    return true;
}

/// Symmetric in the x list and in the y list separately.
inline bool is_doubly_symmetric(const Polynomial& p, const std::vector<VarId>& xvars,
                                const std::vector<VarId>& yvars) {
    return is_symmetric(p, xvars) && is_symmetric(p, yvars);
}

}  // namespace chern
