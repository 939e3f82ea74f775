#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chern/errors.hpp"
#include "chern/monomial.hpp"
#include "chern/rational.hpp"

namespace chern {

/// Total and per-variable degrees of a polynomial.  total is empty for the
/// zero polynomial (the conventional "minus infinity" degree); partial lists
/// only variables that actually occur.
struct DegreeInfo {
    std::optional<long long> total;
    std::map<VarId, long long> partial;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are held in a map keyed by monomial in graded lexicographic order,
/// with no zero coefficients, so equal polynomials have identical
/// representations and iteration order is deterministic.  All operations are
/// pure: they return new values and never mutate their inputs.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    Polynomial(const Rational& c) { set(Monomial(), c); }  // NOLINT: implicit by design
    Polynomial(long c) : Polynomial(Rational(c)) {}        // NOLINT: implicit by design

    static Polynomial variable(VarId v) { return monomial(1, Monomial::var(v)); }

    static Polynomial monomial(const Rational& c, const Monomial& m) {
        Polynomial p;
        p.set(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }

    Rational constant_value() const {
        if (!is_constant()) throw InvalidArgument("polynomial is not constant");
        return coefficient(Monomial());
    }

    std::set<VarId> variables() const {
        std::set<VarId> vars;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.entries()) vars.insert(v);
        return vars;
    }

    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial pow(std::uint64_t e) const {
        Polynomial result(1);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return result;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Exact value at a point.  Every variable occurring in the polynomial
    /// must be assigned; extra assignments are ignored.
    Rational evaluate(const std::map<VarId, Rational>& point) const {
        // Per-variable power tables make repeated exponents cheap.
        std::map<VarId, std::vector<Rational>> powers;
        for (const auto& [m, c] : terms_) {
            for (const auto& [v, e] : m.entries()) {
                auto assigned = point.find(v);
                if (assigned == point.end())
                    throw MissingAssignment("no value assigned to variable " + v.name());
                auto& table = powers[v];
                if (table.empty()) table.push_back(Rational(1));
                while (table.size() <= e) table.push_back(table.back() * assigned->second);
            }
        }
        Rational sum(0);
        for (const auto& [m, c] : terms_) {
            Rational term = c;
            for (const auto& [v, e] : m.entries()) term *= powers[v][e];
            sum += term;
        }
        return sum;
    }

    /// Replaces variables by polynomials; variables absent from the map stay
    /// as themselves.
    Polynomial substitute(const std::map<VarId, Polynomial>& replacements) const {
        std::map<VarId, std::vector<Polynomial>> powers;
        Polynomial result;
        for (const auto& [m, c] : terms_) {
            Polynomial term(c);
            for (const auto& [v, e] : m.entries()) {
                auto repl = replacements.find(v);
                if (repl == replacements.end()) {
                    term *= Polynomial::monomial(1, Monomial::var(v, e));
                    continue;
                }
                auto& table = powers[v];
                if (table.empty()) table.push_back(Polynomial(1));
                while (table.size() <= e) table.push_back(table.back() * repl->second);
                term *= table[e];
            }
            result += term;
        }
        return result;
    }

    DegreeInfo degree_info() const {
        DegreeInfo info;
        for (const auto& [m, c] : terms_) {
            long long d = static_cast<long long>(m.total_degree());
            if (!info.total || d > *info.total) info.total = d;
            for (const auto& [v, e] : m.entries()) {
                auto [it, inserted] = info.partial.try_emplace(v, e);
                if (!inserted && it->second < e) it->second = e;
            }
        }
        return info;
    }

    /// Splits into homogeneous parts, keyed by total degree (ascending).
    /// The zero polynomial has no components.
    std::map<long long, Polynomial> homogeneous_components() const {
        std::map<long long, Polynomial> parts;
        for (const auto& [m, c] : terms_)
            parts[static_cast<long long>(m.total_degree())].set(m, c);
        return parts;
    }

    /// Canonical rendering: terms in descending graded-lex order, "p/q"
    /// coefficients, explicit "*" between factors, "^" for powers.  The
    /// output parses back to an equal polynomial under the expression
    /// grammar.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            bool first = s.empty();
            if (first) {
                if (c.sign() < 0) s += "-";
            } else {
                s += c.sign() < 0 ? " - " : " + ";
            }
            Rational a = c.abs();
            if (m.is_unit()) {
                s += a.str();
            } else if (a == Rational(1)) {
                s += m.str();
            } else {
                s += a.str() + "*" + m.str();
            }
        }
        return s;
    }

private:
    void set(const Monomial& m, const Rational& c) {
        if (!c.is_zero()) terms_[m] = c;
    }

    void add_term(const Monomial& m, const Rational& c) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        } else if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

/// Coefficient of target in the product of the given factors, computed
/// without expanding the full product: exponents only grow during
/// multiplication, so intermediate terms that already exceed target in some
/// variable can never contribute and are dropped early.  Equivalent to
/// multiplying everything out and reading one coefficient, just faster.
inline Rational coefficient_of_product(const std::vector<Polynomial>& factors,
                                       const Monomial& target) {
    Polynomial::TermMap acc;
    acc.emplace(Monomial(), Rational(1));
    for (const Polynomial& f : factors) {
        Polynomial::TermMap next;
        for (const auto& [ma, ca] : acc) {
            for (const auto& [mf, cf] : f.terms()) {
                Monomial m = ma * mf;
                if (!m.divides(target)) continue;
                auto [it, inserted] = next.try_emplace(m, ca * cf);
                if (!inserted) it->second += ca * cf;
            }
        }
        acc = std::move(next);
    }
    auto it = acc.find(target);
    return it == acc.end() ? Rational(0) : it->second;
}

}  // namespace chern
