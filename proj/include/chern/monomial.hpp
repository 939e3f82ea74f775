#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "chern/errors.hpp"
#include "chern/variable.hpp"

namespace chern {

/// Power product of variables, e.g. x1^2*y1.  Stored as a sorted list of
/// (variable, exponent) pairs with strictly positive exponents; the unit
/// monomial has no entries.  Exponents are limited to 32 bits and products
/// that would overflow that range are rejected.
class Monomial {
public:
    using Entry = std::pair<VarId, std::uint32_t>;

    Monomial() = default;

    /// Accepts entries in any order, merges duplicates, drops zero exponents.
    explicit Monomial(std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        for (const Entry& e : entries) {
            if (e.second == 0) continue;
            if (!entries_.empty() && entries_.back().first == e.first) {
                std::uint64_t sum =
                    static_cast<std::uint64_t>(entries_.back().second) + e.second;
                checked_assign(entries_.back().second, sum);
            } else {
                entries_.push_back(e);
            }
        }
    }

    static Monomial var(VarId v, std::uint32_t exponent = 1) {
        Monomial m;
        if (exponent > 0) m.entries_.push_back({v, exponent});
        return m;
    }

    bool is_unit() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }

    std::uint32_t exponent(VarId v) const {
        for (const Entry& e : entries_)
            if (e.first == v) return e.second;
        return 0;
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const Entry& e : entries_) d += e.second;
        return d;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r;
        auto a = entries_.begin();
        auto b = other.entries_.begin();
        while (a != entries_.end() || b != other.entries_.end()) {
            if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
                r.entries_.push_back(*a++);
            } else if (a == entries_.end() || b->first < a->first) {
                r.entries_.push_back(*b++);
            } else {
                std::uint64_t sum = static_cast<std::uint64_t>(a->second) + b->second;
                Entry e{a->first, 0};
                checked_assign(e.second, sum);
                r.entries_.push_back(e);
                ++a;
                ++b;
            }
        }
        return r;
    }

    /// True when this monomial divides other, i.e. no exponent exceeds the
    /// corresponding exponent of other.
    bool divides(const Monomial& other) const {
        for (const Entry& e : entries_)
            if (e.second > other.exponent(e.first)) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// "x1^2*x2", exponent 1 left implicit; the unit monomial renders as "1".
    std::string str() const {
        if (entries_.empty()) return "1";
        std::string s;
        for (const Entry& e : entries_) {
            if (!s.empty()) s += "*";
            s += e.first.name();
            if (e.second != 1) s += "^" + std::to_string(e.second);
        }
        return s;
    }

private:
    static void checked_assign(std::uint32_t& slot, std::uint64_t value) {
        if (value > std::numeric_limits<std::uint32_t>::max())
            throw ExponentOverflow("monomial exponent exceeds the supported 32-bit range");
        slot = static_cast<std::uint32_t>(value);
    }

    std::vector<Entry> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }

/// Graded lexicographic order: lower total degree first; at equal degree the
/// monomial with the smaller exponent at the earliest differing variable is
/// smaller (so x1^2 > x1*x2 > x2^2).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint64_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        auto ia = a.entries().begin();
        auto ib = b.entries().begin();
        while (ia != a.entries().end() || ib != b.entries().end()) {
            if (ib == b.entries().end()) return false;  // a has an earlier variable: a > b
            if (ia == a.entries().end()) return true;
            if (ia->first != ib->first)
                // The side owning the earlier variable has the larger exponent there.
                return ib->first < ia->first;
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        }
        return false;
    }
};

}  // namespace chern
