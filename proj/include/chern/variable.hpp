#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "chern/errors.hpp"

namespace chern {

/// The three variable families: x (Chern roots of the rank-k sub-bundle),
/// y (roots of the rank n-k quotient), and z (auxiliary univariate work).
enum class Alphabet : unsigned char { X = 0, Y = 1, Z = 2 };

/// Identifier of one polynomial variable: an alphabet plus a 1-based index.
/// Ordered x1 < x2 < ... < y1 < ... < z, which fixes the variable order used
/// everywhere (monomial comparison, rendering, alphabet helpers).
class VarId {
public:
    VarId(Alphabet alphabet, std::uint32_t index) : alphabet_(alphabet), index_(index) {
        if (index == 0) throw InvalidArgument("variable index must be at least 1");
    }

    static VarId x(std::uint32_t i) { return VarId(Alphabet::X, i); }
    static VarId y(std::uint32_t i) { return VarId(Alphabet::Y, i); }
    static VarId z(std::uint32_t i = 1) { return VarId(Alphabet::Z, i); }

    Alphabet alphabet() const { return alphabet_; }
    std::uint32_t index() const { return index_; }

    friend auto operator<=>(const VarId&, const VarId&) = default;

    std::string name() const {
        switch (alphabet_) {
            case Alphabet::X: return "x" + std::to_string(index_);
            case Alphabet::Y: return "y" + std::to_string(index_);
            case Alphabet::Z: return index_ == 1 ? "z" : "z" + std::to_string(index_);
        }
        return "?";
    }

private:
    Alphabet alphabet_;
    std::uint32_t index_;
};

inline std::ostream& operator<<(std::ostream& os, const VarId& v) { return os << v.name(); }

/// x1..xk in order.
inline std::vector<VarId> x_alphabet(std::uint32_t k) {
    std::vector<VarId> vars;
    vars.reserve(k);
    for (std::uint32_t i = 1; i <= k; ++i) vars.push_back(VarId::x(i));
    return vars;
}

/// y1..ym in order.
inline std::vector<VarId> y_alphabet(std::uint32_t m) {
    std::vector<VarId> vars;
    vars.reserve(m);
    for (std::uint32_t i = 1; i <= m; ++i) vars.push_back(VarId::y(i));
    return vars;
}

/// z1..zm in order.
inline std::vector<VarId> z_alphabet(std::uint32_t m) {
    std::vector<VarId> vars;
    vars.reserve(m);
    for (std::uint32_t i = 1; i <= m; ++i) vars.push_back(VarId::z(i));
    return vars;
}

}  // namespace chern
