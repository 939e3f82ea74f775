#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "chern/errors.hpp"

namespace chern {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Values are always kept canonical: gcd(numerator, denominator) = 1 and the
/// denominator is positive.  Backed by GMP, which maintains exactly that
/// normal form through arithmetic.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, lets 2 mix with Rational
    explicit Rational(const mpz_class& n) : v_(n) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw InvalidArgument("rational denominator must be nonzero");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "p" or "p/q" in base 10, with an optional leading minus sign.
    static Rational from_string(const std::string& text) {
        mpq_class q;
        try {
            q = mpq_class(text, 10);
        } catch (const std::invalid_argument&) {
            throw InvalidArgument("invalid rational literal '" + text + "'");
        }
        if (q.get_den() == 0)
            throw InvalidArgument("zero denominator in rational literal '" + text + "'");
        q.canonicalize();
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InvalidArgument("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// this^e by exponentiating numerator and denominator; canonical form is
    /// preserved because coprimality survives taking powers.
    Rational pow(std::uint64_t e) const {
        Rational r;
        mpz_pow_ui(mpq_numref(r.v_.get_mpq_t()), mpq_numref(v_.get_mpq_t()),
                   static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()),
                   static_cast<unsigned long>(e));
        return r;
    }

    /// Canonical rendering: "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

/// n! as an exact rational (used by the normalizing factors of the
/// coefficient formulas).
inline Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace chern
