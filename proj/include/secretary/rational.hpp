#pragma once

#include <gmpxx.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace secretary {

using BigInt = mpz_class;

/// Exact rational number on arbitrary-precision integers. Always held in
/// lowest terms with a positive denominator; arithmetic never rounds.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(value) {}  // NOLINT: implicit by design
    Rational(const BigInt& value) : q_(value) {}
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }

    double to_double() const { return q_.get_d(); }

    /// "p/q" (or just "p" for integers).
    std::string str() const {
        std::string s = q_.get_num().get_str();
        if (!is_integer()) s += "/" + q_.get_den().get_str();
        return s;
    }

    /// Decimal rendering with the given number of significant digits.
    std::string decimal(int significant_digits = 12) const {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, to_double());
        return buf;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.q_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.q_ / b.q_);
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;  // kept canonical
};

}  // namespace secretary
