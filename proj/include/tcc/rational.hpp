#ifndef TCC_RATIONAL_HPP
#define TCC_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "tcc/errors.hpp"

namespace tcc {

// Exact rational scalar, always kept in canonical form (reduced, positive
// denominator). Arbitrary precision, so sums of clustering-coefficient
// terms never overflow or round.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(std::int64_t n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        value_.canonicalize();
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.value_ == 0) throw DomainError("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { Rational r; r.value_ = -value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    bool is_zero() const { return value_ == 0; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }

    // Canonical "num/den" with den >= 1, e.g. "1/2", "0/1", "3/1".
    std::string to_string() const {
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

private:
    mpq_class value_;
};

}  // namespace tcc

#endif
