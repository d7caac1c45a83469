#pragma once

#include <gmpxx.h>

#include <iostream>
#include <string>
#include <utility>

#include "mdim/errors.hpp"

namespace mdim {

// Exact arbitrary-precision fraction, kept in lowest terms with a positive
// denominator. Backed by GMP's mpq type; no implicit floating-point
// conversions are offered so equality stays exact.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
    Rational(long num, long den) {
        if (den == 0) throw BadParameterError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    static Rational from_mpq(mpq_class q) {
        q.canonicalize();
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    const mpq_class& raw() const { return v_; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    // "p/q" in lowest terms, "p" when the value is an integer.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.sign() == 0) throw BadParameterError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return from_mpq(-a.v_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

  private:
    mpq_class v_;
};

}  // namespace mdim
