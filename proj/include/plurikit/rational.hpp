#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

#include "plurikit/error.hpp"

namespace plurikit {

// Arbitrary-precision rational number. Always stored reduced with a
// positive denominator; zero is 0/1.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}  // NOLINT: implicit by design
    BigRational(long num, long den) : v_(num, den) {
        if (den == 0) raise(ErrorCode::BadInput, "zero denominator");
        v_.canonicalize();
    }
    explicit BigRational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p", "p/q" and an optional leading minus sign.
    static BigRational from_string(const std::string& s);

    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    double to_double() const { return v_.get_d(); }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.v_ + b.v_));
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.v_ - b.v_));
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.v_ * b.v_));
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero()) raise(ErrorCode::BadInput, "division by zero");
        return BigRational(mpq_class(a.v_ / b.v_));
    }
    BigRational operator-() const { return BigRational(mpq_class(-v_)); }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) {
        return a.v_ != b.v_;
    }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return a.v_ < b.v_;
    }

    BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }

    size_t hash() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

BigRational factorial(unsigned n);
BigRational binomial(long n, unsigned k);

}  // namespace plurikit
