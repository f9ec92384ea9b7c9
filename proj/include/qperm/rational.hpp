#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace qperm {

using BigInt = mpz_class;

// Exact rational scalar. Always reduced, denominator > 0, canonical zero 0/1.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(int n) : v_(n) {}
    BigRational(long n) : v_(static_cast<signed long>(n)) {}
    BigRational(const BigInt& n) : v_(n) {}
    BigRational(long num, long den);
    BigRational(const BigInt& num, const BigInt& den);

    // Accepts "p", "p/q" and an optional leading '-'; rejects anything else.
    static BigRational from_string(const std::string& text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string to_string() const;
    double to_double() const { return v_.get_d(); }

    BigRational& operator+=(const BigRational& o) {
        v_ += o.v_;
        return *this;
    }
    BigRational& operator-=(const BigRational& o) {
        v_ -= o.v_;
        return *this;
    }
    BigRational& operator*=(const BigRational& o) {
        v_ *= o.v_;
        return *this;
    }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a) {
        BigRational r;
        r.v_ = -a.v_;
        return r;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

    BigRational abs() const;
    static BigRational pow(const BigRational& base, unsigned exponent);

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

BigInt int_pow(const BigInt& base, unsigned exponent);
BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace qperm
