#include "qperm/rational.hpp"

#include <cctype>
#include <ostream>

#include "qperm/errors.hpp"

namespace qperm {

namespace {

mpq_class make_canonical(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) {
        throw InvalidArgumentError("rational denominator must be nonzero");
    }
    mpq_class v(num, den);
    v.canonicalize();
    return v;
}

}  // namespace

BigRational::BigRational(long num, long den) : v_(make_canonical(BigInt(num), BigInt(den))) {}

BigRational::BigRational(const BigInt& num, const BigInt& den) : v_(make_canonical(num, den)) {}

BigRational BigRational::from_string(const std::string& text) {
    // strict grammar: -?digits(/digits)?
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) throw InvalidArgumentError("malformed rational: \"" + text + "\"");
    BigInt num(text.substr(0, pos));
    BigInt den(1);
    if (pos < text.size()) {
        if (text[pos] != '/') throw InvalidArgumentError("malformed rational: \"" + text + "\"");
        std::size_t den_start = ++pos;
        std::size_t den_digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++den_digits;
        }
        if (den_digits == 0 || pos != text.size()) {
            throw InvalidArgumentError("malformed rational: \"" + text + "\"");
        }
        den = BigInt(text.substr(den_start));
        if (sgn(den) == 0) throw InvalidArgumentError("rational denominator must be nonzero");
    }
    BigRational r;
    r.v_ = make_canonical(num, den);
    return r;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string BigRational::to_string() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        s += "/";
        s += v_.get_den().get_str();
    }
    return s;
}

BigRational BigRational::abs() const {
    BigRational r = *this;
    if (r.sign() < 0) r.v_ = -r.v_;
    return r;
}

BigRational BigRational::pow(const BigRational& base, unsigned exponent) {
    BigRational r(1);
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

BigInt int_pow(const BigInt& base, unsigned exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace qperm
