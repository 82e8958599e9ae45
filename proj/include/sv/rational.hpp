#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sv {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational: positive denominator, gcd-reduced, 0 = 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : value_(value) {}
    explicit Rational(BigInt value) : value_(std::move(value)) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        value_ = Rep(std::move(num), std::move(den));
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Accepts "p", "p/q", optional leading sign.
    static Rational parse(std::string_view text);

    BigInt num() const { return numerator(value_); }
    BigInt den() const { return denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return denominator(value_) == 1; }
    int sign() const { return value_.sign(); }

    Rational operator-() const { return Rational(Rep(-value_)); }
    Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
    Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
    Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    Rational inv() const {
        if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
        return Rational(den(), num());
    }

    /// Exact integer power; negative exponents invert.
    Rational pow(long long e) const {
        if (e < 0) return inv().pow(-e);
        Rational base = *this, acc = 1;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc *= base;
            if (e > 1) base *= base;
        }
        return acc;
    }

    bool operator==(const Rational &o) const { return value_ == o.value_; }
    bool operator<(const Rational &o) const { return value_ < o.value_; }
    bool operator<=(const Rational &o) const { return value_ <= o.value_; }
    bool operator>(const Rational &o) const { return value_ > o.value_; }
    bool operator>=(const Rational &o) const { return value_ >= o.value_; }

    std::string str() const {
        return is_integer() ? num().str() : num().str() + "/" + den().str();
    }

private:
    using Rep = boost::multiprecision::cpp_rational;
    explicit Rational(Rep rep) : value_(std::move(rep)) {}
    Rep value_{0};
};

inline std::ostream &operator<<(std::ostream &os, const Rational &q) { return os << q.str(); }

inline Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'"); };
    size_t i = 0;
    auto read_int = [&](bool allow_sign) {
        size_t start = i;
        if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) bad();
        return BigInt(std::string(text.substr(start, i - start)));
    };
    BigInt num = read_int(true);
    if (i == text.size()) return Rational(std::move(num));
    if (text[i] != '/') bad();
    ++i;
    BigInt den = read_int(false);
    if (i != text.size() || den == 0) bad();
    return Rational(std::move(num), std::move(den));
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    BigInt acc = 1;
    for (long long j = 1; j <= k; ++j) {
        acc *= n - k + j;
        acc /= j;
    }
    return acc;
}

} // namespace sv
