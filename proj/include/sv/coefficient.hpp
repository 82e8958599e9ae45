#pragma once

#include "sv/rational.hpp"

#include <map>
#include <optional>

namespace sv {

/// Exponent pair of one coefficient term: lambda power (any integer) and
/// alpha power (non-negative).
struct CoeffExp {
    long long l = 0;
    long long a = 0;
    friend bool operator==(const CoeffExp &, const CoeffExp &) = default;
};

/// Canonical term order: descending lexicographic on (l, a), so the highest
/// lambda power prints first.
struct CoeffExpGreater {
    bool operator()(const CoeffExp &x, const CoeffExp &y) const {
        if (x.l != y.l) return x.l > y.l;
        return x.a > y.a;
    }
};

/// Element of Q[alpha][lambda, lambda^-1]. Stored as a canonical map from
/// exponent pairs to nonzero rationals; all operations are exact.
class Coefficient {
public:
    using TermMap = std::map<CoeffExp, Rational, CoeffExpGreater>;

    Coefficient() = default;
    Coefficient(Rational q) { insert(CoeffExp{}, std::move(q)); }
    Coefficient(long long n) : Coefficient(Rational(n)) {}

    static Coefficient lambda_pow(long long e);
    static Coefficient alpha_pow(long long e);
    static Coefficient term(Rational q, long long el, long long ea);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap &terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_single_term() const { return terms_.size() == 1; }
    /// Inverse of a single-term coefficient; nullopt otherwise.
    std::optional<Coefficient> inverse() const;
    /// Exact power; negative exponents require a single invertible term.
    Coefficient pow(long long e) const;

    /// The rational attached to the constant term (l^0 a^0), zero if absent.
    Rational constant_part() const;

    Coefficient operator-() const;
    Coefficient &operator+=(const Coefficient &o);
    Coefficient &operator-=(const Coefficient &o);
    Coefficient &operator*=(const Coefficient &o);
    Coefficient &operator*=(const Rational &q);

    friend Coefficient operator+(Coefficient a, const Coefficient &b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient &b) { return a -= b; }
    friend Coefficient operator*(const Coefficient &a, const Coefficient &b);
    friend Coefficient operator*(Coefficient a, const Rational &q) { return a *= q; }
    friend Coefficient operator*(const Rational &q, Coefficient a) { return a *= q; }

    bool operator==(const Coefficient &o) const { return terms_ == o.terms_; }

    /// Canonical textual form, e.g. "2*l^2*a + -1/2*l^-1"; "0" when zero.
    std::string str() const;

private:
    void insert(CoeffExp e, Rational q);
    TermMap terms_;
};

std::ostream &operator<<(std::ostream &os, const Coefficient &c);

inline bool coeff_is_zero(const Coefficient &c) { return c.is_zero(); }

} // namespace sv
