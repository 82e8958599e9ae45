#include "sv/coefficient.hpp"

#include <ostream>
#include <stdexcept>

namespace sv {

Coefficient Coefficient::lambda_pow(long long e) {
    return term(1, e, 0);
}

Coefficient Coefficient::alpha_pow(long long e) {
    return term(1, 0, e);
}

Coefficient Coefficient::term(Rational q, long long el, long long ea) {
    if (ea < 0) throw std::invalid_argument("Coefficient: negative alpha exponent");
    Coefficient c;
    c.insert(CoeffExp{el, ea}, std::move(q));
    return c;
}

bool Coefficient::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == CoeffExp{} &&
           terms_.begin()->second.is_one();
}

Rational Coefficient::constant_part() const {
    auto it = terms_.find(CoeffExp{});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Coefficient::insert(CoeffExp e, Rational q) {
    if (q.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, std::move(q));
    if (!fresh) {
        it->second += q;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Coefficient Coefficient::operator-() const {
    Coefficient out;
    for (const auto &[e, q] : terms_) out.terms_.emplace(e, -q);
    return out;
}

Coefficient &Coefficient::operator+=(const Coefficient &o) {
    for (const auto &[e, q] : o.terms_) {
        auto [it, fresh] = terms_.emplace(e, q);
        if (!fresh) {
            it->second += q;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Coefficient &Coefficient::operator-=(const Coefficient &o) {
    for (const auto &[e, q] : o.terms_) {
        auto [it, fresh] = terms_.emplace(e, -q);
        if (!fresh) {
            it->second -= q;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Coefficient operator*(const Coefficient &a, const Coefficient &b) {
    Coefficient out;
    for (const auto &[ea, qa] : a.terms_)
        for (const auto &[eb, qb] : b.terms_)
            out.insert(CoeffExp{ea.l + eb.l, ea.a + eb.a}, qa * qb);
    return out;
}

Coefficient &Coefficient::operator*=(const Coefficient &o) {
    *this = *this * o;
    return *this;
}

Coefficient &Coefficient::operator*=(const Rational &q) {
    if (q.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, r] : terms_) r *= q;
    return *this;
}

std::optional<Coefficient> Coefficient::inverse() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto &[e, q] = *terms_.begin();
    if (e.a != 0) return std::nullopt; // alpha is not invertible
    return term(q.inv(), -e.l, 0);
}

Coefficient Coefficient::pow(long long e) const {
    if (e < 0) {
        auto inv = inverse();
        if (!inv) throw std::invalid_argument("Coefficient: negative power of non-invertible value");
        return inv->pow(-e);
    }
    Coefficient acc = Rational(1);
    Coefficient base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc *= base;
        if (e > 1) base *= base;
    }
    return acc;
}

std::string Coefficient::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[e, q] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string factors;
        if (e.l != 0) {
            factors += "l";
            if (e.l != 1) factors += "^" + std::to_string(e.l);
        }
        if (e.a != 0) {
            if (!factors.empty()) factors += "*";
            factors += "a";
            if (e.a != 1) factors += "^" + std::to_string(e.a);
        }
        if (factors.empty()) {
            out += q.str();
        } else if (q.is_one()) {
            out += factors;
        } else {
            out += q.str() + "*" + factors;
        }
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const Coefficient &c) { return os << c.str(); }

} // namespace sv
