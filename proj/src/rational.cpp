#include "rieszrep/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace rieszrep {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

} // namespace

Rational Rational::reduce(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (!fits64(n) || !fits64(d)) throw exact_overflow();
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = reduce(n, d); }

Rational Rational::operator-() const { return reduce(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::reduce(n, d);
}

Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::reduce(n, d);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::reduce(static_cast<__int128>(a.num_) * b.num_,
                            static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return Rational::reduce(static_cast<__int128>(a.num_) * b.den_,
                            static_cast<__int128>(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

namespace {

std::int64_t parse_integer(const std::string& s, const std::string& original) {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not a rational literal: " + original);
    return v;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return Rational(parse_integer(s.substr(0, slash), text),
                        parse_integer(s.substr(slash + 1), text));
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(parse_integer(s, text));
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    if (tail.empty()) throw std::invalid_argument("not a rational literal: " + text);
    for (char c : tail)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("not a rational literal: " + text);
    bool negative = !head.empty() && head[0] == '-';
    std::int64_t whole =
        head.empty() || head == "-" || head == "+" ? 0 : parse_integer(head, text);
    __int128 den = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
    if (!fits64(den)) throw exact_overflow();
    std::int64_t frac = std::stoll(tail);
    Rational r = Rational(whole).abs() + Rational(frac, static_cast<std::int64_t>(den));
    return negative ? -r : r;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    Rational n = b.re * b.re + b.im * b.im;
    GaussianRational conj = b.conj();
    GaussianRational prod = a * conj;
    return {prod.re / n, prod.im / n};
}

} // namespace rieszrep
