#pragma once

#include <complex>
#include <optional>

#include "rieszrep/rational.hpp"

namespace rieszrep {

using cplx = std::complex<double>;

/// Coefficient value: a complex double that additionally carries an exact
/// Gaussian-rational form when one is known. Arithmetic keeps the exact form
/// as long as both operands have one and nothing overflows; otherwise the
/// result silently degrades to the floating value, which is always maintained.
class Scalar {
public:
    Scalar() : value_(0.0, 0.0), exact_(GaussianRational{}) {}
    Scalar(double v) : value_(v, 0.0) {}
    Scalar(cplx v) : value_(v) {}
    Scalar(const Rational& r) : value_(r.to_double(), 0.0), exact_(GaussianRational{r}) {}
    Scalar(const GaussianRational& q) : value_(q.to_complex()), exact_(q) {}
    Scalar(int v) : Scalar(Rational(v)) {}
    Scalar(std::int64_t v) : Scalar(Rational(v)) {}

    cplx value() const { return value_; }
    bool is_exact() const { return exact_.has_value(); }
    const GaussianRational& exact() const { return *exact_; }

    bool is_zero() const { return exact_ ? exact_->is_zero() : value_ == cplx(0.0, 0.0); }

    Scalar conj() const {
        if (exact_) return Scalar(exact_->conj());
        return Scalar(std::conj(value_));
    }

    Scalar operator-() const {
        if (exact_) return Scalar(-*exact_);
        return Scalar(-value_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return combine(a, b, a.value_ + b.value_, [](auto& x, auto& y) { return x + y; });
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return combine(a, b, a.value_ - b.value_, [](auto& x, auto& y) { return x - y; });
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return combine(a, b, a.value_ * b.value_, [](auto& x, auto& y) { return x * y; });
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        return combine(a, b, a.value_ / b.value_, [](auto& x, auto& y) { return x / y; });
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Exact equality when both sides are exact, |a-b| <= atol otherwise.
    static bool close(const Scalar& a, const Scalar& b, double atol = 1e-12) {
        if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
        return std::abs(a.value_ - b.value_) <= atol;
    }

private:
    template <typename Op>
    static Scalar combine(const Scalar& a, const Scalar& b, cplx fallback, Op op) {
        if (a.exact_ && b.exact_) {
            try {
                return Scalar(op(*a.exact_, *b.exact_));
            } catch (const exact_overflow&) {
            }
        }
        return Scalar(fallback);
    }

    cplx value_;
    std::optional<GaussianRational> exact_;
};

} // namespace rieszrep
