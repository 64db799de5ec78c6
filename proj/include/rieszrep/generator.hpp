#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "rieszrep/group.hpp"
#include "rieszrep/rational.hpp"

namespace rieszrep {

/// Axis-aligned support box; evaluation outside returns zero.
struct SupportBox {
    std::vector<double> lo;
    std::vector<double> hi;

    bool contains(const std::vector<double>& t, double slack = 0.0) const;
    static SupportBox hull(const SupportBox& a, const SupportBox& b);
};

/// One-dimensional piecewise polynomial with rational breakpoints and
/// coefficients (power basis in t). Supports exact evaluation at rational
/// points, which keeps the worked spline cases free of rounding.
class PiecewisePolynomial {
public:
    struct Piece {
        Rational lo;
        Rational hi;
        std::vector<Rational> coeffs; // c0 + c1 t + c2 t^2 + ...
    };

    explicit PiecewisePolynomial(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const { return pieces_; }
    int degree() const;
    Rational support_lo() const { return pieces_.front().lo; }
    Rational support_hi() const { return pieces_.back().hi; }

    double eval(double t) const;
    Rational eval_exact(const Rational& t) const;

    /// Largest jump across interior breakpoints (continuity diagnostic).
    double max_breakpoint_jump() const;

private:
    std::vector<Piece> pieces_;
};

/// Compactly supported evaluable function on R^d. Concrete variants:
/// a 1-d piecewise polynomial (with an exact path), values tabulated on a
/// uniform grid (multilinear interpolation), and a finite orbit combination
/// sum_i w_i phi(A_i^T (t - n_i)) used for interpolators.
class Generator {
public:
    static Generator piecewise(PiecewisePolynomial poly);
    static Generator tabulated(SupportBox box, std::vector<std::size_t> shape,
                               std::vector<double> values);

    int dim() const;
    const SupportBox& support() const;
    double eval(const std::vector<double>& t) const;
    double eval1(double t) const { return eval({t}); }

    /// Exact evaluation when the underlying representation allows it.
    std::optional<Rational> eval_exact(const std::vector<Rational>& t) const;

    const PiecewisePolynomial* as_piecewise() const;
    /// Grid data of a tabulated generator, nullptr for other variants.
    const std::vector<std::size_t>* tabulated_shape() const;
    const std::vector<double>* tabulated_values() const;

    struct Impl;
    std::shared_ptr<const Impl> impl;
};

} // namespace rieszrep
