#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rieszrep/scalar.hpp"
#include "rieszrep/signal.hpp"

namespace rieszrep {

/// Trigonometric polynomial in d variables, stored by sequence index: the map
/// n -> c(n) represents w -> sum_n c(n) e^{-i<w,n>}. For d = 1 this is the
/// Laurent polynomial sum c(n) z^{-n} on |z| = 1. Products therefore convolve
/// the coefficient maps, and complex conjugation on the torus negates indices
/// and conjugates coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(int dim) : dim_(dim) {}

    static LaurentPoly constant(int dim, const Scalar& c);
    static LaurentPoly from_sequence(const NSequence& seq);

    int dim() const { return dim_; }
    const std::map<NVec, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const NVec& n, const Scalar& c);

    cplx eval(const std::vector<double>& w) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;

    /// Pointwise complex conjugate on the torus.
    LaurentPoly conj_on_torus() const;

    /// Single-term detection: returns {index, coefficient} when the
    /// polynomial is a nonzero monomial a z^{-n}.
    std::optional<std::pair<NVec, Scalar>> as_monomial() const;

    /// Division by a nonzero monomial; stays a Laurent polynomial.
    LaurentPoly divide_by_monomial(const NVec& n, const Scalar& c) const;

    /// Coefficients back as a lattice sequence.
    NSequence to_sequence() const;

    bool equal_exact(const LaurentPoly& o) const;

private:
    int dim_ = 1;
    std::map<NVec, Scalar> terms_;
};

/// kappa x kappa matrix of Laurent polynomials; the exact form of a transfer
/// matrix of a finitely supported lattice signal.
class LaurentMatrix {
public:
    LaurentMatrix(int kappa, int dim);

    int kappa() const { return kappa_; }
    int dim() const { return dim_; }
    LaurentPoly& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * kappa_ + c]; }
    const LaurentPoly& at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * kappa_ + c];
    }

    LaurentMatrix conjugate_transpose() const;
    LaurentPoly determinant() const;
    /// Cofactor expansion; intended for the small kappa of finite H.
    LaurentMatrix adjugate() const;

    void eval(const std::vector<double>& w, cplx* out_row_major) const;

private:
    LaurentPoly minor_det(std::vector<int> rows, std::vector<int> cols) const;

    int kappa_;
    int dim_;
    std::vector<LaurentPoly> entries_;
};

} // namespace rieszrep
