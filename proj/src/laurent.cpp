#include "rieszrep/laurent.hpp"

#include <cmath>
#include <stdexcept>

namespace rieszrep {

LaurentPoly LaurentPoly::constant(int dim, const Scalar& c) {
    LaurentPoly p(dim);
    p.add_term(NVec(static_cast<std::size_t>(dim), 0), c);
    return p;
}

LaurentPoly LaurentPoly::from_sequence(const NSequence& seq) {
    if (seq.spec().is_finite())
        throw std::invalid_argument("LaurentPoly requires a lattice sequence");
    LaurentPoly p(seq.spec().dimension());
    seq.for_each([&](const NVec& n, const Scalar& v) { p.add_term(n, v); });
    return p;
}

void LaurentPoly::add_term(const NVec& n, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

cplx LaurentPoly::eval(const std::vector<double>& w) const {
    cplx acc{0.0, 0.0};
    for (const auto& [n, c] : terms_) {
        double phase = 0.0;
        for (std::size_t i = 0; i < n.size(); ++i) phase -= w[i] * static_cast<double>(n[i]);
        acc += c.value() * cplx{std::cos(phase), std::sin(phase)};
    }
    return acc;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [n, c] : o.terms_) out.add_term(n, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [n, c] : o.terms_) out.add_term(n, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out(dim_);
    for (const auto& [n, c] : terms_)
        for (const auto& [m, d] : o.terms_) {
            NVec sum(n.size());
            for (std::size_t i = 0; i < n.size(); ++i) sum[i] = n[i] + m[i];
            out.add_term(sum, c * d);
        }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(dim_);
    for (const auto& [n, c] : terms_) out.add_term(n, -c);
    return out;
}

LaurentPoly LaurentPoly::conj_on_torus() const {
    LaurentPoly out(dim_);
    for (const auto& [n, c] : terms_) {
        NVec neg(n.size());
        for (std::size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
        out.add_term(neg, c.conj());
    }
    return out;
}

std::optional<std::pair<NVec, Scalar>> LaurentPoly::as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [n, c] = *terms_.begin();
    return std::make_pair(n, c);
}

LaurentPoly LaurentPoly::divide_by_monomial(const NVec& n0, const Scalar& c0) const {
    if (c0.is_zero()) throw std::domain_error("division by zero monomial");
    LaurentPoly out(dim_);
    for (const auto& [n, c] : terms_) {
        NVec shifted(n.size());
        for (std::size_t i = 0; i < n.size(); ++i) shifted[i] = n[i] - n0[i];
        out.add_term(shifted, c / c0);
    }
    return out;
}

NSequence LaurentPoly::to_sequence() const {
    NSequence seq(AbelianGroupSpec::lattice(dim_));
    for (const auto& [n, c] : terms_) seq.set(n, c);
    return seq;
}

bool LaurentPoly::equal_exact(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [n, c] : terms_) {
        auto it = o.terms_.find(n);
        if (it == o.terms_.end()) return false;
        if (!c.is_exact() || !it->second.is_exact()) return false;
        if (c.exact() != it->second.exact()) return false;
    }
    return true;
}

LaurentMatrix::LaurentMatrix(int kappa, int dim) : kappa_(kappa), dim_(dim) {
    entries_.assign(static_cast<std::size_t>(kappa) * kappa, LaurentPoly(dim));
}

LaurentMatrix LaurentMatrix::conjugate_transpose() const {
    LaurentMatrix out(kappa_, dim_);
    for (int r = 0; r < kappa_; ++r)
        for (int c = 0; c < kappa_; ++c) out.at(r, c) = at(c, r).conj_on_torus();
    return out;
}

LaurentPoly LaurentMatrix::minor_det(std::vector<int> rows, std::vector<int> cols) const {
    if (rows.size() == 1) return at(rows[0], cols[0]);
    LaurentPoly acc(dim_);
    std::vector<int> subrows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> subcols;
        subcols.reserve(cols.size() - 1);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (k != j) subcols.push_back(cols[k]);
        LaurentPoly term = at(rows[0], cols[j]) * minor_det(subrows, subcols);
        if (j % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

LaurentPoly LaurentMatrix::determinant() const {
    std::vector<int> idx(static_cast<std::size_t>(kappa_));
    for (int i = 0; i < kappa_; ++i) idx[static_cast<std::size_t>(i)] = i;
    return minor_det(idx, idx);
}

LaurentMatrix LaurentMatrix::adjugate() const {
    LaurentMatrix out(kappa_, dim_);
    if (kappa_ == 1) {
        out.at(0, 0) = LaurentPoly::constant(dim_, Scalar(Rational(1)));
        return out;
    }
    for (int r = 0; r < kappa_; ++r)
        for (int c = 0; c < kappa_; ++c) {
            std::vector<int> rows, cols;
            for (int i = 0; i < kappa_; ++i)
                if (i != r) rows.push_back(i);
            for (int j = 0; j < kappa_; ++j)
                if (j != c) cols.push_back(j);
            LaurentPoly cof = minor_det(rows, cols);
            // adj = transpose of the cofactor matrix
            out.at(c, r) = ((r + c) % 2 == 0) ? cof : -cof;
        }
    return out;
}

void LaurentMatrix::eval(const std::vector<double>& w, cplx* out) const {
    for (int r = 0; r < kappa_; ++r)
        for (int c = 0; c < kappa_; ++c)
            out[static_cast<std::size_t>(r) * kappa_ + c] = at(r, c).eval(w);
}

} // namespace rieszrep
