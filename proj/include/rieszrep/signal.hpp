#pragma once

#include <map>
#include <vector>

#include "rieszrep/group.hpp"
#include "rieszrep/scalar.hpp"

namespace rieszrep {

/// A sequence over the abelian group N: dense for finite N, a finitely
/// supported sparse map for the lattice. Sparse storage never holds explicit
/// zeros.
class NSequence {
public:
    explicit NSequence(AbelianGroupSpec spec);

    const AbelianGroupSpec& spec() const { return spec_; }

    Scalar get(const NVec& n) const;
    void set(const NVec& n, const Scalar& v);
    void add_to(const NVec& n, const Scalar& v);

    /// Visits every nonzero entry (every entry for finite N).
    template <typename Visitor>
    void for_each(Visitor&& visit) const {
        if (spec_.is_finite()) {
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(dense_.size()); ++i)
                visit(spec_.element_at(i), dense_[static_cast<std::size_t>(i)]);
        } else {
            for (const auto& [n, v] : sparse_) visit(n, v);
        }
    }

    std::size_t support_size() const;
    double norm_squared() const;
    bool empty() const;

    const std::map<NVec, Scalar>& sparse() const { return sparse_; }

private:
    AbelianGroupSpec spec_;
    std::vector<Scalar> dense_;
    std::map<NVec, Scalar> sparse_;
};

/// Convolution on N: (a * b)(n) = sum_m a(m) b(n - m). Finite support on the
/// lattice keeps the sum finite.
NSequence convolve_n(const NSequence& a, const NSequence& b);

/// An element of l2(Gamma) stored as its kappa phases a_h(n) = a(n, h).
class GammaSignal {
public:
    explicit GammaSignal(GroupPtr group);

    static GammaSignal delta(GroupPtr group);

    const GroupPtr& group() const { return group_; }
    int kappa() const { return group_->kappa(); }

    Scalar get(const GammaElement& g) const { return phases_[static_cast<std::size_t>(g.h)].get(g.n); }
    void set(const GammaElement& g, const Scalar& v) { phases_[static_cast<std::size_t>(g.h)].set(g.n, v); }
    void add_to(const GammaElement& g, const Scalar& v) {
        phases_[static_cast<std::size_t>(g.h)].add_to(g.n, v);
    }

    const NSequence& phase(int h) const { return phases_[static_cast<std::size_t>(h)]; }
    NSequence& phase(int h) { return phases_[static_cast<std::size_t>(h)]; }

    template <typename Visitor>
    void for_each(Visitor&& visit) const {
        for (int h = 0; h < kappa(); ++h)
            phases_[static_cast<std::size_t>(h)].for_each(
                [&](const NVec& n, const Scalar& v) { visit(GammaElement{n, h}, v); });
    }

    double norm_squared() const;
    double norm() const;
    std::size_t support_size() const;

    /// True when every stored coefficient carries an exact rational form.
    bool is_exact() const;

    GammaSignal operator+(const GammaSignal& o) const;
    GammaSignal operator-(const GammaSignal& o) const;
    GammaSignal scaled(const Scalar& c) const;

private:
    GroupPtr group_;
    std::vector<NSequence> phases_;
};

/// <a, b> = sum_gamma a(gamma) conj(b(gamma)); exact when both operands are.
Scalar inner(const GammaSignal& a, const GammaSignal& b);

/// Largest absolute difference of coefficients.
double max_abs_diff(const GammaSignal& a, const GammaSignal& b);

/// (L_gamma f)(eta) = f(gamma^{-1} eta).
GammaSignal left_translate(const GammaElement& gamma, const GammaSignal& f);

/// f*(gamma) = conj(f(gamma^{-1})).
GammaSignal involution(const GammaSignal& f);

/// Block f_{h,l}(n) = f[(0,l)^{-1} (n,h)].
NSequence block(const GammaSignal& f, int h, int l);

/// Synthesis: (a * f)(n,h) = sum_l (a_l *_N f_{h,l})(n), the group convolution.
GammaSignal convolve(const GammaSignal& a, const GammaSignal& f);

/// Analysis: gamma -> <a, L_gamma f> = (a * f^*)(gamma).
GammaSignal correlate(const GammaSignal& a, const GammaSignal& f);

} // namespace rieszrep
