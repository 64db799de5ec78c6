#include "rieszrep/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace rieszrep {

NSequence::NSequence(AbelianGroupSpec spec) : spec_(std::move(spec)) {
    if (spec_.is_finite()) dense_.assign(static_cast<std::size_t>(spec_.element_count()), Scalar{});
}

Scalar NSequence::get(const NVec& n) const {
    NVec r = spec_.reduce(n);
    if (spec_.is_finite()) return dense_[static_cast<std::size_t>(spec_.index_of(r))];
    auto it = sparse_.find(r);
    return it == sparse_.end() ? Scalar{} : it->second;
}

void NSequence::set(const NVec& n, const Scalar& v) {
    NVec r = spec_.reduce(n);
    if (spec_.is_finite()) {
        dense_[static_cast<std::size_t>(spec_.index_of(r))] = v;
    } else if (v.is_zero()) {
        sparse_.erase(r);
    } else {
        sparse_[r] = v;
    }
}

void NSequence::add_to(const NVec& n, const Scalar& v) {
    if (v.is_zero()) return;
    NVec r = spec_.reduce(n);
    if (spec_.is_finite()) {
        dense_[static_cast<std::size_t>(spec_.index_of(r))] += v;
    } else {
        auto [it, inserted] = sparse_.try_emplace(r, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) sparse_.erase(it);
        }
    }
}

std::size_t NSequence::support_size() const {
    if (!spec_.is_finite()) return sparse_.size();
    std::size_t c = 0;
    for (const auto& v : dense_)
        if (!v.is_zero()) ++c;
    return c;
}

double NSequence::norm_squared() const {
    double s = 0.0;
    for_each([&](const NVec&, const Scalar& v) { s += std::norm(v.value()); });
    return s;
}

bool NSequence::empty() const { return support_size() == 0; }

NSequence convolve_n(const NSequence& a, const NSequence& b) {
    if (a.spec() != b.spec()) throw std::invalid_argument("convolve_n: mismatched groups");
    NSequence out(a.spec());
    a.for_each([&](const NVec& m, const Scalar& av) {
        b.for_each([&](const NVec& k, const Scalar& bv) {
            out.add_to(a.spec().add(m, k), av * bv);
        });
    });
    return out;
}

GammaSignal::GammaSignal(GroupPtr group) : group_(std::move(group)) {
    phases_.assign(static_cast<std::size_t>(group_->kappa()), NSequence(group_->N()));
}

GammaSignal GammaSignal::delta(GroupPtr group) {
    GammaSignal d(std::move(group));
    d.set(d.group()->identity(), Scalar(Rational(1)));
    return d;
}

double GammaSignal::norm_squared() const {
    double s = 0.0;
    for (const auto& p : phases_) s += p.norm_squared();
    return s;
}

double GammaSignal::norm() const { return std::sqrt(norm_squared()); }

std::size_t GammaSignal::support_size() const {
    std::size_t s = 0;
    for (const auto& p : phases_) s += p.support_size();
    return s;
}

bool GammaSignal::is_exact() const {
    bool ok = true;
    for_each([&](const GammaElement&, const Scalar& v) { ok = ok && v.is_exact(); });
    return ok;
}

GammaSignal GammaSignal::operator+(const GammaSignal& o) const {
    GammaSignal out = *this;
    o.for_each([&](const GammaElement& g, const Scalar& v) { out.add_to(g, v); });
    return out;
}

GammaSignal GammaSignal::operator-(const GammaSignal& o) const {
    GammaSignal out = *this;
    o.for_each([&](const GammaElement& g, const Scalar& v) { out.add_to(g, -v); });
    return out;
}

GammaSignal GammaSignal::scaled(const Scalar& c) const {
    GammaSignal out(group_);
    for_each([&](const GammaElement& g, const Scalar& v) { out.set(g, v * c); });
    return out;
}

Scalar inner(const GammaSignal& a, const GammaSignal& b) {
    Scalar s;
    a.for_each([&](const GammaElement& g, const Scalar& av) {
        Scalar bv = b.get(g);
        if (!bv.is_zero()) s += av * bv.conj();
    });
    return s;
}

double max_abs_diff(const GammaSignal& a, const GammaSignal& b) {
    double worst = 0.0;
    a.for_each([&](const GammaElement& g, const Scalar& av) {
        worst = std::max(worst, std::abs(av.value() - b.get(g).value()));
    });
    b.for_each([&](const GammaElement& g, const Scalar& bv) {
        worst = std::max(worst, std::abs(a.get(g).value() - bv.value()));
    });
    return worst;
}

GammaSignal left_translate(const GammaElement& gamma, const GammaSignal& f) {
    GammaSignal out(f.group());
    const Group& grp = *f.group();
    f.for_each([&](const GammaElement& eta, const Scalar& v) {
        out.set(grp.multiply(gamma, eta), v);
    });
    return out;
}

GammaSignal involution(const GammaSignal& f) {
    GammaSignal out(f.group());
    const Group& grp = *f.group();
    f.for_each([&](const GammaElement& eta, const Scalar& v) {
        out.set(grp.inverse(eta), v.conj());
    });
    return out;
}

NSequence block(const GammaSignal& f, int h, int l) {
    const Group& grp = *f.group();
    if (h < 0 || h >= grp.kappa() || l < 0 || l >= grp.kappa())
        throw std::invalid_argument("block: H index out of range");
    // f_{h,l}(n) = f(sigma(l^{-1}) n, l^{-1} h); entry of phase l^{-1}h at m
    // lands at n = sigma(l) m.
    int linv = grp.H().inv(l);
    int src = grp.H().mul(linv, h);
    NSequence out(grp.N());
    f.phase(src).for_each([&](const NVec& m, const Scalar& v) { out.set(grp.act(l, m), v); });
    return out;
}

GammaSignal convolve(const GammaSignal& a, const GammaSignal& f) {
    if (!a.group()->same_group(*f.group()))
        throw std::invalid_argument("convolve: signals live on different groups");
    const Group& grp = *a.group();
    GammaSignal out(a.group());
    for (int h = 0; h < grp.kappa(); ++h) {
        NSequence acc(grp.N());
        for (int l = 0; l < grp.kappa(); ++l) {
            NSequence term = convolve_n(a.phase(l), block(f, h, l));
            term.for_each([&](const NVec& n, const Scalar& v) { acc.add_to(n, v); });
        }
        out.phase(h) = std::move(acc);
    }
    return out;
}

GammaSignal correlate(const GammaSignal& a, const GammaSignal& f) {
    return convolve(a, involution(f));
}

} // namespace rieszrep
