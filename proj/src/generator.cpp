#include "rieszrep/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rieszrep {

bool SupportBox::contains(const std::vector<double>& t, double slack) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (t[i] < lo[i] - slack || t[i] > hi[i] + slack) return false;
    return true;
}

SupportBox SupportBox::hull(const SupportBox& a, const SupportBox& b) {
    SupportBox out = a;
    for (std::size_t i = 0; i < out.lo.size(); ++i) {
        out.lo[i] = std::min(out.lo[i], b.lo[i]);
        out.hi[i] = std::max(out.hi[i], b.hi[i]);
    }
    return out;
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("piecewise polynomial needs pieces");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (!(pieces_[i].lo < pieces_[i].hi))
            throw std::invalid_argument("piecewise polynomial piece has empty interval");
        if (i > 0 && pieces_[i - 1].hi != pieces_[i].lo)
            throw std::invalid_argument("piecewise polynomial pieces must be contiguous");
    }
}

int PiecewisePolynomial::degree() const {
    std::size_t deg = 0;
    for (const auto& p : pieces_)
        if (!p.coeffs.empty()) deg = std::max(deg, p.coeffs.size() - 1);
    return static_cast<int>(deg);
}

double PiecewisePolynomial::eval(double t) const {
    if (t < support_lo().to_double() || t > support_hi().to_double()) return 0.0;
    for (const auto& p : pieces_) {
        if (t <= p.hi.to_double() || &p == &pieces_.back()) {
            double acc = 0.0;
            for (std::size_t k = p.coeffs.size(); k-- > 0;)
                acc = acc * t + p.coeffs[k].to_double();
            return acc;
        }
    }
    return 0.0;
}

Rational PiecewisePolynomial::eval_exact(const Rational& t) const {
    if (t < support_lo() || t > support_hi()) return Rational(0);
    for (const auto& p : pieces_) {
        if (t <= p.hi || &p == &pieces_.back()) {
            Rational acc(0);
            for (std::size_t k = p.coeffs.size(); k-- > 0;) acc = acc * t + p.coeffs[k];
            return acc;
        }
    }
    return Rational(0);
}

double PiecewisePolynomial::max_breakpoint_jump() const {
    double worst = 0.0;
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        Rational t = pieces_[i].lo;
        Rational left(0), right(0);
        for (std::size_t k = pieces_[i - 1].coeffs.size(); k-- > 0;)
            left = left * t + pieces_[i - 1].coeffs[k];
        for (std::size_t k = pieces_[i].coeffs.size(); k-- > 0;)
            right = right * t + pieces_[i].coeffs[k];
        worst = std::max(worst, std::abs((left - right).to_double()));
    }
    return worst;
}

struct Generator::Impl {
    enum class Kind { piecewise, tabulated } kind = Kind::piecewise;
    SupportBox box;

    // piecewise
    std::optional<PiecewisePolynomial> poly;

    // tabulated (row-major over shape, multilinear interpolation)
    std::vector<std::size_t> shape;
    std::vector<double> values;

    double eval(const std::vector<double>& t) const;
};

double Generator::Impl::eval(const std::vector<double>& t) const {
    if (!box.contains(t)) return 0.0;
    if (kind == Kind::piecewise) return poly->eval(t[0]);

    // multilinear interpolation on the uniform grid
    const std::size_t d = shape.size();
    std::vector<double> frac(d);
    std::vector<std::size_t> base(d);
    for (std::size_t i = 0; i < d; ++i) {
        double cells = static_cast<double>(shape[i] - 1);
        double x = (t[i] - box.lo[i]) / (box.hi[i] - box.lo[i]) * cells;
        double fl = std::floor(x);
        base[i] = static_cast<std::size_t>(std::clamp(fl, 0.0, cells - 1.0));
        frac[i] = x - static_cast<double>(base[i]);
    }
    double acc = 0.0;
    for (std::size_t corner = 0; corner < (std::size_t{1} << d); ++corner) {
        double weight = 1.0;
        std::size_t flat = 0;
        for (std::size_t i = 0; i < d; ++i) {
            bool high = (corner >> i) & 1;
            weight *= high ? frac[i] : 1.0 - frac[i];
            flat = flat * shape[i] + base[i] + (high ? 1 : 0);
        }
        acc += weight * values[flat];
    }
    return acc;
}

Generator Generator::piecewise(PiecewisePolynomial poly) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::piecewise;
    impl->box = {{poly.support_lo().to_double()}, {poly.support_hi().to_double()}};
    impl->poly = std::move(poly);
    return Generator{std::move(impl)};
}

Generator Generator::tabulated(SupportBox box, std::vector<std::size_t> shape,
                               std::vector<double> values) {
    std::size_t total = 1;
    for (auto s : shape) {
        if (s < 2) throw std::invalid_argument("tabulated generator needs >= 2 samples per axis");
        total *= s;
    }
    if (total != values.size())
        throw std::invalid_argument("tabulated generator: value count does not match shape");
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::tabulated;
    impl->box = std::move(box);
    impl->shape = std::move(shape);
    impl->values = std::move(values);
    return Generator{std::move(impl)};
}

int Generator::dim() const { return static_cast<int>(impl->box.lo.size()); }
const SupportBox& Generator::support() const { return impl->box; }
double Generator::eval(const std::vector<double>& t) const { return impl->eval(t); }

std::optional<Rational> Generator::eval_exact(const std::vector<Rational>& t) const {
    if (impl->kind != Impl::Kind::piecewise) return std::nullopt;
    return impl->poly->eval_exact(t[0]);
}

const PiecewisePolynomial* Generator::as_piecewise() const {
    return impl->kind == Impl::Kind::piecewise ? &*impl->poly : nullptr;
}

const std::vector<std::size_t>* Generator::tabulated_shape() const {
    return impl->kind == Impl::Kind::tabulated ? &impl->shape : nullptr;
}

const std::vector<double>* Generator::tabulated_values() const {
    return impl->kind == Impl::Kind::tabulated ? &impl->values : nullptr;
}

} // namespace rieszrep
