#include "rieszrep/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rieszrep/linalg.hpp"

namespace rieszrep {

namespace {

std::vector<double> mat_vec(const std::vector<double>& m, int d, const std::vector<double>& v) {
    std::vector<double> out(static_cast<std::size_t>(d), 0.0);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            out[static_cast<std::size_t>(r)] +=
                m[static_cast<std::size_t>(r) * d + c] * v[static_cast<std::size_t>(c)];
    return out;
}

std::vector<double> mat_transpose_vec(const std::vector<double>& m, int d,
                                      const std::vector<double>& v) {
    std::vector<double> out(static_cast<std::size_t>(d), 0.0);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            out[static_cast<std::size_t>(c)] +=
                m[static_cast<std::size_t>(r) * d + c] * v[static_cast<std::size_t>(r)];
    return out;
}

/// Entries of an orthogonal matrix that should be integers after conjugation
/// are accepted within this tolerance and rounded.
constexpr double kIntegrality = 1e-9;

} // namespace

CrystalGroupSpec::CrystalGroupSpec(int dim, std::vector<double> lattice_matrix,
                                   std::vector<std::vector<double>> orthogonal)
    : dim_(dim), m_(std::move(lattice_matrix)), orthogonal_(std::move(orthogonal)) {
    const std::size_t dd = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
    if (m_.size() != dd) throw std::invalid_argument("lattice matrix has wrong size");
    if (orthogonal_.empty()) throw std::invalid_argument("H must contain at least the identity");

    // orthogonality check A^T A = I
    for (std::size_t h = 0; h < orthogonal_.size(); ++h) {
        const auto& A = orthogonal_[h];
        if (A.size() != dd) throw std::invalid_argument("orthogonal matrix has wrong size");
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                double dot = 0.0;
                for (int k = 0; k < dim; ++k)
                    dot += A[static_cast<std::size_t>(k) * dim + r] *
                           A[static_cast<std::size_t>(k) * dim + c];
                if (std::abs(dot - (r == c ? 1.0 : 0.0)) > 1e-12)
                    throw std::invalid_argument("H matrix " + std::to_string(h) +
                                                " is not orthogonal");
            }
    }

    // invert M by Gaussian elimination (small d)
    std::vector<double> inv(dd, 0.0), work = m_;
    for (int i = 0; i < dim; ++i) inv[static_cast<std::size_t>(i) * dim + i] = 1.0;
    for (int k = 0; k < dim; ++k) {
        int pivot = k;
        for (int r = k + 1; r < dim; ++r)
            if (std::abs(work[static_cast<std::size_t>(r) * dim + k]) >
                std::abs(work[static_cast<std::size_t>(pivot) * dim + k]))
                pivot = r;
        double pv = work[static_cast<std::size_t>(pivot) * dim + k];
        if (std::abs(pv) < 1e-14) throw std::invalid_argument("lattice matrix is singular");
        if (pivot != k)
            for (int c = 0; c < dim; ++c) {
                std::swap(work[static_cast<std::size_t>(k) * dim + c],
                          work[static_cast<std::size_t>(pivot) * dim + c]);
                std::swap(inv[static_cast<std::size_t>(k) * dim + c],
                          inv[static_cast<std::size_t>(pivot) * dim + c]);
            }
        for (int r = 0; r < dim; ++r) {
            if (r == k) continue;
            double f = work[static_cast<std::size_t>(r) * dim + k] / pv;
            for (int c = 0; c < dim; ++c) {
                work[static_cast<std::size_t>(r) * dim + c] -=
                    f * work[static_cast<std::size_t>(k) * dim + c];
                inv[static_cast<std::size_t>(r) * dim + c] -=
                    f * inv[static_cast<std::size_t>(k) * dim + c];
            }
        }
        for (int c = 0; c < dim; ++c) {
            work[static_cast<std::size_t>(k) * dim + c] /= pv;
            inv[static_cast<std::size_t>(k) * dim + c] /= pv;
        }
    }
    inv_m_ = inv;

    // conjugate each A to the integer matrix M^{-1} A M and validate
    ActionSpec sigma;
    for (std::size_t h = 0; h < orthogonal_.size(); ++h) {
        IntMatrix im;
        im.dim = dim;
        im.data.assign(dd, 0);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                double acc = 0.0;
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j)
                        acc += inv[static_cast<std::size_t>(r) * dim + i] *
                               orthogonal_[h][static_cast<std::size_t>(i) * dim + j] *
                               m_[static_cast<std::size_t>(j) * dim + c];
                double rounded = std::round(acc);
                if (std::abs(acc - rounded) > kIntegrality)
                    throw std::invalid_argument(
                        "H matrix " + std::to_string(h) +
                        " does not preserve the lattice (M^{-1} A M is not integral)");
                im.at(r, c) = static_cast<std::int64_t>(rounded);
            }
        sigma.matrices.push_back(std::move(im));
    }

    // Cayley table of H from the matrices themselves
    auto find_index = [&](const std::vector<double>& prod) {
        for (std::size_t h = 0; h < orthogonal_.size(); ++h) {
            double diff = 0.0;
            for (std::size_t i = 0; i < dd; ++i)
                diff = std::max(diff, std::abs(prod[i] - orthogonal_[h][i]));
            if (diff <= 1e-9) return static_cast<int>(h);
        }
        throw std::invalid_argument("H is not closed under multiplication");
    };
    std::vector<std::vector<int>> table(orthogonal_.size(),
                                        std::vector<int>(orthogonal_.size(), 0));
    for (std::size_t a = 0; a < orthogonal_.size(); ++a)
        for (std::size_t b = 0; b < orthogonal_.size(); ++b) {
            std::vector<double> prod(dd, 0.0);
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) {
                    double acc = 0.0;
                    for (int k = 0; k < dim; ++k)
                        acc += orthogonal_[a][static_cast<std::size_t>(r) * dim + k] *
                               orthogonal_[b][static_cast<std::size_t>(k) * dim + c];
                    prod[static_cast<std::size_t>(r) * dim + c] = acc;
                }
            table[a][b] = find_index(prod);
        }

    group_ = Group::semidirect(AbelianGroupSpec::lattice(dim), FiniteGroupTable(std::move(table)),
                               std::move(sigma));
}

CrystalGroupSpec CrystalGroupSpec::dihedral_infinite() {
    return CrystalGroupSpec(1, {1.0}, {{1.0}, {-1.0}});
}

std::vector<double> CrystalGroupSpec::translation(const NVec& k) const {
    std::vector<double> v(k.begin(), k.end());
    return mat_vec(m_, dim_, v);
}

double quasi_regular_apply(const CrystalGroupSpec& crystal, const GammaElement& gamma,
                           const Generator& f, const std::vector<double>& t) {
    std::vector<double> shifted = t;
    std::vector<double> n = crystal.translation(gamma.n);
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= n[i];
    return f.eval(mat_transpose_vec(crystal.orthogonal(gamma.h), crystal.dim(), shifted));
}

OrbitFunction::OrbitFunction(CrystalGroupSpec crystal, Generator base)
    : crystal_(std::move(crystal)), base_(std::move(base)) {}

OrbitFunction::OrbitFunction(CrystalGroupSpec crystal, Generator base,
                             const GammaSignal& coefficients)
    : OrbitFunction(std::move(crystal), std::move(base)) {
    coefficients.for_each(
        [&](const GammaElement& gamma, const Scalar& v) { terms_.emplace_back(gamma, v); });
}

void OrbitFunction::add_term(const GammaElement& gamma, const Scalar& weight) {
    terms_.emplace_back(gamma, weight);
}

double OrbitFunction::eval(const std::vector<double>& t) const {
    double acc = 0.0;
    for (const auto& [gamma, w] : terms_)
        acc += w.value().real() * quasi_regular_apply(crystal_, gamma, base_, t);
    return acc;
}

std::optional<Rational> OrbitFunction::eval_exact1(const Rational& t) const {
    if (crystal_.dim() != 1) return std::nullopt;
    if (std::abs(crystal_.lattice_matrix()[0] - 1.0) != 0.0) return std::nullopt;
    Rational acc(0);
    for (const auto& [gamma, w] : terms_) {
        if (!w.is_exact() || !w.exact().is_real()) return std::nullopt;
        // A^T (t - n) with A = +-1
        Rational arg = t - Rational(gamma.n[0]);
        if (crystal_.orthogonal(gamma.h)[0] < 0) arg = -arg;
        auto v = base_.eval_exact({arg});
        if (!v) return std::nullopt;
        acc += w.exact().re * *v;
    }
    return acc;
}

SupportBox OrbitFunction::support() const {
    const int d = crystal_.dim();
    SupportBox out;
    out.lo.assign(static_cast<std::size_t>(d), std::numeric_limits<double>::infinity());
    out.hi.assign(static_cast<std::size_t>(d), -std::numeric_limits<double>::infinity());
    const SupportBox& base = base_.support();
    for (const auto& [gamma, w] : terms_) {
        if (w.is_zero()) continue;
        // image of the base box under t -> A t + n: map each corner
        std::vector<double> n = crystal_.translation(gamma.n);
        const auto& A = crystal_.orthogonal(gamma.h);
        for (std::size_t corner = 0; corner < (std::size_t{1} << d); ++corner) {
            std::vector<double> pt(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i)
                pt[static_cast<std::size_t>(i)] =
                    ((corner >> i) & 1) ? base.hi[static_cast<std::size_t>(i)]
                                        : base.lo[static_cast<std::size_t>(i)];
            std::vector<double> mapped = mat_vec(A, d, pt);
            for (int i = 0; i < d; ++i) {
                mapped[static_cast<std::size_t>(i)] += n[static_cast<std::size_t>(i)];
                out.lo[static_cast<std::size_t>(i)] =
                    std::min(out.lo[static_cast<std::size_t>(i)], mapped[static_cast<std::size_t>(i)]);
                out.hi[static_cast<std::size_t>(i)] =
                    std::max(out.hi[static_cast<std::size_t>(i)], mapped[static_cast<std::size_t>(i)]);
            }
        }
    }
    return out;
}

OrbitFunction OrbitFunction::translated(const GammaElement& gamma) const {
    OrbitFunction out(crystal_, base_);
    const Group& grp = *crystal_.group();
    for (const auto& [eta, w] : terms_) out.add_term(grp.multiply(gamma, eta), w);
    return out;
}

GammaSignal pointwise_sample_signal(const CrystalGroupSpec& crystal, const Generator& phi,
                                    const std::vector<Rational>& p) {
    const Group& grp = *crystal.group();
    const int d = crystal.dim();
    GammaSignal out(crystal.group());

    std::vector<double> pd(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) pd[i] = p[i].to_double();

    // exact path: unit lattice, signed-permutation H, rational p, exact phi
    bool exact_ok = true;
    for (int i = 0; i < d * d; ++i) {
        double v = crystal.lattice_matrix()[static_cast<std::size_t>(i)];
        exact_ok &= v == std::round(v);
    }

    const SupportBox& box = phi.support();
    for (int h = 0; h < grp.kappa(); ++h) {
        const auto& A = crystal.orthogonal(h);
        bool a_integral = true;
        for (int i = 0; i < d * d; ++i)
            a_integral &= A[static_cast<std::size_t>(i)] ==
                          std::round(A[static_cast<std::size_t>(i)]);

        // [U(k,h) phi](p) != 0 needs p - Mk in A * box; bound k per axis
        // through the corners of A * box.
        std::vector<double> lo(static_cast<std::size_t>(d),
                               std::numeric_limits<double>::infinity());
        std::vector<double> hi(static_cast<std::size_t>(d),
                               -std::numeric_limits<double>::infinity());
        for (std::size_t corner = 0; corner < (std::size_t{1} << d); ++corner) {
            std::vector<double> pt(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i)
                pt[static_cast<std::size_t>(i)] = ((corner >> i) & 1)
                                                      ? box.hi[static_cast<std::size_t>(i)]
                                                      : box.lo[static_cast<std::size_t>(i)];
            std::vector<double> img = mat_vec(A, d, pt);
            for (int i = 0; i < d; ++i) {
                lo[static_cast<std::size_t>(i)] =
                    std::min(lo[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(i)]);
                hi[static_cast<std::size_t>(i)] =
                    std::max(hi[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(i)]);
            }
        }
        // k ranges over M^{-1}(p - A*box): push the corners of the n-space
        // interval through M^{-1} and round outward
        std::vector<std::int64_t> klo(static_cast<std::size_t>(d)), khi(static_cast<std::size_t>(d));
        {
            std::vector<double> kmin(static_cast<std::size_t>(d),
                                     std::numeric_limits<double>::infinity());
            std::vector<double> kmax(static_cast<std::size_t>(d),
                                     -std::numeric_limits<double>::infinity());
            for (std::size_t corner = 0; corner < (std::size_t{1} << d); ++corner) {
                std::vector<double> n(static_cast<std::size_t>(d));
                for (int i = 0; i < d; ++i)
                    n[static_cast<std::size_t>(i)] =
                        pd[static_cast<std::size_t>(i)] - (((corner >> i) & 1)
                                                               ? lo[static_cast<std::size_t>(i)]
                                                               : hi[static_cast<std::size_t>(i)]);
                std::vector<double> k_real = mat_vec(crystal.lattice_inverse(), d, n);
                for (int i = 0; i < d; ++i) {
                    kmin[static_cast<std::size_t>(i)] =
                        std::min(kmin[static_cast<std::size_t>(i)], k_real[static_cast<std::size_t>(i)]);
                    kmax[static_cast<std::size_t>(i)] =
                        std::max(kmax[static_cast<std::size_t>(i)], k_real[static_cast<std::size_t>(i)]);
                }
            }
            for (int i = 0; i < d; ++i) {
                klo[static_cast<std::size_t>(i)] =
                    static_cast<std::int64_t>(std::floor(kmin[static_cast<std::size_t>(i)])) - 1;
                khi[static_cast<std::size_t>(i)] =
                    static_cast<std::int64_t>(std::ceil(kmax[static_cast<std::size_t>(i)])) + 1;
            }
        }

        NVec k(static_cast<std::size_t>(d));
        std::function<void(int)> rec = [&](int axis) {
            if (axis == d) {
                GammaElement gamma{k, h};
                if (exact_ok && a_integral) {
                    // A^T (p - k) stays rational
                    std::vector<Rational> arg(static_cast<std::size_t>(d), Rational(0));
                    std::vector<Rational> shifted(static_cast<std::size_t>(d));
                    std::vector<double> n = crystal.translation(k);
                    for (int i = 0; i < d; ++i)
                        shifted[static_cast<std::size_t>(i)] =
                            p[static_cast<std::size_t>(i)] -
                            Rational(static_cast<std::int64_t>(std::llround(n[static_cast<std::size_t>(i)])));
                    for (int r = 0; r < d; ++r)
                        for (int c = 0; c < d; ++c)
                            arg[static_cast<std::size_t>(c)] +=
                                Rational(static_cast<std::int64_t>(
                                    std::llround(A[static_cast<std::size_t>(r) * d + c]))) *
                                shifted[static_cast<std::size_t>(r)];
                    if (auto v = phi.eval_exact(arg)) {
                        if (!v->is_zero()) out.set(gamma, Scalar(*v)); // real: conj is itself
                        return;
                    }
                }
                double value = quasi_regular_apply(crystal, gamma, phi, pd);
                if (value != 0.0) out.set(gamma, Scalar(value)); // conj of a real value
                return;
            }
            for (std::int64_t v = klo[static_cast<std::size_t>(axis)];
                 v <= khi[static_cast<std::size_t>(axis)]; ++v) {
                k[static_cast<std::size_t>(axis)] = v;
                rec(axis + 1);
            }
        };
        rec(0);
    }
    return out;
}

namespace {

/// Polynomial composition q(t) = poly(s t + c) for s = +-1-ish integers and
/// rational c, via binomial expansion.
std::vector<Rational> compose_affine(const std::vector<Rational>& coeffs, const Rational& s,
                                     const Rational& c) {
    std::vector<Rational> out(coeffs.size(), Rational(0));
    std::vector<Rational> power{Rational(1)}; // (s t + c)^k
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (std::size_t j = 0; j < power.size(); ++j) out[j] += coeffs[k] * power[j];
        // power *= (s t + c)
        std::vector<Rational> next(power.size() + 1, Rational(0));
        for (std::size_t j = 0; j < power.size(); ++j) {
            next[j] += power[j] * c;
            next[j + 1] += power[j] * s;
        }
        power = std::move(next);
    }
    return out;
}

Rational integrate_poly(const std::vector<Rational>& coeffs, const Rational& a,
                        const Rational& b) {
    Rational acc(0);
    Rational pa = a, pb = b;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        acc += coeffs[k] * (pb - pa) / Rational(static_cast<std::int64_t>(k) + 1);
        pa *= a;
        pb *= b;
    }
    return acc;
}

std::vector<Rational> multiply_polys(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// Exact integral of phi(t) * psi(s t + c) over the intersection of their
/// supports; both piecewise polynomials with rational data.
Rational exact_pair_integral(const PiecewisePolynomial& phi, const PiecewisePolynomial& psi,
                             const Rational& s, const Rational& c) {
    // collect breakpoints: phi's own plus the preimages of psi's
    std::vector<Rational> cuts;
    for (const auto& piece : phi.pieces()) {
        cuts.push_back(piece.lo);
        cuts.push_back(piece.hi);
    }
    for (const auto& piece : psi.pieces()) {
        // s t + c = x -> t = (x - c)/s
        cuts.push_back((piece.lo - c) / s);
        cuts.push_back((piece.hi - c) / s);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Rational acc(0);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational lo = cuts[i], hi = cuts[i + 1];
        if (!(lo < hi)) continue;
        Rational mid = (lo + hi) / Rational(2);
        // locate the active pieces at the midpoint
        const PiecewisePolynomial::Piece* fp = nullptr;
        for (const auto& piece : phi.pieces())
            if (piece.lo <= mid && mid <= piece.hi) fp = &piece;
        Rational target = s * mid + c;
        const PiecewisePolynomial::Piece* gp = nullptr;
        for (const auto& piece : psi.pieces())
            if (piece.lo <= target && target <= piece.hi) gp = &piece;
        if (fp == nullptr || gp == nullptr) continue;
        std::vector<Rational> composed = compose_affine(gp->coeffs, s, c);
        acc += integrate_poly(multiply_polys(fp->coeffs, composed), lo, hi);
    }
    return acc;
}

} // namespace

GammaSignal average_sample_signal(const CrystalGroupSpec& crystal, const Generator& phi,
                                  const Generator& psi, const QuadratureSpec& quad) {
    const Group& grp = *crystal.group();
    const int d = crystal.dim();
    GammaSignal out(crystal.group());

    const PiecewisePolynomial* phi_poly = phi.as_piecewise();
    const PiecewisePolynomial* psi_poly = psi.as_piecewise();
    const bool exact = quad.allow_exact && d == 1 && phi_poly != nullptr && psi_poly != nullptr &&
                       phi_poly->degree() <= 12 && psi_poly->degree() <= 12 &&
                       crystal.lattice_matrix()[0] == 1.0;

    if (!exact && phi_poly != nullptr && psi_poly != nullptr) {
        int needed = (phi_poly->degree() + psi_poly->degree()) / 2 + 1;
        if (quad.order_per_unit < needed)
            throw std::invalid_argument(
                "quadrature order " + std::to_string(quad.order_per_unit) +
                " is insufficient for the declared polynomial degrees; need >= " +
                std::to_string(needed));
    }

    if (d != 1)
        throw std::invalid_argument("average sampling ships for d = 1 groups only");

    const SupportBox& phi_box = phi.support();
    const SupportBox& psi_box = psi.support();
    auto quad_rule = linalg::gauss_legendre(quad.order_per_unit);

    for (int h = 0; h < grp.kappa(); ++h) {
        // f_psi(k, h) = conj(<phi, U((k,h)^{-1}) psi>); U(eta^{-1}) psi (t) =
        // psi(A t + n) for eta = (k, h), n = M k.
        const double a = crystal.orthogonal(h)[0];
        // enumerate k such that the supports of phi and psi(a . + n) intersect
        double m = crystal.lattice_matrix()[0];
        double lo_k = (psi_box.lo[0] - a * (a > 0 ? phi_box.hi[0] : phi_box.lo[0]));
        double hi_k = (psi_box.hi[0] - a * (a > 0 ? phi_box.lo[0] : phi_box.hi[0]));
        std::int64_t klo = static_cast<std::int64_t>(std::floor(std::min(lo_k, hi_k) / m)) - 1;
        std::int64_t khi = static_cast<std::int64_t>(std::ceil(std::max(lo_k, hi_k) / m)) + 1;
        for (std::int64_t k = klo; k <= khi; ++k) {
            double n = m * static_cast<double>(k);
            if (exact) {
                Rational s((a < 0) ? -1 : 1);
                Rational value = exact_pair_integral(*phi_poly, *psi_poly, s,
                                                     Rational(k)); // c = n = k for M = 1
                if (!value.is_zero()) out.set({{k}, h}, Scalar(value));
                continue;
            }
            // numeric: integrate phi(t) psi(a t + n) over the overlap,
            // cutting at every breakpoint so the rule sees smooth pieces
            double lo = phi_box.lo[0], hi = phi_box.hi[0];
            double pre_lo = (psi_box.lo[0] - n) / a, pre_hi = (psi_box.hi[0] - n) / a;
            lo = std::max(lo, std::min(pre_lo, pre_hi));
            hi = std::min(hi, std::max(pre_lo, pre_hi));
            if (!(lo < hi)) continue;

            std::vector<double> cuts{lo, hi};
            if (phi_poly != nullptr)
                for (const auto& piece : phi_poly->pieces()) cuts.push_back(piece.lo.to_double());
            if (psi_poly != nullptr)
                for (const auto& piece : psi_poly->pieces())
                    cuts.push_back((piece.lo.to_double() - n) / a);
            for (double extra = std::ceil(lo); extra < hi; extra += 1.0) cuts.push_back(extra);
            std::sort(cuts.begin(), cuts.end());
            cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

            double acc = 0.0;
            for (std::size_t cell = 0; cell + 1 < cuts.size(); ++cell) {
                double ca = std::max(lo, cuts[cell]);
                double cb = std::min(hi, cuts[cell + 1]);
                if (!(ca < cb)) continue;
                for (std::size_t q = 0; q < quad_rule.nodes.size(); ++q) {
                    double t = 0.5 * (ca + cb) + 0.5 * (cb - ca) * quad_rule.nodes[q];
                    acc += 0.5 * (cb - ca) * quad_rule.weights[q] * phi.eval1(t) *
                           psi.eval1(a * t + n);
                }
            }
            if (acc != 0.0) out.set({{k}, h}, Scalar(acc));
        }
    }
    return out;
}

double rkhs_bound(const CrystalGroupSpec& crystal, const Generator& phi,
                  const std::vector<std::vector<double>>& probe_points) {
    const Group& grp = *crystal.group();
    const int d = crystal.dim();
    double worst = 0.0;
    for (const auto& t : probe_points) {
        double acc = 0.0;
        for (int h = 0; h < grp.kappa(); ++h) {
            // only lattice translations with t - n in A * box contribute
            const auto& A = crystal.orthogonal(h);
            const SupportBox& box = phi.support();
            std::vector<double> lo(static_cast<std::size_t>(d),
                                   std::numeric_limits<double>::infinity());
            std::vector<double> hi(static_cast<std::size_t>(d),
                                   -std::numeric_limits<double>::infinity());
            for (std::size_t corner = 0; corner < (std::size_t{1} << d); ++corner) {
                std::vector<double> pt(static_cast<std::size_t>(d));
                for (int i = 0; i < d; ++i)
                    pt[static_cast<std::size_t>(i)] = ((corner >> i) & 1)
                                                          ? box.hi[static_cast<std::size_t>(i)]
                                                          : box.lo[static_cast<std::size_t>(i)];
                auto img = mat_vec(A, d, pt);
                for (int i = 0; i < d; ++i) {
                    lo[static_cast<std::size_t>(i)] =
                        std::min(lo[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(i)]);
                    hi[static_cast<std::size_t>(i)] =
                        std::max(hi[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(i)]);
                }
            }
            // k ranges over M^{-1}(t - A*box)
            std::vector<std::int64_t> klo(static_cast<std::size_t>(d)),
                khi(static_cast<std::size_t>(d));
            {
                std::vector<double> kmin(static_cast<std::size_t>(d),
                                         std::numeric_limits<double>::infinity());
                std::vector<double> kmax(static_cast<std::size_t>(d),
                                         -std::numeric_limits<double>::infinity());
                for (std::size_t corner = 0; corner < (std::size_t{1} << d); ++corner) {
                    std::vector<double> n(static_cast<std::size_t>(d));
                    for (int i = 0; i < d; ++i)
                        n[static_cast<std::size_t>(i)] =
                            t[static_cast<std::size_t>(i)] -
                            (((corner >> i) & 1) ? lo[static_cast<std::size_t>(i)]
                                                 : hi[static_cast<std::size_t>(i)]);
                    std::vector<double> k_real = mat_vec(crystal.lattice_inverse(), d, n);
                    for (int i = 0; i < d; ++i) {
                        kmin[static_cast<std::size_t>(i)] = std::min(
                            kmin[static_cast<std::size_t>(i)], k_real[static_cast<std::size_t>(i)]);
                        kmax[static_cast<std::size_t>(i)] = std::max(
                            kmax[static_cast<std::size_t>(i)], k_real[static_cast<std::size_t>(i)]);
                    }
                }
                for (int i = 0; i < d; ++i) {
                    klo[static_cast<std::size_t>(i)] =
                        static_cast<std::int64_t>(std::floor(kmin[static_cast<std::size_t>(i)])) - 1;
                    khi[static_cast<std::size_t>(i)] =
                        static_cast<std::int64_t>(std::ceil(kmax[static_cast<std::size_t>(i)])) + 1;
                }
            }
            NVec k(static_cast<std::size_t>(d));
            std::function<void(int)> rec = [&](int axis) {
                if (axis == d) {
                    double v = quasi_regular_apply(crystal, {k, h}, phi, t);
                    acc += v * v;
                    return;
                }
                for (std::int64_t v = klo[static_cast<std::size_t>(axis)];
                     v <= khi[static_cast<std::size_t>(axis)]; ++v) {
                    k[static_cast<std::size_t>(axis)] = v;
                    rec(axis + 1);
                }
            };
            rec(0);
        }
        worst = std::max(worst, acc);
    }
    return worst;
}

OrbitFunction build_interpolator(const CrystalGroupSpec& crystal, const Generator& phi,
                                 const GammaSignal& g) {
    return OrbitFunction(crystal, phi, g);
}

SampleMap take_pointwise_samples(const OrbitFunction& f, const std::vector<Rational>& p,
                                 std::int64_t window) {
    const CrystalGroupSpec& crystal = f.crystal();
    const Group& grp = *crystal.group();
    const int d = crystal.dim();
    SampleMap samples;
    std::vector<double> pd(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) pd[i] = p[i].to_double();

    NVec k(static_cast<std::size_t>(d));
    for (int h = 0; h < grp.kappa(); ++h) {
        std::function<void(int)> rec = [&](int axis) {
            if (axis == d) {
                // L_p f(k, h) = f(A p + M k)
                std::vector<double> t = mat_vec(crystal.orthogonal(h), d, pd);
                std::vector<double> n = crystal.translation(k);
                for (int i = 0; i < d; ++i) t[static_cast<std::size_t>(i)] += n[static_cast<std::size_t>(i)];
                GammaElement gamma{k, h};
                if (d == 1 && crystal.lattice_matrix()[0] == 1.0) {
                    Rational arg = (crystal.orthogonal(h)[0] < 0 ? -p[0] : p[0]) + Rational(k[0]);
                    if (auto exact = f.eval_exact1(arg)) {
                        samples[gamma] = Scalar(*exact);
                        return;
                    }
                }
                samples[gamma] = Scalar(f.eval(t));
                return;
            }
            for (std::int64_t v = -window; v <= window; ++v) {
                k[static_cast<std::size_t>(axis)] = v;
                rec(axis + 1);
            }
        };
        rec(0);
    }
    return samples;
}

double reconstruct(const CrystalGroupSpec& crystal, const SampleMap& samples,
                   const OrbitFunction& interpolator, const std::vector<double>& t) {
    double acc = 0.0;
    const SupportBox box = interpolator.support();
    const int d = crystal.dim();
    for (const auto& [gamma, value] : samples) {
        // Phi[A^T (t - n)] vanishes unless A^T (t - n) lies in the support
        std::vector<double> shifted = t;
        std::vector<double> n = crystal.translation(gamma.n);
        for (int i = 0; i < d; ++i) shifted[static_cast<std::size_t>(i)] -= n[static_cast<std::size_t>(i)];
        std::vector<double> arg = mat_transpose_vec(crystal.orthogonal(gamma.h), d, shifted);
        if (!box.contains(arg, 1e-12)) continue;
        acc += value.value().real() * interpolator.eval(arg);
    }
    return acc;
}

GammaSignal coefficients_from_samples(const SampleMap& samples, const GammaSignal& g) {
    GammaSignal s(g.group());
    for (const auto& [gamma, value] : samples) s.set(gamma, value);
    return convolve(s, g);
}

namespace {

Generator spline_phi() {
    // (16 t^2 - 13) t^2 (2 - t)^2 = 16 t^6 - 64 t^5 + 51 t^4 + 52 t^3 - 52 t^2
    PiecewisePolynomial::Piece piece;
    piece.lo = Rational(0);
    piece.hi = Rational(2);
    piece.coeffs = {Rational(0), Rational(0), Rational(-52), Rational(52),
                    Rational(51), Rational(-64), Rational(16)};
    return Generator::piecewise(PiecewisePolynomial({piece}));
}

} // namespace

Generator demo_spline_generator() { return spline_phi(); }

SplineSamplingCase dinf_spline_case(const Rational& p, const Generator& phi,
                                    const Tolerances& tol) {
    if (!(Rational(0) < p && p < Rational(1, 2)))
        throw std::invalid_argument("p must lie in (0, 1/2)");
    if (phi.dim() != 1 || phi.support().lo[0] < -1e-12 || phi.support().hi[0] > 2.0 + 1e-12)
        throw std::invalid_argument("the spline case needs supp phi inside [0, 2]");
    if (const auto* poly = phi.as_piecewise(); poly != nullptr)
        if (poly->max_breakpoint_jump() > 1e-9)
            throw std::invalid_argument("the spline case needs a continuous generator");

    CrystalGroupSpec crystal = CrystalGroupSpec::dihedral_infinite();

    SplineSamplingCase sc(p, phi, crystal.group());
    auto value_at = [&](const Rational& t) -> Scalar {
        if (auto v = phi.eval_exact({t})) return Scalar(*v);
        return Scalar(phi.eval({t.to_double()}));
    };
    Scalar vp = value_at(p);
    Scalar vp1 = value_at(p + Rational(1));
    Scalar v1mp = value_at(Rational(1) - p);
    Scalar v2mp = value_at(Rational(2) - p);
    if (vp.is_exact()) sc.phi_p = vp.exact().re;
    if (vp1.is_exact()) sc.phi_p1 = vp1.exact().re;
    if (v1mp.is_exact()) sc.phi_1mp = v1mp.exact().re;
    if (v2mp.is_exact()) sc.phi_2mp = v2mp.exact().re;

    sc.sampling_signal = pointwise_sample_signal(crystal, phi, {p});

    sc.C = vp * vp + vp1 * vp1 - v1mp * v1mp - v2mp * v2mp;
    sc.D = vp * vp1 - v1mp * v2mp;
    double cmag = std::abs(sc.C.value().real());
    double dmag = std::abs(sc.D.value().real());
    sc.feasible = cmag > 2.0 * dmag;
    sc.compact_dual = sc.D.is_zero();

    // det F(z) must equal C + D (z + z^{-1}); exact on the Laurent form when
    // available, with a grid cross-check either way
    FrequencyGrid fine = FrequencyGrid::lattice(1, 1 << 12);
    TransferMatrix F = TransferMatrix::from_signal(sc.sampling_signal, fine);
    if (F.exact().has_value() && sc.C.is_exact() && sc.D.is_exact()) {
        LaurentPoly expected(1);
        expected.add_term({0}, sc.C);
        expected.add_term({-1}, sc.D);
        expected.add_term({1}, sc.D);
        if (!F.exact()->determinant().equal_exact(expected))
            throw std::logic_error("spline determinant does not match C + D (z + z^{-1})");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < fine.size(); ++i) {
        double w = fine.point(i).w[0];
        cplx expected = sc.C.value() + sc.D.value() * 2.0 * std::cos(w);
        cplx det = linalg::determinant({F.at(i), 4}, 2);
        worst = std::max(worst, std::abs(det - expected));
    }
    sc.det_consistency_error = worst;

    sc.analysis = riesz_analyze(sc.sampling_signal, tol);
    FrequencyGrid bound_grid = FrequencyGrid::lattice(1, std::int64_t{1} << 16);
    auto closed = dihedral_closed_bounds(sc.sampling_signal, bound_grid);
    sc.closed_A_eig = closed.first;
    sc.closed_B_eig = closed.second;

    sc.cond_eig_sqrt = std::sqrt(sc.closed_B_eig / sc.closed_A_eig);
    sc.cond_sing_sqrt = std::sqrt(std::sqrt(sc.closed_B_eig) / std::sqrt(sc.closed_A_eig));
    sc.sqrt_B_sing = std::sqrt(std::sqrt(sc.closed_B_eig));
    sc.condition_scalings_disagree = true;

    if (sc.feasible) {
        sc.dual = dual_generator(sc.sampling_signal, tol);
        sc.interpolator = build_interpolator(crystal, phi, sc.dual->generator);
    }
    return sc;
}

} // namespace rieszrep
