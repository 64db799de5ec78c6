#include "rieszrep/dual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rieszrep/linalg.hpp"

namespace rieszrep {

namespace {

/// Spectral dual values on the grid: x(xi) solving F*(xi) x = e1, stored as
/// kappa entries per point. Throws singular_transfer when a solve fails or
/// |det| dips under the floor.
std::vector<cplx> solve_dual_on_grid(const TransferMatrix& F, const Tolerances& tol,
                                     double* worst_det_out) {
    const int kappa = F.kappa();
    const std::size_t block = static_cast<std::size_t>(kappa) * kappa;
    const std::size_t points = F.grid().size();

    std::vector<cplx> out(points * static_cast<std::size_t>(kappa));
    double worst_det = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points; ++i) {
        const cplx* m = F.at(i);
        std::vector<cplx> fh(block);
        for (int r = 0; r < kappa; ++r)
            for (int c = 0; c < kappa; ++c)
                fh[static_cast<std::size_t>(r) * kappa + c] =
                    std::conj(m[static_cast<std::size_t>(c) * kappa + r]);
        double det = std::abs(linalg::determinant(fh, kappa));
        worst_det = std::min(worst_det, det);
        std::vector<cplx> rhs(static_cast<std::size_t>(kappa), cplx{0.0, 0.0});
        rhs[0] = {1.0, 0.0};
        auto info = linalg::solve(std::move(fh), kappa, rhs);
        if (info.singular || det <= tol.det_floor) {
            CharacterPoint xi = F.grid().point(i);
            std::string where;
            for (double w : xi.w) where += (where.empty() ? "w = " : ", ") + std::to_string(w);
            for (auto k : xi.k) where += (where.empty() ? "k = " : ", ") + std::to_string(k);
            throw singular_transfer("transfer matrix is singular or nearly singular at " + where +
                                        " (|det| = " + std::to_string(det) + ")",
                                    xi, det);
        }
        std::copy(rhs.begin(), rhs.end(),
                  out.begin() + static_cast<std::ptrdiff_t>(i * static_cast<std::size_t>(kappa)));
    }
    if (worst_det_out != nullptr) *worst_det_out = worst_det;
    return out;
}

GammaSignal dual_from_grid_finite(const GammaSignal& f, const TransferMatrix& F,
                                  const std::vector<cplx>& spectral) {
    const Group& grp = *f.group();
    const int kappa = grp.kappa();
    const std::size_t points = F.grid().size();
    GammaSignal g(f.group());
    for (int h = 0; h < kappa; ++h)
        for (std::int64_t idx = 0; idx < grp.N().element_count(); ++idx) {
            NVec n = grp.N().element_at(idx);
            cplx acc{0.0, 0.0};
            for (std::size_t i = 0; i < points; ++i)
                acc += spectral[i * static_cast<std::size_t>(kappa) + static_cast<std::size_t>(h)] *
                       grp.character_value(F.grid().point(i), n);
            g.set({n, h}, Scalar(acc / static_cast<double>(points)));
        }
    return g;
}

/// Inverse FFT of the grid dual; coefficients for n in [-G/2, G/2)^d.
/// w_j = -pi + 2pi j / G, so c(n) = (-1)^{sum n_k} IDFT[g](n mod G).
void dual_from_grid_lattice(const GammaSignal& f, const TransferMatrix& F,
                            const std::vector<cplx>& spectral, DualResult& result) {
    const Group& grp = *f.group();
    const int kappa = grp.kappa();
    const int d = grp.dimension();
    const std::size_t G = static_cast<std::size_t>(F.grid().points_per_dim());
    const std::size_t points = F.grid().size();
    std::vector<std::size_t> shape(static_cast<std::size_t>(d), G);

    GammaSignal g(f.group());
    double discarded = 0.0;
    std::size_t kept = 0;

    for (int h = 0; h < kappa; ++h) {
        std::vector<cplx> data(points);
        for (std::size_t i = 0; i < points; ++i)
            data[i] = spectral[i * static_cast<std::size_t>(kappa) + static_cast<std::size_t>(h)];
        linalg::fft_nd(data, shape, +1);
        for (auto& v : data) v /= static_cast<double>(points);

        // locate the largest coefficient magnitude for the truncation floor
        double peak = 0.0;
        for (const auto& v : data) peak = std::max(peak, std::abs(v));
        const double floor = 1e-12 * peak;

        for (std::size_t flat = 0; flat < points; ++flat) {
            // unravel the row-major index and shift each axis into [-G/2, G/2)
            NVec n(static_cast<std::size_t>(d));
            std::size_t rem = flat;
            std::int64_t parity = 0;
            for (int axis = d; axis-- > 0;) {
                std::int64_t j = static_cast<std::int64_t>(rem % G);
                rem /= G;
                std::int64_t nk = j < static_cast<std::int64_t>(G / 2)
                                      ? j
                                      : j - static_cast<std::int64_t>(G);
                n[static_cast<std::size_t>(axis)] = nk;
                parity += nk;
            }
            cplx value = data[flat];
            if (parity % 2 != 0) value = -value;
            if (std::abs(value) <= floor) {
                discarded += std::norm(value);
                continue;
            }
            g.set({n, h}, Scalar(value));
            ++kept;
        }
    }

    result.generator = std::move(g);
    result.tail_energy = discarded;
    result.kept = kept;
}

} // namespace

std::optional<GammaSignal> dual_exact_laurent(const GammaSignal& f) {
    const Group& grp = *f.group();
    if (grp.N().is_finite()) return std::nullopt;
    if (!f.is_exact()) return std::nullopt;

    const int kappa = grp.kappa();
    LaurentMatrix F(kappa, grp.dimension());
    for (int h = 0; h < kappa; ++h)
        for (int l = 0; l < kappa; ++l) F.at(h, l) = LaurentPoly::from_sequence(block(f, h, l));

    LaurentMatrix FH = F.conjugate_transpose();
    LaurentPoly det = FH.determinant();
    auto mono = det.as_monomial();
    if (!mono || mono->second.is_zero()) return std::nullopt;

    LaurentMatrix adj = FH.adjugate();
    GammaSignal g(f.group());
    for (int h = 0; h < kappa; ++h) {
        LaurentPoly ghat = adj.at(h, 0).divide_by_monomial(mono->first, mono->second);
        for (const auto& [n, c] : ghat.terms()) g.set({n, h}, c);
    }
    return g;
}

DualResult dual_generator(const GammaSignal& f, const Tolerances& tol) {
    DualResult result{GammaSignal(f.group())};

    if (auto exact = dual_exact_laurent(f)) {
        result.generator = std::move(*exact);
        result.exact = true;
        AnalysisReport rep = riesz_analyze(f, tol);
        result.worst_det = rep.det_inf;
        if (!rep.riesz)
            throw singular_transfer("signal is not a Riesz generator (ess inf |det F| = " +
                                        std::to_string(rep.det_inf) + ")",
                                    CharacterPoint{}, rep.det_inf);
        return result;
    }

    FrequencyGrid grid = f.group()->N().is_finite()
                             ? FrequencyGrid::finite(f.group())
                             : FrequencyGrid::lattice(f.group()->dimension(), tol.grid);
    TransferMatrix F = TransferMatrix::from_signal(f, grid);
    std::vector<cplx> spectral = solve_dual_on_grid(F, tol, &result.worst_det);

    if (f.group()->N().is_finite()) {
        result.generator = dual_from_grid_finite(f, F, spectral);
        result.kept = result.generator.support_size();
    } else {
        dual_from_grid_lattice(f, F, spectral, result);
    }
    return result;
}

GammaSignal inverse_filter(const GammaSignal& f, const Tolerances& tol) {
    DualResult dual = dual_generator(f, tol);
    GammaSignal h = involution(dual.generator);
    GammaSignal residual = convolve(f, h) - GammaSignal::delta(f.group());
    double err = std::sqrt(residual.norm_squared());
    double allowed = dual.exact ? 1e-12 : std::max(1e-8, 10.0 * std::sqrt(dual.tail_energy));
    if (f.group()->N().is_finite() || dual.exact) {
        if (err > allowed)
            throw std::runtime_error("inverse filter residual " + std::to_string(err) +
                                     " exceeds tolerance");
    }
    return h;
}

BiorthResult biorthogonality_check(const GammaSignal& f, const GammaSignal& g,
                                   std::int64_t window, double atol) {
    const Group& grp = *f.group();
    GammaSignal products = correlate(g, f); // gamma -> <g, L_gamma f>
    BiorthResult res;
    res.worst_gamma = grp.identity();

    auto check = [&](const GammaElement& gamma) {
        Scalar expected = (gamma == grp.identity()) ? Scalar(Rational(1)) : Scalar{};
        double err = std::abs(products.get(gamma).value() - expected.value());
        if (err > res.worst_error) {
            res.worst_error = err;
            res.worst_gamma = gamma;
        }
    };

    if (grp.N().is_finite()) {
        for (const auto& gamma : grp.enumerate()) check(gamma);
    } else {
        // scan the window plus everything in the computed support
        const int d = grp.dimension();
        std::vector<GammaElement> seen;
        products.for_each([&](const GammaElement& gamma, const Scalar&) { seen.push_back(gamma); });
        for (const auto& gamma : seen) check(gamma);
        if (d == 1) {
            for (int h = 0; h < grp.kappa(); ++h)
                for (std::int64_t n = -window; n <= window; ++n) check({{n}, h});
        }
    }
    res.pass = res.worst_error <= atol;
    return res;
}

} // namespace rieszrep
