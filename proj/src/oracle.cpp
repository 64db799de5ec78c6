#include "rieszrep/oracle.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace rieszrep::oracle {

namespace {

using CMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;
using CVector = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, 1>;

CMatrix synthesis_dense(const GammaSignal& f) {
    const Group& grp = *f.group();
    auto elements = grp.enumerate();
    const std::size_t n = elements.size();
    std::map<GammaElement, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[elements[i]] = i;

    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t col = 0; col < n; ++col) {
        // column gamma holds L_gamma f: value f(tau) lands at row gamma * tau
        f.for_each([&](const GammaElement& tau, const Scalar& v) {
            std::size_t row = index.at(grp.multiply(elements[col], tau));
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v.value();
        });
    }
    return m;
}

} // namespace

GammaSignal brute_convolve(const GammaSignal& a, const GammaSignal& f) {
    if (!a.group()->same_group(*f.group()))
        throw std::invalid_argument("brute_convolve: signals live on different groups");
    const Group& grp = *a.group();
    GammaSignal out(a.group());
    a.for_each([&](const GammaElement& eta, const Scalar& av) {
        f.for_each([&](const GammaElement& tau, const Scalar& fv) {
            out.add_to(grp.multiply(eta, tau), av * fv);
        });
    });
    return out;
}

std::vector<std::vector<cplx>> brute_synthesis_matrix(const GammaSignal& f) {
    CMatrix m = synthesis_dense(f);
    std::vector<std::vector<cplx>> out(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(m.cols()));
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r, c);
    }
    return out;
}

std::pair<double, double> synthesis_spectrum(const GammaSignal& f) {
    CMatrix m = synthesis_dense(f);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m.adjoint() * m);
    const auto& ev = es.eigenvalues();
    return {ev(0), ev(ev.size() - 1)};
}

double synthesis_norm(const GammaSignal& f) {
    auto [lo, hi] = synthesis_spectrum(f);
    (void)lo;
    return std::sqrt(hi);
}

std::pair<double, double> truncated_spectrum(const GammaSignal& f, std::int64_t window) {
    const Group& grp = *f.group();
    if (grp.N().is_finite() || grp.dimension() != 1)
        throw std::invalid_argument("truncated_spectrum expects a 1-d lattice group");
    const int kappa = grp.kappa();
    const std::int64_t cols_per_phase = 2 * window + 1;
    const std::size_t ncols = static_cast<std::size_t>(cols_per_phase) * static_cast<std::size_t>(kappa);

    // rows wide enough to hold every translate of the support
    std::int64_t radius = 0;
    f.for_each([&](const GammaElement& g, const Scalar&) {
        radius = std::max(radius, std::abs(g.n[0]));
    });
    const std::int64_t row_window = window + radius;
    const std::int64_t rows_per_phase = 2 * row_window + 1;
    const std::size_t nrows = static_cast<std::size_t>(rows_per_phase) * static_cast<std::size_t>(kappa);

    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(nrows), static_cast<Eigen::Index>(ncols));
    std::size_t col = 0;
    for (int h = 0; h < kappa; ++h) {
        for (std::int64_t n = -window; n <= window; ++n, ++col) {
            GammaElement gamma{{n}, h};
            f.for_each([&](const GammaElement& tau, const Scalar& v) {
                GammaElement target = grp.multiply(gamma, tau);
                if (std::abs(target.n[0]) > row_window) return;
                std::size_t row = static_cast<std::size_t>(target.h) *
                                      static_cast<std::size_t>(rows_per_phase) +
                                  static_cast<std::size_t>(target.n[0] + row_window);
                m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v.value();
            });
        }
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m.adjoint() * m);
    const auto& ev = es.eigenvalues();
    return {ev(0), ev(ev.size() - 1)};
}

GammaSignal brute_dual(const GammaSignal& f) {
    const Group& grp = *f.group();
    auto elements = grp.enumerate();
    CMatrix m = synthesis_dense(f);
    CMatrix gram = m.adjoint() * m;

    Eigen::FullPivLU<CMatrix> lu(gram);
    if (!lu.isInvertible())
        throw std::runtime_error("brute_dual: Gram matrix is singular, not a Riesz basis");

    CVector e = CVector::Zero(static_cast<Eigen::Index>(elements.size()));
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == grp.identity()) e(static_cast<Eigen::Index>(i)) = 1.0;
    CVector x = lu.solve(e);
    CVector g = m * x;

    GammaSignal out(f.group());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        cplx v = g(static_cast<Eigen::Index>(i));
        if (v != cplx{0.0, 0.0}) out.set(elements[i], Scalar(v));
    }
    return out;
}

std::pair<double, double> frame_probe(const GammaSignal& f, int trials, std::uint64_t seed,
                                      std::int64_t window) {
    const Group& grp = *f.group();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        GammaSignal a(f.group());
        if (grp.N().is_finite()) {
            for (const auto& gamma : grp.enumerate())
                a.set(gamma, Scalar(cplx{gauss(rng), gauss(rng)}));
        } else {
            const int d = grp.dimension();
            std::uniform_int_distribution<std::int64_t> coord(-window, window);
            std::uniform_int_distribution<int> hdist(0, grp.kappa() - 1);
            for (int i = 0; i < 12; ++i) {
                NVec n(static_cast<std::size_t>(d));
                for (auto& v : n) v = coord(rng);
                a.add_to({n, hdist(rng)}, Scalar(cplx{gauss(rng), gauss(rng)}));
            }
        }
        double na = a.norm_squared();
        if (na == 0.0) continue;
        double ratio = brute_convolve(a, f).norm_squared() / na;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return {lo, hi};
}

} // namespace rieszrep::oracle
