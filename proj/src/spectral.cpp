#include "rieszrep/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rieszrep/linalg.hpp"

namespace rieszrep {

namespace {

bool is_power_of_two(std::int64_t v) { return v >= 1 && (v & (v - 1)) == 0; }

} // namespace

FrequencyGrid FrequencyGrid::finite(GroupPtr group) {
    if (!group->N().is_finite())
        throw std::invalid_argument("finite grid requires finite N");
    FrequencyGrid g;
    g.finite_ = true;
    g.group_ = std::move(group);
    g.dim_ = g.group_->dimension();
    return g;
}

FrequencyGrid FrequencyGrid::lattice(int dim, std::int64_t points_per_dim) {
    if (points_per_dim < 2 || !is_power_of_two(points_per_dim))
        throw std::invalid_argument("lattice grid size must be a power of two >= 2");
    FrequencyGrid g;
    g.finite_ = false;
    g.dim_ = dim;
    g.per_dim_ = points_per_dim;
    return g;
}

std::size_t FrequencyGrid::size() const {
    if (finite_) return static_cast<std::size_t>(group_->N().element_count());
    std::size_t total = 1;
    for (int i = 0; i < dim_; ++i) total *= static_cast<std::size_t>(per_dim_);
    return total;
}

CharacterPoint FrequencyGrid::point(std::size_t idx) const {
    if (finite_) return {group_->N().element_at(static_cast<std::int64_t>(idx)), {}};
    CharacterPoint p;
    p.w.resize(static_cast<std::size_t>(dim_));
    std::size_t rem = idx;
    for (int i = dim_; i-- > 0;) {
        std::size_t j = rem % static_cast<std::size_t>(per_dim_);
        rem /= static_cast<std::size_t>(per_dim_);
        p.w[static_cast<std::size_t>(i)] =
            -std::numbers::pi +
            2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(per_dim_);
    }
    return p;
}

namespace {

cplx transform_at(const Group& grp, const NSequence& seq, const CharacterPoint& xi) {
    cplx acc{0.0, 0.0};
    seq.for_each([&](const NVec& n, const Scalar& v) {
        // <-n, xi> = conj(<n, xi>)
        acc += v.value() * std::conj(grp.character_value(xi, n));
    });
    return acc;
}

} // namespace

TransferMatrix TransferMatrix::from_signal(const GammaSignal& f, const FrequencyGrid& grid) {
    const GroupPtr group = f.group();
    const int kappa = group->kappa();

    TransferMatrix tm;
    tm.kappa_ = kappa;
    tm.grid_ = grid;

    if (!group->N().is_finite()) {
        LaurentMatrix exact(kappa, group->dimension());
        bool all_exact = true;
        for (int h = 0; h < kappa; ++h)
            for (int l = 0; l < kappa; ++l) {
                exact.at(h, l) = LaurentPoly::from_sequence(block(f, h, l));
                for (const auto& [n, c] : exact.at(h, l).terms()) all_exact &= c.is_exact();
            }
        if (all_exact) tm.exact_ = exact;
        tm.evaluator_ = [exact = std::move(exact)](const CharacterPoint& xi, cplx* out) {
            exact.eval(xi.w, out);
        };
    } else {
        std::vector<NSequence> blocks;
        blocks.reserve(static_cast<std::size_t>(kappa) * kappa);
        for (int h = 0; h < kappa; ++h)
            for (int l = 0; l < kappa; ++l) blocks.push_back(block(f, h, l));
        tm.evaluator_ = [group, kappa, blocks = std::move(blocks)](const CharacterPoint& xi,
                                                                  cplx* out) {
            for (int i = 0; i < kappa * kappa; ++i)
                out[i] = transform_at(*group, blocks[static_cast<std::size_t>(i)], xi);
        };
    }
    tm.fill();
    return tm;
}

TransferMatrix TransferMatrix::from_evaluator(int kappa, Evaluator ev, const FrequencyGrid& grid) {
    TransferMatrix tm;
    tm.kappa_ = kappa;
    tm.grid_ = grid;
    tm.evaluator_ = std::move(ev);
    tm.fill();
    return tm;
}

void TransferMatrix::fill() {
    const std::size_t points = grid_.size();
    const std::size_t block = static_cast<std::size_t>(kappa_) * kappa_;
    values_.resize(points * block);
    for (std::size_t i = 0; i < points; ++i) evaluator_(grid_.point(i), values_.data() + i * block);
}

TransferMatrix TransferMatrix::with_grid(const FrequencyGrid& grid) const {
    TransferMatrix tm;
    tm.kappa_ = kappa_;
    tm.grid_ = grid;
    tm.evaluator_ = evaluator_;
    tm.exact_ = exact_;
    tm.fill();
    return tm;
}

std::vector<cplx> t_gamma(const GammaSignal& a, const FrequencyGrid& grid) {
    const Group& grp = *a.group();
    const int kappa = grp.kappa();
    const std::size_t points = grid.size();
    std::vector<cplx> out(points * static_cast<std::size_t>(kappa));
    for (std::size_t i = 0; i < points; ++i) {
        CharacterPoint xi = grid.point(i);
        for (int h = 0; h < kappa; ++h)
            out[i * static_cast<std::size_t>(kappa) + static_cast<std::size_t>(h)] =
                transform_at(grp, a.phase(h), xi);
    }
    return out;
}

GammaSignal apply_spectral(const TransferMatrix& F, const GammaSignal& a, SpectralMode mode) {
    const Group& grp = *a.group();
    if (!grp.N().is_finite())
        throw std::invalid_argument("apply_spectral supports finite N only; use convolve");
    if (!F.grid().is_finite())
        throw std::invalid_argument("apply_spectral needs the complete character grid");

    const int kappa = grp.kappa();
    const std::size_t points = F.grid().size();
    std::vector<cplx> va = t_gamma(a, F.grid());
    std::vector<cplx> vb(va.size());
    for (std::size_t i = 0; i < points; ++i) {
        const cplx* m = F.at(i);
        for (int r = 0; r < kappa; ++r) {
            cplx acc{0.0, 0.0};
            for (int c = 0; c < kappa; ++c) {
                cplx entry = mode == SpectralMode::synthesis
                                 ? m[static_cast<std::size_t>(r) * kappa + c]
                                 : std::conj(m[static_cast<std::size_t>(c) * kappa + r]);
                acc += entry * va[i * static_cast<std::size_t>(kappa) + static_cast<std::size_t>(c)];
            }
            vb[i * static_cast<std::size_t>(kappa) + static_cast<std::size_t>(r)] = acc;
        }
    }

    // exact inverse transform over the complete character set
    GammaSignal out(a.group());
    const double count = static_cast<double>(points);
    for (int h = 0; h < kappa; ++h) {
        for (std::int64_t idx = 0; idx < grp.N().element_count(); ++idx) {
            NVec n = grp.N().element_at(idx);
            cplx acc{0.0, 0.0};
            for (std::size_t i = 0; i < points; ++i)
                acc += vb[i * static_cast<std::size_t>(kappa) + static_cast<std::size_t>(h)] *
                       grp.character_value(F.grid().point(i), n);
            out.set({n, h}, Scalar(acc / count));
        }
    }
    return out;
}

namespace {

struct SweepResult {
    double A_eig = std::numeric_limits<double>::infinity();
    double B_eig = 0.0;
    double det_inf = std::numeric_limits<double>::infinity();
    double unitarity_dev = 0.0;
};

SweepResult sweep(const TransferMatrix& F) {
    const int kappa = F.kappa();
    const std::size_t block = static_cast<std::size_t>(kappa) * kappa;
    SweepResult r;
    std::vector<cplx> gram(block);
    for (std::size_t i = 0; i < F.grid().size(); ++i) {
        const cplx* m = F.at(i);
        for (int a = 0; a < kappa; ++a)
            for (int b = 0; b < kappa; ++b) {
                cplx acc{0.0, 0.0};
                for (int k = 0; k < kappa; ++k)
                    acc += std::conj(m[static_cast<std::size_t>(k) * kappa + a]) *
                           m[static_cast<std::size_t>(k) * kappa + b];
                gram[static_cast<std::size_t>(a) * kappa + b] = acc;
            }
        auto eig = linalg::hermitian_eigenvalues(gram, kappa);
        r.A_eig = std::min(r.A_eig, eig.front());
        r.B_eig = std::max(r.B_eig, eig.back());
        r.det_inf = std::min(r.det_inf, std::abs(linalg::determinant({m, block}, kappa)));
        for (int a = 0; a < kappa; ++a)
            for (int b = 0; b < kappa; ++b) {
                cplx expected = a == b ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
                r.unitarity_dev = std::max(
                    r.unitarity_dev,
                    std::abs(gram[static_cast<std::size_t>(a) * kappa + b] - expected));
            }
    }
    return r;
}

} // namespace

AnalysisReport riesz_analyze(const TransferMatrix& F, const Tolerances& tol) {
    AnalysisReport rep;
    rep.estimate_note = "grid estimates: A_eig and det_inf are upper bounds of the essential "
                        "infima, B_eig is a lower bound of the essential supremum";

    TransferMatrix current = F;
    SweepResult s = sweep(current);
    rep.history.push_back({current.grid().is_finite() ? 0 : current.grid().points_per_dim(),
                           s.A_eig, s.B_eig, s.det_inf});

    if (F.refinable()) {
        bool converged = false;
        for (int level = 0; level < tol.max_refine && !converged; ++level) {
            TransferMatrix next = current.with_grid(current.grid().refined());
            SweepResult ns = sweep(next);
            double moveA = std::abs(ns.A_eig - s.A_eig) / std::max(1.0, std::abs(ns.A_eig));
            double moveB = std::abs(ns.B_eig - s.B_eig) / std::max(1.0, std::abs(ns.B_eig));
            converged = moveA <= tol.rtol && moveB <= tol.rtol;
            current = std::move(next);
            s = ns;
            rep.history.push_back({current.grid().points_per_dim(), s.A_eig, s.B_eig, s.det_inf});
        }
        rep.unresolved = !converged;
        rep.final_points_per_dim = current.grid().points_per_dim();
    } else {
        rep.grid_exact = true;
        rep.final_points_per_dim = 0;
    }

    rep.A_eig = s.A_eig;
    rep.B_eig = s.B_eig;
    rep.A_sing = std::sqrt(std::max(0.0, s.A_eig));
    rep.B_sing = std::sqrt(std::max(0.0, s.B_eig));
    rep.det_inf = s.det_inf;
    rep.cstar_norm = rep.B_sing;
    rep.unitarity_deviation = s.unitarity_dev;
    rep.bessel = std::isfinite(rep.B_eig);
    rep.riesz = rep.bessel && rep.det_inf > tol.det_floor;
    rep.onb = s.unitarity_dev <= std::max(tol.atol, 1e-12);
    return rep;
}

AnalysisReport riesz_analyze(const GammaSignal& f, const Tolerances& tol) {
    FrequencyGrid grid = f.group()->N().is_finite()
                             ? FrequencyGrid::finite(f.group())
                             : FrequencyGrid::lattice(f.group()->dimension(), tol.grid);
    return riesz_analyze(TransferMatrix::from_signal(f, grid), tol);
}

bool onb_check(const TransferMatrix& F, const GammaSignal* f, const Tolerances& tol) {
    const int kappa = F.kappa();
    SweepResult s = sweep(F);
    bool unitary = s.unitarity_dev <= std::max(tol.atol, 1e-12);

    // first-column criterion: F*(xi) [T_Gamma f](xi) = e1
    std::vector<cplx> col;
    if (f != nullptr) col = t_gamma(*f, F.grid());
    double dev = 0.0;
    for (std::size_t i = 0; i < F.grid().size(); ++i) {
        const cplx* m = F.at(i);
        for (int r = 0; r < kappa; ++r) {
            cplx acc{0.0, 0.0};
            for (int c = 0; c < kappa; ++c) {
                cplx vc = f != nullptr
                              ? col[i * static_cast<std::size_t>(kappa) + static_cast<std::size_t>(c)]
                              : m[static_cast<std::size_t>(c) * kappa]; // first column of F
                acc += std::conj(m[static_cast<std::size_t>(c) * kappa + r]) * vc;
            }
            cplx expected = r == 0 ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            dev = std::max(dev, std::abs(acc - expected));
        }
    }
    bool first_col = dev <= std::max(tol.atol, 1e-12) * (1.0 + std::sqrt(s.B_eig));
    if (unitary != first_col)
        throw std::runtime_error(
            "onb_check internal inconsistency: unitarity deviation " +
            std::to_string(s.unitarity_dev) + " vs first-column deviation " + std::to_string(dev));
    return unitary;
}

std::pair<double, double> dihedral_closed_bounds(const GammaSignal& f, const FrequencyGrid& grid) {
    const Group& grp = *f.group();
    if (grp.N().is_finite() || grp.dimension() != 1 || grp.kappa() != 2)
        throw std::invalid_argument("dihedral_closed_bounds requires the infinite dihedral group");
    bool real = true;
    f.for_each([&](const GammaElement&, const Scalar& v) {
        real = real && std::abs(v.value().imag()) == 0.0;
    });
    if (!real) throw std::invalid_argument("dihedral_closed_bounds requires a real signal");

    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CharacterPoint xi = grid.point(i);
        double m1 = std::abs(transform_at(grp, f.phase(0), xi));
        double m2 = std::abs(transform_at(grp, f.phase(1), xi));
        double diff = m1 - m2;
        lo = std::min(lo, diff * diff);
        double sum = m1 + m2;
        hi = std::max(hi, sum * sum);
    }
    return {lo, hi};
}

double operator_norm(const TransferMatrix& F) { return std::sqrt(sweep(F).B_eig); }

} // namespace rieszrep
