#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rieszrep/group.hpp"
#include "rieszrep/laurent.hpp"
#include "rieszrep/signal.hpp"

namespace rieszrep {

/// Character sampling set: the complete (exact) dual group for finite N, a
/// uniform power-of-two tensor grid on [-pi, pi)^d for the lattice.
class FrequencyGrid {
public:
    FrequencyGrid() = default; // empty; assign from finite() or lattice()

    static FrequencyGrid finite(GroupPtr group);
    static FrequencyGrid lattice(int dim, std::int64_t points_per_dim);

    bool is_finite() const { return finite_; }
    int dim() const { return dim_; }
    std::int64_t points_per_dim() const { return per_dim_; }
    std::size_t size() const;
    CharacterPoint point(std::size_t idx) const;

    FrequencyGrid refined() const { return lattice(dim_, per_dim_ * 2); }

private:
    bool finite_ = false;
    GroupPtr group_; // finite kind
    int dim_ = 1;
    std::int64_t per_dim_ = 0;
};

struct Tolerances {
    double atol = 1e-9;       // unitarity / matching tolerance
    double rtol = 1e-9;       // refinement convergence
    double det_floor = 1e-10; // riesz verdict threshold on ess inf |det F|
    std::int64_t grid = 1024; // initial lattice points per dimension
    int max_refine = 6;       // extra dyadic levels (1024 << 6 = 65536)
};

/// The kappa x kappa matrix field F(xi) of a signal, cached on a grid. An
/// evaluator is retained so that lattice grids can be refined; finitely
/// supported lattice signals also carry the exact Laurent form.
class TransferMatrix {
public:
    using Evaluator = std::function<void(const CharacterPoint&, cplx*)>;

    static TransferMatrix from_signal(const GammaSignal& f, const FrequencyGrid& grid);
    static TransferMatrix from_evaluator(int kappa, Evaluator ev, const FrequencyGrid& grid);

    int kappa() const { return kappa_; }
    const FrequencyGrid& grid() const { return grid_; }
    const std::optional<LaurentMatrix>& exact() const { return exact_; }
    bool refinable() const { return !grid_.is_finite(); }

    /// Row-major kappa x kappa block at grid point idx.
    const cplx* at(std::size_t idx) const { return values_.data() + idx * kappa_ * kappa_; }
    void eval(const CharacterPoint& xi, cplx* out) const { evaluator_(xi, out); }

    TransferMatrix with_grid(const FrequencyGrid& grid) const;

private:
    TransferMatrix() = default;
    void fill();

    int kappa_ = 1;
    FrequencyGrid grid_;
    Evaluator evaluator_;
    std::vector<cplx> values_;
    std::optional<LaurentMatrix> exact_;
};

/// T_Gamma a: the vector of phase transforms, evaluated on a grid. Component h
/// at point idx is out[idx * kappa + h].
std::vector<cplx> t_gamma(const GammaSignal& a, const FrequencyGrid& grid);

/// Synthesis (a -> a * f) or analysis (a -> <a, L_. f>) computed through the
/// transform domain; finite N only.
enum class SpectralMode { synthesis, analysis };
GammaSignal apply_spectral(const TransferMatrix& F, const GammaSignal& a,
                           SpectralMode mode = SpectralMode::synthesis);

struct GridLevel {
    std::int64_t points_per_dim = 0;
    double A_eig = 0.0;
    double B_eig = 0.0;
    double det_inf = 0.0;
};

struct AnalysisReport {
    double A_eig = 0.0;   // ess inf lambda_min(F*F), grid estimate
    double B_eig = 0.0;   // ess sup lambda_max(F*F), grid estimate
    double A_sing = 0.0;  // sqrt(A_eig)
    double B_sing = 0.0;  // sqrt(B_eig)
    double det_inf = 0.0; // ess inf |det F|, grid estimate
    double cstar_norm = 0.0;
    double unitarity_deviation = 0.0; // max over grid of ||F*F - I||_max

    bool bessel = false;
    bool riesz = false;
    bool onb = false;

    bool grid_exact = false; // finite N: the character set is complete
    bool unresolved = false; // lattice refinement did not settle
    std::int64_t final_points_per_dim = 0;
    std::vector<GridLevel> history;

    /// On a grid the inf-type numbers are upper bounds of the true essential
    /// infima and B_eig is a lower bound of the essential supremum.
    std::string estimate_note;
};

/// Bessel/Riesz verdicts with optimal-bound estimates; lattice grids refine
/// dyadically until the extrema settle within tol.rtol or the refinement
/// budget is exhausted (then flagged unresolved).
AnalysisReport riesz_analyze(const TransferMatrix& F, const Tolerances& tol = {});
AnalysisReport riesz_analyze(const GammaSignal& f, const Tolerances& tol = {});

/// Orthonormal-basis check: gridwise unitarity of F and the first-column
/// criterion F*(xi) T_Gamma f(xi) = e1 must agree; disagreement throws.
bool onb_check(const TransferMatrix& F, const GammaSignal* f, const Tolerances& tol = {});

/// Closed-form dihedral bounds for real f on D-infinity:
/// A = inf (|f1| - |f-1|)^2, B = sup (|f1| + |f-1|)^2 over the grid.
std::pair<double, double> dihedral_closed_bounds(const GammaSignal& f, const FrequencyGrid& grid);

/// ess sup of the spectral norm of F(xi); equals the operator norm of the
/// convolution operator a -> a * f.
double operator_norm(const TransferMatrix& F);

} // namespace rieszrep
