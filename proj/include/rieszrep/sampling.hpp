#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rieszrep/dual.hpp"
#include "rieszrep/generator.hpp"
#include "rieszrep/group.hpp"
#include "rieszrep/signal.hpp"
#include "rieszrep/spectral.hpp"

namespace rieszrep {

/// Crystallographic group M Z^d x| H with H a finite set of orthogonal
/// matrices preserving the lattice. Internally the group is the isomorphic
/// Z^d x| H with the conjugated integer action M^{-1} A M; the real data (M
/// and the orthogonal matrices) stay around for the quasi-regular action.
class CrystalGroupSpec {
public:
    CrystalGroupSpec(int dim, std::vector<double> lattice_matrix_row_major,
                     std::vector<std::vector<double>> orthogonal_matrices);

    /// D-infinity: d = 1, M = [1], H = {[1], [-1]}.
    static CrystalGroupSpec dihedral_infinite();

    int dim() const { return dim_; }
    const GroupPtr& group() const { return group_; }
    const std::vector<double>& lattice_matrix() const { return m_; }
    const std::vector<double>& lattice_inverse() const { return inv_m_; }
    const std::vector<double>& orthogonal(int h) const {
        return orthogonal_[static_cast<std::size_t>(h)];
    }

    /// Real-space translation M k of the internal lattice element k.
    std::vector<double> translation(const NVec& k) const;

private:
    int dim_;
    std::vector<double> m_;
    std::vector<double> inv_m_;
    std::vector<std::vector<double>> orthogonal_;
    GroupPtr group_;
};

/// [U(n, A) f](t) = f(A^T (t - n)) for gamma = (k, h), n = M k.
double quasi_regular_apply(const CrystalGroupSpec& crystal, const GammaElement& gamma,
                           const Generator& f, const std::vector<double>& t);

/// Finite orbit combination sum_gamma w(gamma) U(gamma) phi; spans the
/// functions handled by the sampling pipeline (elements of the invariant
/// space with finitely many coefficients, interpolators, their translates).
/// Evaluation is real-valued: imaginary parts of the weights are ignored.
class OrbitFunction {
public:
    OrbitFunction(CrystalGroupSpec crystal, Generator base);
    OrbitFunction(CrystalGroupSpec crystal, Generator base, const GammaSignal& coefficients);

    const CrystalGroupSpec& crystal() const { return crystal_; }
    const Generator& base() const { return base_; }
    const std::vector<std::pair<GammaElement, Scalar>>& terms() const { return terms_; }

    void add_term(const GammaElement& gamma, const Scalar& weight);

    double eval(const std::vector<double>& t) const;
    double eval1(double t) const { return eval({t}); }
    std::optional<Rational> eval_exact1(const Rational& t) const;

    SupportBox support() const;

    /// U(gamma) applied to the whole combination.
    OrbitFunction translated(const GammaElement& gamma) const;

private:
    CrystalGroupSpec crystal_;
    Generator base_;
    std::vector<std::pair<GammaElement, Scalar>> terms_;
};

/// Pointwise sampling signal f_p(eta) = conj([U(eta) phi](p)); finitely
/// supported because phi has compact support.
GammaSignal pointwise_sample_signal(const CrystalGroupSpec& crystal, const Generator& phi,
                                    const std::vector<Rational>& p);

struct QuadratureSpec {
    int order_per_unit = 16;
    bool allow_exact = true; // use exact piecewise-polynomial integration when possible
};

/// Average sampling signal f_psi(eta) = conj(<phi, U(eta^{-1}) psi>).
/// Piecewise-polynomial pairs of degree <= 12 integrate exactly; otherwise
/// Gauss-Legendre of the requested order is used and an insufficient order
/// for declared polynomial degrees is refused.
GammaSignal average_sample_signal(const CrystalGroupSpec& crystal, const Generator& phi,
                                  const Generator& psi, const QuadratureSpec& quad = {});

/// sup over the probe grid of sum_gamma |[U(gamma) phi](t)|^2 (Bessel-type
/// certificate for pointwise sampling); the sum is locally finite.
double rkhs_bound(const CrystalGroupSpec& crystal, const Generator& phi,
                  const std::vector<std::vector<double>>& probe_points);

/// Interpolator Phi = sum_gamma g(gamma) U(gamma) phi.
OrbitFunction build_interpolator(const CrystalGroupSpec& crystal, const Generator& phi,
                                 const GammaSignal& g);

/// Finite collection of samples gamma -> value.
using SampleMap = std::map<GammaElement, Scalar>;

/// Pointwise samples L_p f(n, A) = f(A p + n) of an orbit function, collected
/// over |k|_inf <= window of the internal lattice.
SampleMap take_pointwise_samples(const OrbitFunction& f, const std::vector<Rational>& p,
                                 std::int64_t window);

/// Sampling series sum_{(n,A)} s(n, A) Phi[A^T (t - n)] at one point.
double reconstruct(const CrystalGroupSpec& crystal, const SampleMap& samples,
                   const OrbitFunction& interpolator, const std::vector<double>& t);

/// Coefficient recovery a = sum_eta s(eta) L_eta g.
GammaSignal coefficients_from_samples(const SampleMap& samples, const GammaSignal& g);

/// State of the dihedral spline sampling pipeline: filters, determinant
/// constants, feasibility, bounds, dual and interpolator.
struct SplineSamplingCase {
    SplineSamplingCase(Rational p_init, Generator phi_init, GroupPtr group)
        : p(std::move(p_init)), phi(std::move(phi_init)), sampling_signal(std::move(group)) {}

    Rational p;
    Generator phi;

    Rational phi_p, phi_p1, phi_1mp, phi_2mp; // phi(p), phi(p+1), phi(1-p), phi(2-p)
    GammaSignal sampling_signal;              // f_p over D-infinity
    Scalar C, D;                              // det F(z) = C + D (z + z^{-1})
    bool feasible = false;                    // |C| > 2 |D|
    bool compact_dual = false;                // D = 0 exactly
    double det_consistency_error = 0.0;       // max |det F - (C + 2 D cos w)| on the grid

    AnalysisReport analysis;
    double closed_A_eig = 0.0; // dihedral closed forms on the fine grid
    double closed_B_eig = 0.0;

    double cond_eig_sqrt = 0.0;        // (B_eig / A_eig)^{1/2}
    double cond_sing_sqrt = 0.0;       // (B_sing / A_sing)^{1/2}
    double sqrt_B_sing = 0.0;          // sqrt(B_sing), a third scaling in circulation
    bool condition_scalings_disagree = true;

    std::optional<DualResult> dual;
    std::optional<OrbitFunction> interpolator;
};

/// Runs the full dihedral spline pipeline for p in (0, 1/2) and a continuous
/// generator supported in [0, 2]. An infeasible case (|C| <= 2|D|) is
/// returned with feasible = false and no interpolator.
SplineSamplingCase dinf_spline_case(const Rational& p, const Generator& phi,
                                    const Tolerances& tol = {});

/// The degree-6 compactly supported spline generator used by the shipped
/// demo: (16 t^2 - 13) t^2 (2 - t)^2 on [0, 2].
Generator demo_spline_generator();

} // namespace rieszrep
