#pragma once

#include <optional>
#include <stdexcept>

#include "rieszrep/spectral.hpp"

namespace rieszrep {

/// Raised when F*(xi) cannot be inverted at some grid point; carries the
/// worst offending point for diagnostics.
class singular_transfer : public std::runtime_error {
public:
    singular_transfer(std::string msg, CharacterPoint worst, double det_abs)
        : std::runtime_error(std::move(msg)), worst_point(std::move(worst)),
          det_magnitude(det_abs) {}

    CharacterPoint worst_point;
    double det_magnitude;
};

struct DualResult {
    GammaSignal generator;      // coefficient form
    bool exact = false;         // coefficients came from the exact Laurent path
    double tail_energy = 0.0;   // lattice: discarded coefficient energy
    std::size_t kept = 0;       // lattice: coefficients kept after truncation
    double worst_det = 0.0;     // min |det F*| seen across the grid
};

/// Dual Riesz generator g: solves F*(xi) [T_Gamma g](xi) = e1 on the grid and
/// transforms back. Finite N inverts the complete character sum exactly; on
/// the lattice the grid dual is inverse-FFT'd and truncated at
/// 1e-12 * max |coefficient| with the discarded energy reported. When the
/// exact Laurent route applies it is preferred.
DualResult dual_generator(const GammaSignal& f, const Tolerances& tol = {});

/// Finitely supported dual via adjugate-over-monomial division; available
/// exactly when det F is a nonzero monomial (detected on exact coefficients).
/// Returns nullopt when the route does not apply.
std::optional<GammaSignal> dual_exact_laurent(const GammaSignal& f);

/// Convolution inverse h with f * h = delta; equals involution(dual).
GammaSignal inverse_filter(const GammaSignal& f, const Tolerances& tol = {});

struct BiorthResult {
    bool pass = false;
    double worst_error = 0.0;
    GammaElement worst_gamma;
};

/// Checks <g, L_gamma f> = delta(gamma): over all of Gamma for finite N, over
/// |n|_inf <= window for the lattice.
BiorthResult biorthogonality_check(const GammaSignal& f, const GammaSignal& g,
                                   std::int64_t window = 8, double atol = 1e-10);

} // namespace rieszrep
