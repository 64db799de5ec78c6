#pragma once

#include <cstdint>
#include <utility>

#include "rieszrep/group.hpp"
#include "rieszrep/signal.hpp"

// Independent brute-force oracles for tests and self-checks. Everything here
// works from the group multiplication alone; none of it shares code with the
// phase-decomposition fast paths it is used to verify.

namespace rieszrep::oracle {

/// (a * f)(gamma) = sum_eta a(eta) f(eta^{-1} gamma) as a literal double sum.
GammaSignal brute_convolve(const GammaSignal& a, const GammaSignal& f);

/// Dense synthesis operator of {L_gamma f} on a finite group: column gamma is
/// the vector L_gamma f, rows and columns in enumeration order.
std::vector<std::vector<cplx>> brute_synthesis_matrix(const GammaSignal& f);

/// Extreme squared singular values (min, max) of the dense synthesis matrix.
std::pair<double, double> synthesis_spectrum(const GammaSignal& f);

/// Dense operator 2-norm of the synthesis matrix.
double synthesis_norm(const GammaSignal& f);

/// Extreme eigenvalues of the Gram section of the translate system of a
/// 1-d lattice signal, columns restricted to |n| <= window. The section
/// extremes bracket into the true optimal Riesz bounds from inside.
std::pair<double, double> truncated_spectrum(const GammaSignal& f, std::int64_t window);

/// Dual generator from the Gram system of a finite group: solve
/// G x = e_identity and synthesize. Throws when the Gram matrix is singular
/// (the system is not a Riesz basis).
GammaSignal brute_dual(const GammaSignal& f);

/// Extremes of ||a * f||^2 / ||a||^2 over random finite-support probes.
std::pair<double, double> frame_probe(const GammaSignal& f, int trials, std::uint64_t seed,
                                      std::int64_t window = 8);

} // namespace rieszrep::oracle
