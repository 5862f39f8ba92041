#pragma once

#include <complex>
#include <vector>

namespace singcomb::lle {

// Real non-negative roots rho of the flat-state cubic
//     rho * (1 + (detuning - rho)^2) = power,
// sorted ascending, with multiplicity (a double root appears twice).
// Each returned root satisfies |residual| < 1e-10.
std::vector<double> homogeneous_steady_states(double detuning, double power);

// Complex flat-field amplitude for a root rho of the cubic above:
// A = F / (1 + i*(detuning - rho)) with F = sqrt(power).
std::complex<double> flat_state_amplitude(double detuning, double power,
                                          double rho);

}  // namespace singcomb::lle
