#pragma once

#include <string>

#include "singcomb/lle/integrator.hpp"

namespace singcomb::lle {

enum class Stability { stable, unstable, blowup, undecided };

std::string to_string(Stability s);

// Classifies a trajectory from the mode-power spectra of its trailing
// snapshots (trailing_fraction of the recordings). The power spectrum is
// invariant under global phase and rigid rotation, so a uniformly
// drifting pattern counts as stationary; breathing does not.
//   blowup:    the integrator flagged it
//   stable:    consecutive-snapshot relative L2 spectrum change < epsilon
//              for every trailing pair
//   unstable:  more than half of the trailing pairs exceed epsilon
//   undecided: anything in between
// Requires at least 4 recorded snapshots.
Stability classify_stability(const Trajectory& trajectory,
                             double epsilon = 1e-6,
                             double trailing_fraction = 0.5);

}  // namespace singcomb::lle
