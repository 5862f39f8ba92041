#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "singcomb/lle/params.hpp"

namespace singcomb::lle {

// Two intracavity fields on the ring grid (theta-space samples).
struct DimerField {
    std::vector<std::complex<double>> a;
    std::vector<std::complex<double>> b;

    static DimerField zero(std::size_t modes) {
        return {std::vector<std::complex<double>>(modes),
                std::vector<std::complex<double>>(modes)};
    }
    std::size_t modes() const { return a.size(); }
};

struct Trajectory {
    std::size_t modes = 0;
    double dt = 0.0;
    long record_every = 0;
    std::vector<long> snapshot_steps;     // includes step 0
    std::vector<DimerField> snapshots;    // theta-space states
    std::optional<long> blowup_step;

    bool blew_up() const { return blowup_step.has_value(); }
};

// Strang split-step integrator for the coupled dimer equations
//
//   dA/dt = -(loss + i*detuning_a)*A + i*s*|A|^2*A
//           + i*(d2/2)*d^2A/dtheta^2 + i*K[B] + F_a
//   dB/dt = -(loss + i*detuning_b)*B + i*s*|B|^2*B
//           + i*(d2/2)*d^2B/dtheta^2 + i*K[A] + F_b
//
// where K is the Fourier multiplier with real symbol a(k), F_a is the
// pump (F_b only with pump_both_fields), s the Kerr sign. The linear and
// pump part advances exactly per mode: exp of the 2x2 block plus the
// associated affine term. The Kerr part is an exact pointwise phase
// rotation. Per step: N(h/2) L(h) N(h/2), adjacent Kerr halves merged
// between recordings.
//
// Deterministic: identical inputs give bit-identical trajectories on one
// platform. If any |field| exceeds config.blowup_bound the run stops and
// the trajectory is flagged.
Trajectory evolve(const DimerField& initial, const LLEParams& params,
                  const EvolutionConfig& config);

}  // namespace singcomb::lle
