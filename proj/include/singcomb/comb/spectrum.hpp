#pragma once

#include <vector>

#include "singcomb/lle/integrator.hpp"

namespace singcomb::comb {

// Mode-power spectrum in natural (FFT) order. Convention (tested):
// P_k = |A_k|^2 with A_k = (1/M) sum_j A_j e^{-ik theta_j}, so
// sum_k P_k equals the mean-square field amplitude.
struct Spectrum {
    std::vector<double> power;

    std::size_t modes() const { return power.size(); }
    double total() const;
};

// Spectrum of field A, or of both fields summed.
Spectrum power_spectrum(const lle::DimerField& field, bool include_b = false);

// Bhattacharyya overlap of the normalized spectra:
//   F = sum_k sqrt(p_k q_k) / sqrt(sum p * sum q)
// Symmetric, scale-invariant, in [0, 1], and exactly 1 for elementwise
// identical inputs. Throws if both spectra are zero.
double spectral_fidelity(const Spectrum& s1, const Spectrum& s2);

}  // namespace singcomb::comb
