#pragma once

#include <span>
#include <vector>

namespace singcomb::comb {

// One-sided Hann periodogram. Normalization (tested): integrating the
// PSD over frequency returns the window-weighted mean square of the
// signal, sum(w^2 x^2)/sum(w^2). Uses the leading power-of-two prefix of
// the samples.
struct PsdResult {
    std::vector<double> frequency;  // 0 .. fs/2
    std::vector<double> power;
    std::size_t peak_bin = 0;       // dominant non-DC line
    double fwhm = 0.0;              // linear-interpolated, in Hz
    double resolution_floor = 0.0;  // 1 / (N dt)
};

// Throws on fewer than 256 samples or on a constant series (no line).
PsdResult beat_note_psd(std::span<const double> samples, double dt);

}  // namespace singcomb::comb
