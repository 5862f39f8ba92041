#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "singcomb/comb/spectrum.hpp"
#include "singcomb/lle/params.hpp"
#include "singcomb/lle/stability.hpp"

namespace singcomb::comb {

// Inclusive uniform grid; count == 1 collapses to {min}.
struct Grid1D {
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 1;

    std::vector<double> values() const;
};

// Shared knobs for every evolve-based scan.
struct ScanConfig {
    std::size_t modes = 256;
    lle::EvolutionConfig evolution;
    double stability_epsilon = 1e-6;
    double trailing_fraction = 0.5;
    double ic_noise_amplitude = 1e-4;
    // A "localized" spectrum must carry at least this fraction of its
    // power off the k = 0 mode.
    double off_mode_fraction = 1e-3;
    int bisect_iterations = 20;
    std::uint64_t master_seed = 0;
    int workers = 1;
};

// Documented seeded initial condition used by all scans: the pumped
// field flat at the smallest steady-state root, plus complex per-mode
// noise keyed by (master_seed, cell index, field, position).
lle::DimerField seeded_initial_condition(std::size_t modes,
                                         const lle::LLEParams& params,
                                         std::uint64_t master_seed,
                                         std::uint64_t cell_index,
                                         double noise_amplitude);

// Grid-indexed classification over the (detuning, modulus) plane; cells
// stored row-major with detuning as the outer axis.
struct StabilityMap {
    std::vector<double> detuning;
    std::vector<double> modulus;
    std::vector<lle::Stability> cells;

    lle::Stability at(std::size_t i, std::size_t j) const {
        return cells[i * modulus.size() + j];
    }
};

// Per cell: set the dimer detuning and a constant coupling equal to the
// modulus, evolve the seeded initial condition, classify. Cells are
// independent; output is deterministic for a given config and seed
// regardless of worker count.
StabilityMap arnold_tongue_scan(const Grid1D& detuning_grid,
                                const Grid1D& modulus_grid,
                                const lle::LLEParams& base,
                                const ScanConfig& config);

// Pump-power threshold surface over the same plane.
struct EPSurface {
    std::vector<double> detuning;
    std::vector<double> modulus;
    std::vector<double> p_star;         // valid where found[cell]
    std::vector<double> bracket_width;
    std::vector<std::uint8_t> found;
};

// Bisection on pump power P in [p_lo, p_hi] against the stable-localized
// predicate (Stable classification AND off-mode power fraction above the
// configured threshold). A cell where the predicate fails at p_hi is
// NotFound; that is data, not an error.
EPSurface power_threshold_scan(const Grid1D& detuning_grid,
                               const Grid1D& modulus_grid, double p_lo,
                               double p_hi, const lle::LLEParams& base,
                               const ScanConfig& config);

// Single evolve + classify with the documented seeded IC; shared by the
// scans and the disorder pipelines.
struct CellResult {
    lle::Stability stability = lle::Stability::undecided;
    Spectrum final_spectrum;  // combined A+B, natural order
};

CellResult run_cell(const lle::LLEParams& params, const ScanConfig& config,
                    std::uint64_t cell_index);

}  // namespace singcomb::comb
