#include "singcomb/comb/scans.hpp"

#include <cmath>
#include <stdexcept>

#include "singcomb/lle/rng.hpp"
#include "singcomb/lle/steady_state.hpp"
#include "singcomb/util/parallel.hpp"

namespace singcomb::comb {

std::vector<double> Grid1D::values() const {
    if (count == 0) throw std::invalid_argument("empty grid");
    if (count == 1) return {min};
    if (!(max > min))
        throw std::invalid_argument("grid needs max > min for count > 1");
    std::vector<double> v(count);
    const double step = (max - min) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = min + step * static_cast<double>(i);
    return v;
}

lle::DimerField seeded_initial_condition(std::size_t modes,
                                         const lle::LLEParams& params,
                                         std::uint64_t master_seed,
                                         std::uint64_t cell_index,
                                         double noise_amplitude) {
    lle::DimerField field = lle::DimerField::zero(modes);
    const double power = params.pump_amplitude * params.pump_amplitude;
    const auto roots =
        lle::homogeneous_steady_states(params.detuning_a, power);
    const std::complex<double> flat =
        roots.empty() ? std::complex<double>(0.0)
                      : lle::flat_state_amplitude(params.detuning_a, power,
                                                  roots.front());
    for (std::size_t j = 0; j < modes; ++j) {
        field.a[j] = flat;
        if (params.pump_both_fields) field.b[j] = flat;
    }
    if (noise_amplitude > 0.0) {
        using lle::rng::kQuantityInitNoise;
        using lle::rng::uniform_pm1;
        const std::uint64_t stride = 4 * modes;
        for (std::size_t j = 0; j < modes; ++j) {
            const std::uint64_t base = cell_index * stride + 4 * j;
            field.a[j] += noise_amplitude *
                          std::complex<double>(
                              uniform_pm1(master_seed, kQuantityInitNoise, base),
                              uniform_pm1(master_seed, kQuantityInitNoise,
                                          base + 1));
            field.b[j] += noise_amplitude *
                          std::complex<double>(
                              uniform_pm1(master_seed, kQuantityInitNoise,
                                          base + 2),
                              uniform_pm1(master_seed, kQuantityInitNoise,
                                          base + 3));
        }
    }
    return field;
}

CellResult run_cell(const lle::LLEParams& params, const ScanConfig& config,
                    std::uint64_t cell_index) {
    const lle::DimerField initial = seeded_initial_condition(
        config.modes, params, config.master_seed, cell_index,
        config.ic_noise_amplitude);
    const lle::Trajectory traj = lle::evolve(initial, params, config.evolution);
    CellResult r;
    r.stability = lle::classify_stability(traj, config.stability_epsilon,
                                          config.trailing_fraction);
    r.final_spectrum = power_spectrum(traj.snapshots.back(), true);
    return r;
}

StabilityMap arnold_tongue_scan(const Grid1D& detuning_grid,
                                const Grid1D& modulus_grid,
                                const lle::LLEParams& base,
                                const ScanConfig& config) {
    StabilityMap map;
    map.detuning = detuning_grid.values();
    map.modulus = modulus_grid.values();
    const std::size_t nd = map.detuning.size();
    const std::size_t nm = map.modulus.size();
    map.cells.assign(nd * nm, lle::Stability::undecided);
    util::parallel_for(nd * nm, config.workers, [&](std::size_t cell) {
        const std::size_t i = cell / nm;
        const std::size_t j = cell % nm;
        lle::LLEParams params = base;
        params.detuning_a = map.detuning[i];
        params.detuning_b = map.detuning[i];
        params.coupling = lle::CouplingProfile::constant(map.modulus[j]);
        map.cells[cell] = run_cell(params, config, cell).stability;
    });
    return map;
}

namespace {

bool stable_localized(const CellResult& r, const ScanConfig& config) {
    if (r.stability != lle::Stability::stable) return false;
    const double total = r.final_spectrum.total();
    if (total <= 0.0) return false;
    const double off_mode = total - r.final_spectrum.power[0];
    return off_mode / total > config.off_mode_fraction;
}

}  // namespace

EPSurface power_threshold_scan(const Grid1D& detuning_grid,
                               const Grid1D& modulus_grid, double p_lo,
                               double p_hi, const lle::LLEParams& base,
                               const ScanConfig& config) {
    if (!(p_lo < p_hi))
        throw std::invalid_argument("power bracket needs p_lo < p_hi");
    EPSurface surface;
    surface.detuning = detuning_grid.values();
    surface.modulus = modulus_grid.values();
    const std::size_t nd = surface.detuning.size();
    const std::size_t nm = surface.modulus.size();
    surface.p_star.assign(nd * nm, 0.0);
    surface.bracket_width.assign(nd * nm, 0.0);
    surface.found.assign(nd * nm, 0);

    util::parallel_for(nd * nm, config.workers, [&](std::size_t cell) {
        const std::size_t i = cell / nm;
        const std::size_t j = cell % nm;
        lle::LLEParams params = base;
        params.detuning_a = surface.detuning[i];
        params.detuning_b = surface.detuning[i];
        params.coupling = lle::CouplingProfile::constant(surface.modulus[j]);

        auto predicate = [&](double power) {
            lle::LLEParams p = params;
            p.pump_amplitude = std::sqrt(power);
            return stable_localized(run_cell(p, config, cell), config);
        };

        if (!predicate(p_hi)) return;  // NotFound stays recorded as data
        if (predicate(p_lo)) {
            surface.p_star[cell] = p_lo;
            surface.bracket_width[cell] = 0.0;
            surface.found[cell] = 1;
            return;
        }
        double lo = p_lo, hi = p_hi;
        for (int it = 0; it < config.bisect_iterations; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (predicate(mid))
                hi = mid;
            else
                lo = mid;
        }
        surface.p_star[cell] = 0.5 * (lo + hi);
        surface.bracket_width[cell] = hi - lo;
        surface.found[cell] = 1;
    });
    return surface;
}

}  // namespace singcomb::comb
