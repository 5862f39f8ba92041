#include "singcomb/lle/params.hpp"

#include <cmath>
#include <numbers>

namespace singcomb::lle {

CouplingProfile CouplingProfile::constant(double a0) {
    CouplingProfile p;
    p.kind = Kind::constant;
    p.a0 = a0;
    return p;
}

CouplingProfile CouplingProfile::cosine(double a0, double a1, int scale) {
    CouplingProfile p;
    p.kind = Kind::cosine;
    p.a0 = a0;
    p.a1 = a1;
    p.scale = scale;
    return p;
}

CouplingProfile CouplingProfile::table(std::vector<double> values) {
    if (values.empty())
        throw std::invalid_argument("coupling table must not be empty");
    CouplingProfile p;
    p.kind = Kind::table;
    p.values = std::move(values);
    return p;
}

double CouplingProfile::at_mode(double kappa, std::size_t modes) const {
    const double m = static_cast<double>(modes);
    switch (kind) {
        case Kind::constant:
            return a0;
        case Kind::cosine:
            return a0 + a1 * std::cos(2.0 * std::numbers::pi * scale * kappa / m);
        case Kind::table: {
            if (values.size() != modes)
                throw std::invalid_argument(
                    "coupling table length differs from mode count");
            // Wrap into natural position [0, M).
            double pos = std::fmod(kappa, m);
            if (pos < 0) pos += m;
            const std::size_t i0 = static_cast<std::size_t>(pos) % modes;
            const std::size_t i1 = (i0 + 1) % modes;
            const double frac = pos - std::floor(pos);
            return values[i0] * (1.0 - frac) + values[i1] * frac;
        }
    }
    return a0;
}

std::vector<double> CouplingProfile::sample(std::size_t modes) const {
    if (kind == Kind::table) {
        if (values.size() != modes)
            throw std::invalid_argument(
                "coupling table length differs from mode count");
        return values;
    }
    const RingGrid grid(modes);
    std::vector<double> out(modes);
    for (std::size_t j = 0; j < modes; ++j)
        out[j] = at_mode(static_cast<double>(grid.mode_number(j)), modes);
    return out;
}

void LLEParams::validate() const {
    auto finite = [](double x) { return std::isfinite(x); };
    if (!finite(detuning_a) || !finite(detuning_b) || !finite(pump_amplitude) ||
        !finite(dispersion_d2) || !finite(loss))
        throw std::invalid_argument("LLE parameters must be finite");
    if (pump_amplitude < 0)
        throw std::invalid_argument("pump amplitude must be >= 0");
    if (kerr_sign != 1 && kerr_sign != -1)
        throw std::invalid_argument("kerr_sign must be +1 or -1");
    if (loss <= 0 && pump_amplitude > 0)
        throw std::invalid_argument(
            "pumping without loss has no steady state; unsupported");
    if (coupling.kind == CouplingProfile::Kind::table)
        for (double v : coupling.values)
            if (!finite(v))
                throw std::invalid_argument("coupling table must be finite");
}

void EvolutionConfig::validate() const {
    if (!(dt > 0) || !std::isfinite(dt))
        throw std::invalid_argument("dt must be positive");
    if (steps <= 0) throw std::invalid_argument("steps must be positive");
    if (record_every <= 0)
        throw std::invalid_argument("record_every must be positive");
    if (steps % record_every != 0)
        throw std::invalid_argument(
            "steps must be a multiple of record_every");
    if (!(blowup_bound > 0))
        throw std::invalid_argument("blowup bound must be positive");
}

}  // namespace singcomb::lle
