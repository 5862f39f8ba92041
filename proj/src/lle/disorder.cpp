#include "singcomb/lle/disorder.hpp"

#include <stdexcept>

#include "singcomb/lle/rng.hpp"

namespace singcomb::lle {

LLEParams apply_disorder(const LLEParams& params, const DisorderSpec& spec,
                         std::size_t modes) {
    if (spec.strength < 0)
        throw std::invalid_argument("disorder strength must be >= 0");
    if (spec.strength == 0.0) return params;

    LLEParams out = params;
    const double eta = spec.strength;
    if (spec.targets.detuning) {
        out.detuning_a *=
            1.0 + eta * rng::uniform_pm1(spec.seed, rng::kQuantityDetuning, 0);
        out.detuning_b *=
            1.0 + eta * rng::uniform_pm1(spec.seed, rng::kQuantityDetuning, 1);
    }
    if (spec.targets.coupling) {
        std::vector<double> values = params.coupling.sample(modes);
        for (std::size_t j = 0; j < values.size(); ++j)
            values[j] *=
                1.0 + eta * rng::uniform_pm1(spec.seed, rng::kQuantityCoupling, j);
        out.coupling = CouplingProfile::table(std::move(values));
    }
    return out;
}

}  // namespace singcomb::lle
