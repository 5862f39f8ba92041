#pragma once

#include "singcomb/lle/params.hpp"

namespace singcomb::lle {

// Applies multiplicative disorder to the targeted quantities:
//   detuning: per field, detuning_x *= (1 + eta*u), u from
//             (seed, detuning-channel, field index)
//   coupling: per mode, the sampled profile becomes a table with
//             a_k *= (1 + eta*u), u from (seed, coupling-channel, mode)
// eta = 0 returns the params unchanged. Identical (spec, params, modes)
// give bit-identical results.
LLEParams apply_disorder(const LLEParams& params, const DisorderSpec& spec,
                         std::size_t modes);

}  // namespace singcomb::lle
