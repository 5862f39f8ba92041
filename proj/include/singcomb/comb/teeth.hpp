#pragma once

#include <span>
#include <vector>

#include "singcomb/algebra/rational.hpp"
#include "singcomb/lle/params.hpp"

namespace singcomb::comb {

// Crossings of the coupling profile with one quantized level, in
// continuous mode units k in [-M/2, M/2). `degenerate` marks a profile
// identically equal to the level (tangency everywhere), where isolated
// crossings are meaningless.
struct ToothSet {
    algebra::Rational level;
    std::vector<double> positions;  // ascending
    bool degenerate = false;
};

// Locates every sign-change crossing of a(k) - level on the periodic
// continuous interpolant by bisection, to |a(k*) - level| < tolerance.
// Levels without a crossing yield an empty position list.
std::vector<ToothSet> comb_teeth(const lle::CouplingProfile& profile,
                                 std::span<const algebra::Rational> levels,
                                 std::size_t modes, double tolerance = 1e-9);

}  // namespace singcomb::comb
