#pragma once

#include <iosfwd>

#include "singcomb/lle/integrator.hpp"

namespace singcomb::lle {

// Snapshot export in k-space, centered mode order (-M/2 .. M/2-1),
// amplitudes in the 1/M forward-transform convention.
//
// CSV columns: snapshot_index,field,mode_k,re,im with field A or B and
// floats at 17 significant digits.
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory);

// Binary layout (little-endian): u64 mode count M, u64 snapshot count,
// then per snapshot the A field then the B field, each as M (re, im)
// f64 pairs in centered mode order.
void write_trajectory_binary(std::ostream& os, const Trajectory& trajectory);

}  // namespace singcomb::lle
