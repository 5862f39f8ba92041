#pragma once

#include <string>

namespace singcomb::util {

// Floating-point text for CSV output: 17 significant digits, locale-free.
std::string double17(double value);

}  // namespace singcomb::util
