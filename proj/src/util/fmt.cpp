#include "singcomb/util/fmt.hpp"

#include <cstdio>

namespace singcomb::util {

std::string double17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return std::string(buf);
}

}  // namespace singcomb::util
