#include "singcomb/util/hash.hpp"

#include <cstdio>

namespace singcomb::util {

std::string to_hex(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(value));
    return std::string(buf);
}

}  // namespace singcomb::util
