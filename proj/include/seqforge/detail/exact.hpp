#pragma once

#include <cstdint>
#include <string>

#include "seqforge/seqcore.hpp"

namespace seqforge::detail {

/// value / 2, throwing InvariantViolation if value is odd.
inline std::int64_t exact_half(std::int64_t value, const char* what) {
    if (value % 2 != 0) {
        throw InvariantViolation(std::string("odd value ") + std::to_string(value) + " in " + what +
                                 " cannot be halved exactly");
    }
    return value / 2;
}

}  // namespace seqforge::detail
