#pragma once

#include <cstddef>

namespace dhb::detail {

struct RawMap {
    std::size_t degree;
    const char* x;
    const char* y;
    const char* t;
};

extern const RawMap raw_maps[14];

}  // namespace dhb::detail
