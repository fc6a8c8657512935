#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chopf {

// Index type for basis positions and flattened tensor coordinates.
using Idx = std::int64_t;

struct ChopfError : std::runtime_error {
    explicit ChopfError(const std::string& what) : std::runtime_error(what) {}
};

// Flattened row-major pair index inside a tensor product basis.
inline Idx pairIndex(Idx i, Idx j, Idx dimRight) { return i * dimRight + j; }
inline std::pair<Idx, Idx> unpairIndex(Idx t, Idx dimRight) {
    return {t / dimRight, t % dimRight};
}

}  // namespace chopf
