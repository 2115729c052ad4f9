#pragma once

#include <cstdint>

#include "qlab/check.hpp"

namespace qlab::ring {

// Worked examples and seeded properties of the exact arithmetic layer.
Report check_ring(std::uint64_t seed);

}  // namespace qlab::ring
