#pragma once

#include <cstdint>

#include "lifekit/pattern.hpp"

namespace lifekit {

// B3/S23 successor. Plane: throws OverflowError if a live cell sits on the
// int64 boundary. Torus: throws InputError if p lies outside the torus.
Pattern step(const Pattern& p, const Topology& t);

// Per-cell neighbour counting reference. Same contract as step().
Pattern step_naive(const Pattern& p, const Topology& t);

Pattern step_n(const Pattern& p, const Topology& t, std::uint64_t n);

}  // namespace lifekit
