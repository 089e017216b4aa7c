#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "lifekit/dynamics.hpp"
#include "lifekit/pattern.hpp"

namespace lifekit {

// The stable reflector and the glider it expects, in the reflector's own
// frame (bounding box at the origin).
struct SnarkFixture {
  Pattern snark;
  Pattern input_glider;  // one phase of a glider on the input lane
  Cell input_heading{1, 1};
  Cell output_heading{1, -1};
  std::uint64_t reflection_delay = 2;
  std::uint64_t repeat_time = 43;
};

const SnarkFixture& snark_fixture();

struct GliderInsertion {
  std::uint64_t phase = 0;  // generations after the seed glider's start
  Pattern glider;           // cells in loop coordinates
  Cell heading;
};

struct SnarkLoopSpec {
  std::uint64_t p = 0;
  std::uint64_t n = 0;  // floor((p-1)/2)
  std::uint64_t m = 0;  // ceil((p-1)/2)
  std::array<D8Transform, 4> reflector_placements;  // bottom, left, top, right
  std::array<GliderInsertion, 8> glider_insertions;
  Coord clearance = 0;  // Chebyshev gap kept between inserted gliders and reflectors

  std::uint64_t traversal_time() const { return 8 * (n + m + 1); }
};

struct SnarkLoop {
  SnarkLoopSpec spec;
  Pattern pattern;
  DynamicsReport report;
};

// Throws InputError for p < 43 and VerificationError if no candidate
// passes simulation.
SnarkLoop synth_snark_loop(std::uint64_t p);

struct Composite {
  Pattern pattern;
  std::uint64_t period = 0;
  Coord shift_x = 0, shift_y = 0;  // translation applied to b
};

// Places b to the right of a with at least `gap` dead columns between their
// cycle bounding boxes and checks by simulation that neither disturbs the
// other. Throws InputError if an input is not an oscillator of the stated
// period, VerificationError on interaction.
Composite compose_lcm(const Pattern& a, std::uint64_t pa, const Pattern& b, std::uint64_t pb,
                      Coord gap = 3);

struct Resolution {
  Pattern pattern;
  std::string provenance;  // "catalog" or "snark-loop"
  std::string name;
  std::string entry_id;    // catalog id when provenance is "catalog"
  DynamicsReport report;
};

// Throws InputError for p == 0, VerificationError if the result does not
// simulate to period p.
Resolution resolve_period(std::uint64_t p);

}  // namespace lifekit
