#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "lifekit/pattern.hpp"

namespace lifekit {

enum class DynamicsKind : std::uint8_t { oscillator, spaceship, unresolved };

std::string_view kind_name(DynamicsKind k);

struct DynamicsReport {
  DynamicsKind kind = DynamicsKind::unresolved;
  std::uint64_t period = 0;  // 0 when unresolved
  Coord dx = 0, dy = 0;      // displacement per period (spaceship)
  std::uint64_t generations_examined = 0;
  // Unresolved only: a later generation recurred. The cycle it entered
  // starts at `preperiod` and has length `cycle_period`.
  std::optional<std::uint64_t> preperiod;
  std::uint64_t cycle_period = 0;
  // Periodic only, taken over one cycle.
  std::uint64_t min_population = 0, max_population = 0;
  Box cycle_bounding_box;

  friend bool operator==(const DynamicsReport&, const DynamicsReport&) = default;
};

// Plane only. Throws InputError if max_gens == 0.
DynamicsReport detect_dynamics(const Pattern& p, std::uint64_t max_gens);

inline constexpr std::uint64_t default_max_gens = 4096;

// Cell -> smallest d dividing `period` such that the cell's state sequence
// over the cycle is d-periodic. Domain: cells alive in some phase.
using CellPeriodMap = std::map<Cell, std::uint64_t>;

// Throws InputError unless step_n(p, plane, period) == p.
CellPeriodMap cell_period_map(const Pattern& p, std::uint64_t period);

struct VolatilityStats {
  std::uint64_t rotor_cell_count = 0;
  std::uint64_t stator_cell_count = 0;
  bool strictly_volatile = false;
  bool trivial = false;

  // rotor / (rotor + stator); 0 for the empty pattern.
  double volatility() const;
};

VolatilityStats volatility_stats(const CellPeriodMap& map, std::uint64_t period);
VolatilityStats volatility_stats(const Pattern& p, std::uint64_t period);

}  // namespace lifekit
