#include "lifekit/dynamics.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "lifekit/grid.hpp"

namespace lifekit {

std::string_view kind_name(DynamicsKind k) {
  switch (k) {
    case DynamicsKind::oscillator: return "oscillator";
    case DynamicsKind::spaceship: return "spaceship";
    case DynamicsKind::unresolved: return "unresolved";
  }
  return "unresolved";
}

DynamicsReport detect_dynamics(const Pattern& p, std::uint64_t max_gens) {
  if (max_gens == 0) throw InputError("max_gens must be positive");

  struct Seen {
    std::uint64_t gen;
    Cell origin;
  };
  // Normalized shape -> first generation it appeared in.
  std::unordered_map<Pattern, Seen, PatternHash> seen;
  std::vector<std::size_t> pops;
  std::vector<Box> boxes;

  LifeGrid grid(p, Topology::plane());
  Pattern cur = p;
  DynamicsReport r;
  for (std::uint64_t t = 0;; ++t) {
    Box b = cur.bounding_box();
    Cell origin{b.x0, b.y0};
    Pattern key = normalize(cur);
    auto [it, fresh] = seen.try_emplace(std::move(key), Seen{t, origin});
    if (!fresh) {
      const Seen& s = it->second;
      r.generations_examined = t;
      if (s.gen == 0) {
        r.period = t;
        r.dx = origin.x - s.origin.x;
        r.dy = origin.y - s.origin.y;
        r.kind = (r.dx == 0 && r.dy == 0) ? DynamicsKind::oscillator : DynamicsKind::spaceship;
        auto [lo, hi] = std::minmax_element(pops.begin(), pops.end());
        r.min_population = *lo;
        r.max_population = *hi;
        for (const Box& bb : boxes) r.cycle_bounding_box = r.cycle_bounding_box.united(bb);
      } else {
        r.kind = DynamicsKind::unresolved;
        r.preperiod = s.gen;
        r.cycle_period = t - s.gen;
      }
      return r;
    }
    pops.push_back(cur.population());
    boxes.push_back(b);
    if (t == max_gens) break;
    grid.step();
    cur = grid.pattern();
  }
  r.kind = DynamicsKind::unresolved;
  r.generations_examined = max_gens;
  return r;
}

CellPeriodMap cell_period_map(const Pattern& p, std::uint64_t period) {
  if (period == 0) throw InputError("period must be positive");
  std::vector<Pattern> phases;
  phases.reserve(period);
  LifeGrid grid(p, Topology::plane());
  phases.push_back(p);
  for (std::uint64_t i = 1; i < period; ++i) {
    grid.step();
    phases.push_back(grid.pattern());
  }
  grid.step();
  if (grid.pattern() != p) throw InputError("pattern does not repeat with the given period");

  Pattern all;
  for (const Pattern& ph : phases) all = all | ph;

  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d <= period; ++d)
    if (period % d == 0) divisors.push_back(d);

  CellPeriodMap out;
  std::vector<char> seq(period);
  for (const Cell& c : all.cells()) {
    for (std::uint64_t i = 0; i < period; ++i) seq[i] = phases[i].contains(c);
    for (std::uint64_t d : divisors) {
      bool ok = true;
      for (std::uint64_t i = d; i < period && ok; ++i) ok = seq[i] == seq[i - d];
      if (ok) {
        out.emplace(c, d);
        break;
      }
    }
  }
  return out;
}

double VolatilityStats::volatility() const {
  std::uint64_t total = rotor_cell_count + stator_cell_count;
  return total == 0 ? 0.0 : static_cast<double>(rotor_cell_count) / static_cast<double>(total);
}

VolatilityStats volatility_stats(const CellPeriodMap& map, std::uint64_t period) {
  VolatilityStats v;
  bool all_full = true, any_full = false;
  for (const auto& [cell, d] : map) {
    // A cell with cell period 1 is in the domain only if it is always alive.
    if (d == 1)
      ++v.stator_cell_count;
    else
      ++v.rotor_cell_count;
    all_full = all_full && d == period;
    any_full = any_full || d == period;
  }
  v.strictly_volatile = !map.empty() && all_full && v.stator_cell_count == 0;
  v.trivial = !any_full;
  return v;
}

VolatilityStats volatility_stats(const Pattern& p, std::uint64_t period) {
  return volatility_stats(cell_period_map(p, period), period);
}

}  // namespace lifekit
