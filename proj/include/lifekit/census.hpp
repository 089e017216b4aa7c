#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lifekit/pattern.hpp"

namespace lifekit {

// splitmix64 output function: x + golden gamma, then two xor-shift-multiply
// rounds. Used to seed the soup generator and to derive per-soup seeds.
std::uint64_t splitmix64(std::uint64_t x);

// xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; out = x * 0x2545F4914F6CDD1D.
class XorShift64Star {
 public:
  // State is splitmix64(seed), replaced by the golden gamma if that is 0.
  explicit XorShift64Star(std::uint64_t seed);
  std::uint64_t next();

 private:
  std::uint64_t x_;
};

// Cells visited row by row (y outer, x inner); a cell is alive when the top
// 53 bits of the next draw are below floor(density * 2^53).
// Throws InputError for density outside [0, 1] or negative sizes.
Pattern random_soup(std::uint64_t seed, Coord w, Coord h, double density);

// Seed of soup `index` in a census: splitmix64(seed + 0x9E3779B97F4A7C15 * (index + 1)).
std::uint64_t soup_seed(std::uint64_t seed, std::uint64_t index);

struct CycleResult {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;
  Pattern cycle_phase;  // state at generation `preperiod`
};

// Torus only. Throws UnresolvedError when no state repeats within max_gens.
CycleResult run_to_cycle(const Pattern& p, const Topology& t, std::uint64_t max_gens);

struct CensusObject {
  Pattern cells;      // live cells of the object in the given phase
  Pattern footprint;  // union over the cycle
  Pattern canonical;  // least origin-normalized image over symmetries and phases
  std::uint64_t period = 0;  // phases until the normalized shape repeats
  std::string key;    // dictionary name or "p<period>:<rle body>"
};

// Components are 8-connected pieces of the union of live cells over
// `period` phases. On a torus, adjacency and shapes wrap. Ordered by the
// first footprint cell.
std::vector<CensusObject> separate_objects(const Pattern& cycle_phase, std::uint64_t period,
                                           const Topology& t = Topology::plane());

// Dictionary name for a canonical form, or "p<period>:<rle body>".
std::string object_key(const Pattern& canonical, std::uint64_t period);

struct SoupConfig {
  std::uint64_t seed = 0;
  Coord soup_width = 16, soup_height = 16;
  double density = 0.375;
  Topology torus = Topology::torus(64, 64);
  std::uint64_t max_gens = 20000;
  std::uint64_t soup_count = 0;
};

struct CensusTally {
  std::map<std::string, std::uint64_t> objects;
  std::uint64_t soups = 0;
  std::uint64_t unresolved = 0;
  friend bool operator==(const CensusTally&, const CensusTally&) = default;
};

// Soup i is random_soup(soup_seed(seed, i), ...) placed at the torus origin.
CensusTally run_census(const SoupConfig& cfg, unsigned jobs = 1);

}  // namespace lifekit
