#pragma once

#include "lifekit/catalog.hpp"
#include "lifekit/catsearch.hpp"
#include "lifekit/census.hpp"
#include "lifekit/grid.hpp"
#include "lifekit/rle.hpp"

namespace lifekit::fixtures {

inline CatalystSpec block_spec() {
  return {"block", parse_rle("x = 2, y = 2\n2o$2o!").pattern, {all_symmetries.begin(), all_symmetries.end()}, 64};
}

inline CatalystSpec eater_spec() {
  return {"eater", parse_rle("x = 4, y = 4\n2o$obo$2bo$2b2o!").pattern,
          {all_symmetries.begin(), all_symmetries.end()}, 64};
}

// Queen bee with its two blocks, in the catalog shuttle's frame.
inline SearchConfig queen_bee_search() {
  SearchConfig cfg;
  cfg.active_region = catalog_entry("x-queen-bee").pattern();
  cfg.catalysts = {block_spec()};
  cfg.max_catalysts = 2;
  cfg.placement_margin = 12;
  cfg.max_gens = 256;
  cfg.require_period = 30;
  return cfg;
}

// A shuttle with one isolated block taken out, turned and shifted by the
// seed, plus an 8x8 offset box that still holds the missing block.
inline SearchConfig seeded_hassler_search(std::uint64_t seed) {
  struct Source {
    const char* id;
    Cell block;
  };
  static const Source sources[] = {
      {"p30-queen-bee-shuttle", {0, 3}},  {"p30-queen-bee-shuttle", {20, 2}},
      {"p46-twin-bees-shuttle", {0, 1}},  {"p46-twin-bees-shuttle", {0, 8}},
      {"p46-twin-bees-shuttle", {27, 1}}, {"p46-twin-bees-shuttle", {27, 8}},
  };
  XorShift64Star rng(seed);
  const Source& src = sources[rng.next() % std::size(sources)];
  const Symmetry sym = all_symmetries[rng.next() % all_symmetries.size()];
  const Coord jx = static_cast<Coord>(rng.next() % 8), jy = static_cast<Coord>(rng.next() % 8);

  Pattern whole = catalog_entry(src.id).pattern();
  Pattern blk{{src.block.x, src.block.y},
              {src.block.x + 1, src.block.y},
              {src.block.x, src.block.y + 1},
              {src.block.x + 1, src.block.y + 1}};
  const D8Transform t{sym, 0, 0};
  Box bb = transform(blk, t).bounding_box();

  SearchConfig cfg;
  cfg.active_region = transform(whole - blk, t);
  cfg.catalysts = {block_spec(), eater_spec()};
  cfg.max_catalysts = 1;
  cfg.max_gens = 256;
  cfg.placement_box = {bb.x0 - jx, bb.y0 - jy, bb.x0 - jx + 7, bb.y0 - jy + 7};
  return cfg;
}

inline bool same_solutions(const SearchResult& a, const SearchResult& b) {
  if (a.solutions.size() != b.solutions.size() || a.incomplete != b.incomplete) return false;
  for (std::size_t i = 0; i < a.solutions.size(); ++i) {
    const SearchSolution& x = a.solutions[i];
    const SearchSolution& y = b.solutions[i];
    if (x.placements != y.placements || x.resulting_pattern != y.resulting_pattern || !(x.report == y.report))
      return false;
  }
  return true;
}

// Some phase of the catalog shuttle is D8-equivalent to p.
inline bool is_queen_bee_shuttle(const Pattern& p) {
  LifeGrid g(catalog_entry("p30-queen-bee-shuttle").pattern(), Topology::plane());
  const Pattern key = canonical(p);
  for (int t = 0; t < 30; ++t, g.step())
    if (canonical(g.pattern()) == key) return true;
  return false;
}

}  // namespace lifekit::fixtures
