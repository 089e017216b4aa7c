#pragma once

#include <cstdint>
#include <filesystem>
#include <compare>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "lifekit/dynamics.hpp"
#include "lifekit/pattern.hpp"

namespace lifekit {

struct CatalystSpec {
  std::string name;
  Pattern pattern;  // a still life
  std::vector<Symmetry> allowed_transforms{all_symmetries.begin(), all_symmetries.end()};
  // Longest run of generations any of its cells may stay dead.
  std::uint64_t recovery_deadline = 64;
};

enum class SearchSymmetry : std::uint8_t { none, c2 };

struct SearchConfig {
  Pattern active_region;
  std::vector<CatalystSpec> catalysts;
  unsigned max_catalysts = 1;
  // Offsets of the oriented catalyst's top-left corner. When `placement_margin`
  // is set the box is derived per orientation instead: the catalyst must fit
  // inside the active region's bounding box grown by the margin.
  Box placement_box;
  std::optional<Coord> placement_margin;
  std::uint64_t max_gens = 256;
  std::optional<std::uint64_t> require_period;
  // C2: every placement is paired with its image under (x, y) -> (cx2 - x, cy2 - y).
  SearchSymmetry symmetry = SearchSymmetry::none;
  Coord c2_x2 = 0, c2_y2 = 0;
  // Configurations examined before giving up; 0 means no limit.
  std::uint64_t max_configs = 0;
};

struct CatalystPlacement {
  std::size_t catalyst = 0;
  D8Transform transform;  // applied to the origin-normalized catalyst pattern
  friend auto operator<=>(const CatalystPlacement& a, const CatalystPlacement& b) {
    return std::tie(a.catalyst, a.transform.sym, a.transform.dx, a.transform.dy) <=>
           std::tie(b.catalyst, b.transform.sym, b.transform.dx, b.transform.dy);
  }
  friend bool operator==(const CatalystPlacement&, const CatalystPlacement&) = default;
};

struct SearchSolution {
  std::vector<CatalystPlacement> placements;  // sorted
  Pattern resulting_pattern;
  DynamicsReport report;
};

struct SearchResult {
  std::vector<SearchSolution> solutions;  // one per D8 class, sorted
  bool incomplete = false;                // max_configs ran out
  std::uint64_t configs_examined = 0;
};

// Depth-first placement with just-in-time ordering: catalysts are added in
// order of the first generation the reaction comes within two cells of
// them, and a branch is cut once a placed catalyst has stayed damaged past
// its deadline. Top-level branches run on `jobs` threads.
SearchResult search_catalysts(const SearchConfig& cfg, unsigned jobs = 1);

// Every combination of placements, each checked from scratch.
SearchResult search_catalysts_exhaustive(const SearchConfig& cfg, unsigned jobs = 1);

// Throws InputError for malformed JSON or invalid fields. Relative "file"
// paths are resolved against base_dir.
SearchConfig parse_search_config(const std::string& json, const std::filesystem::path& base_dir = {});

// Validates the invariants (non-empty region, still-life catalysts, ...).
void validate_search_config(const SearchConfig& cfg);

}  // namespace lifekit
