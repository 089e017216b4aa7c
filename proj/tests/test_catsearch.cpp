#include "doctest.h"
#include "lifekit/catalog.hpp"
#include "lifekit/catsearch.hpp"
#include "lifekit/rle.hpp"
#include "lifekit/step.hpp"
#include "search_fixtures.hpp"

using namespace lifekit;
using namespace lifekit::fixtures;

namespace {

void check_invariants(const SearchConfig& cfg, const SearchResult& r) {
  for (const SearchSolution& s : r.solutions) {
    CHECK(s.report.kind == DynamicsKind::oscillator);
    if (cfg.require_period) CHECK(s.report.period == *cfg.require_period);
    CHECK(detect_dynamics(s.resulting_pattern, cfg.max_gens) == s.report);
    // rebuild the pattern from the placements
    Pattern rebuilt = cfg.active_region;
    Pattern cats;
    for (const CatalystPlacement& p : s.placements)
      cats = cats | transform(normalize(cfg.catalysts[p.catalyst].pattern), p.transform);
    CHECK((rebuilt | cats) == s.resulting_pattern);
    // catalyst cells come back every period
    CHECK((step_n(s.resulting_pattern, Topology::plane(), s.report.period) & cats) == cats);
  }
}

}  // namespace

TEST_CASE("bare regions that already qualify") {
  SearchConfig block;
  block.active_region = parse_rle("x = 2, y = 2\n2o$2o!").pattern;
  block.catalysts = {block_spec()};
  block.placement_box = {-4, -4, 4, 4};
  block.require_period = 1;
  SearchResult r = search_catalysts(block);
  REQUIRE_FALSE(r.solutions.empty());
  CHECK(r.solutions[0].placements.empty());
  CHECK(r.solutions[0].report.period == 1);
  // a still life never engages a catalyst
  CHECK(r.solutions.size() == 1);

  SearchConfig pulsar;
  pulsar.active_region = catalog_entry("p03-pulsar").pattern();
  pulsar.catalysts = {block_spec()};
  pulsar.placement_margin = 3;
  pulsar.require_period = 3;
  r = search_catalysts(pulsar);
  REQUIRE_FALSE(r.solutions.empty());
  CHECK(r.solutions[0].placements.empty());
  check_invariants(pulsar, r);

  // no library and no bare solution: empty, not an error
  SearchConfig glider;
  glider.active_region = parse_rle("x = 3, y = 3\nbo$2bo$3o!").pattern;
  glider.placement_box = {0, 0, 0, 0};
  glider.require_period = 4;
  CHECK(search_catalysts(glider).solutions.empty());
}

TEST_CASE("queen bee shuttle is rediscovered") {
  SearchConfig cfg = queen_bee_search();
  SearchResult serial = search_catalysts(cfg, 1);
  CHECK_FALSE(serial.incomplete);
  bool shuttle = false;
  for (const SearchSolution& s : serial.solutions) {
    CHECK(s.placements.size() == 2);
    shuttle = shuttle || is_queen_bee_shuttle(s.resulting_pattern);
  }
  CHECK(shuttle);
  check_invariants(cfg, serial);
  CHECK(same_solutions(serial, search_catalysts(cfg, 8)));
}

TEST_CASE("pruning matches exhaustive search") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SearchConfig cfg = seeded_hassler_search(seed);
    SearchResult pruned = search_catalysts(cfg, 2);
    SearchResult full = search_catalysts_exhaustive(cfg, 2);
    CHECK_MESSAGE(same_solutions(pruned, full), "seed " << seed);
    CHECK_FALSE(pruned.solutions.empty());
    check_invariants(cfg, pruned);
  }

  // two catalysts: both left blocks of the twin bees shuttle
  Pattern twin = catalog_entry("p46-twin-bees-shuttle").pattern();
  SearchConfig cfg;
  cfg.active_region = twin - parse_rle("x = 2, y = 9\n2o$2o6$2o$2o!").pattern.translated(0, 1);
  cfg.catalysts = {block_spec()};
  cfg.max_catalysts = 2;
  cfg.placement_box = {-3, 1, 4, 8};
  cfg.require_period = 46;
  SearchResult pruned = search_catalysts(cfg, 1);
  SearchResult full = search_catalysts_exhaustive(cfg, 3);
  CHECK(same_solutions(pruned, full));
  bool original = false;
  for (const SearchSolution& s : pruned.solutions) original = original || d8_equivalent(s.resulting_pattern, twin);
  CHECK(original);
}

TEST_CASE("budget exhaustion is flagged and deterministic") {
  SearchConfig cfg = queen_bee_search();
  cfg.max_configs = 500;
  SearchResult a = search_catalysts(cfg, 1);
  CHECK(a.incomplete);
  CHECK(a.configs_examined == 500);
  CHECK(same_solutions(a, search_catalysts(cfg, 4)));
}

TEST_CASE("C2 placements come in pairs") {
  SearchConfig cfg;
  cfg.active_region = catalog_entry("p03-pulsar").pattern();
  Box b = cfg.active_region.bounding_box();
  cfg.catalysts = {block_spec()};
  cfg.placement_margin = 4;
  cfg.symmetry = SearchSymmetry::c2;
  cfg.c2_x2 = b.x0 + b.x1;
  cfg.c2_y2 = b.y0 + b.y1;
  cfg.require_period = 3;
  SearchResult r = search_catalysts(cfg);
  REQUIRE_FALSE(r.solutions.empty());
  for (const SearchSolution& s : r.solutions) {
    Pattern img = transform(s.resulting_pattern, {Symmetry::rot180, cfg.c2_x2, cfg.c2_y2});
    CHECK(img == s.resulting_pattern);
  }
}

TEST_CASE("config parsing") {
  const char* good = R"({
    "active_region": {"catalog": "x-queen-bee"},
    "catalysts": [{"name": "block", "recovery_deadline": 40}, "eater"],
    "max_catalysts": 2,
    "placement_box": {"margin": 12},
    "max_gens": 128,
    "require_period": 30,
    "max_configs": 1000
  })";
  SearchConfig cfg = parse_search_config(good);
  CHECK(cfg.catalysts.size() == 2);
  CHECK(cfg.catalysts[0].recovery_deadline == 40);
  CHECK(cfg.catalysts[1].pattern.population() == 7);
  CHECK(cfg.placement_margin == 12);
  CHECK(cfg.require_period == 30u);
  CHECK(cfg.max_configs == 1000);

  cfg = parse_search_config(R"({"active_region": "x = 3, y = 1\n3o!",
    "catalysts": [{"rle": "x = 2, y = 2\n2o$2o!", "transforms": ["identity"]}],
    "placement_box": {"x0": -3, "y0": -3, "x1": 3, "y1": 3},
    "symmetry": {"type": "C2", "center2": [2, 0]}})");
  CHECK(cfg.placement_box == Box{-3, -3, 3, 3});
  CHECK(cfg.symmetry == SearchSymmetry::c2);
  CHECK(cfg.catalysts[0].allowed_transforms.size() == 1);

  CHECK_THROWS_AS(parse_search_config("{"), InputError);
  CHECK_THROWS_AS(parse_search_config(R"({"active_region": "x = 3, y = 1\n3o!", "bogus": 1})"), InputError);
  CHECK_THROWS_AS(parse_search_config(R"({"catalysts": []})"), InputError);
  CHECK_THROWS_AS(parse_search_config(R"({"active_region": "x = 3, y = 1\n3o!",
    "catalysts": [{"rle": "x = 3, y = 1\n3o!"}]})"), InputError);
  CHECK_THROWS_AS(parse_search_config(R"({"active_region": "x = 3, y = 1\n3o!", "max_catalysts": 0})"),
                  InputError);
  CHECK_THROWS_AS(parse_search_config(R"({"active_region": "x = 3, y = 1\n3o!", "symmetry": "D4"})"),
                  InputError);
  CHECK_THROWS_AS(parse_search_config(R"({"active_region": "x = 3, y = 1\n3o!", "catalysts": ["ship"]})"),
                  InputError);
}
