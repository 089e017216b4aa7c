// One line per acceptance criterion. With --criterion N only that one runs.
#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>

#include "lifekit/catalog.hpp"
#include "lifekit/census.hpp"
#include "lifekit/grid.hpp"
#include "lifekit/rle.hpp"
#include "lifekit/step.hpp"
#include "lifekit/synthesis.hpp"
#include "search_fixtures.hpp"

using namespace lifekit;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome catalog_verification() {
  CatalogReport rep = verify_catalog(1);
  std::set<std::string> verified;
  for (const EntryResult& e : rep.entries)
    if (e.pass) verified.insert(e.id);
  std::string missing;
  for (std::uint64_t p = 1; p <= 42; ++p) {
    bool any = false;
    for (const CatalogEntry& e : catalog_lookup(p)) any = any || (e.source == "gallery" && verified.count(e.id));
    if (!any) missing += " p" + std::to_string(p);
  }
  for (const char* id : {"x-phoenix", "x-statorless-p5", "x-robs-p16", "p43-snark-loop"})
    if (!verified.count(id)) missing += std::string(" ") + id;
  std::string failed;
  for (const EntryResult& e : rep.entries)
    if (!e.pass) failed += " " + e.id;
  return {rep.pass() && missing.empty(),
          std::to_string(rep.entries.size()) + " entries simulated" +
              (failed.empty() ? "" : ", failed:" + failed) + (missing.empty() ? "" : ", missing:" + missing)};
}

// Exact period by direct simulation: back at generation p, not before at
// any proper divisor.
bool has_exact_period(const Pattern& pat, std::uint64_t p) {
  LifeGrid g(pat, Topology::plane());
  std::vector<Pattern> at;
  for (std::uint64_t t = 1; t <= p; ++t) {
    g.step();
    if (p % t == 0) at.push_back(g.pattern());
  }
  if (at.back() != pat) return false;
  for (std::size_t k = 0; k + 1 < at.size(); ++k)
    if (at[k] == pat) return false;
  return true;
}

Outcome omniperiodicity() {
  std::string bad;
  for (std::uint64_t p = 1; p <= 120; ++p) {
    try {
      Resolution r = resolve_period(p);
      bool ok = r.report.kind == DynamicsKind::oscillator && r.report.period == p && has_exact_period(r.pattern, p);
      if (p >= 43) {
        SnarkLoop loop = synth_snark_loop(p);
        ok = ok && loop.spec.n + loop.spec.m + 1 == p && loop.spec.traversal_time() == 8 * p &&
             loop.pattern == r.pattern;
      }
      if (!ok) bad += " " + std::to_string(p);
    } catch (const Error& e) {
      bad += " " + std::to_string(p) + "(" + e.what() + ")";
    }
  }
  return {bad.empty(), bad.empty() ? "periods 1..120 resolved and re-simulated" : "failed:" + bad};
}

Outcome stepper_equivalence() {
  std::uint64_t mismatches = 0;
  for (const Topology& topo : {Topology::plane(), Topology::torus(64, 64)}) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      Pattern fast = random_soup(soup_seed(3, i), 32, 32, 0.375);
      Pattern slow = fast;
      LifeGrid grid(fast, topo);
      for (int t = 0; t < 64; ++t) {
        fast = step(fast, topo);
        slow = step_naive(slow, topo);
        grid.step();
        if (fast != slow || grid.pattern() != slow) {
          ++mismatches;
          break;
        }
      }
    }
  }
  return {mismatches == 0, "2000 soups x 64 generations, " + std::to_string(mismatches) + " mismatching"};
}

Outcome kinematics() {
  DynamicsReport g = detect_dynamics(parse_rle("x = 3, y = 3\nbo$2bo$3o!").pattern, 100);
  DynamicsReport b = detect_dynamics(parse_rle("x = 2, y = 2\n2o$2o!").pattern, 100);
  DynamicsReport l = detect_dynamics(parse_rle("x = 3, y = 1\n3o!").pattern, 100);
  bool ok = g.kind == DynamicsKind::spaceship && g.period == 4 && g.dx == 1 && g.dy == 1 &&
            b.kind == DynamicsKind::oscillator && b.period == 1 && l.kind == DynamicsKind::oscillator &&
            l.period == 2;
  return {ok, "glider " + std::string(kind_name(g.kind)) + " p" + std::to_string(g.period) + " (" +
                  std::to_string(g.dx) + "," + std::to_string(g.dy) + "), block p" + std::to_string(b.period) +
                  ", blinker p" + std::to_string(l.period)};
}

Outcome volatility() {
  std::string wrong;
  auto expect = [&](const char* id, bool strict) {
    const CatalogEntry& e = catalog_entry(id);
    CellPeriodMap map = cell_period_map(e.pattern(), e.period);
    VolatilityStats v = volatility_stats(map, e.period);
    if (v.strictly_volatile == strict) return;
    std::size_t short_period = 0;
    for (const auto& [cell, d] : map) short_period += d != e.period;
    wrong += std::string(" ") + e.name + " (strictly_volatile " + (v.strictly_volatile ? "true" : "false") + ", " +
             std::to_string(short_period) + " of " + std::to_string(map.size()) +
             " cells below the full period, stator " + std::to_string(v.stator_cell_count) + ")";
  };
  for (const char* id : {"p08-figure-eight", "p14-tumbler", "p15-pentadecathlon", "x-robs-p16", "x-phoenix",
                         "x-statorless-p5"})
    expect(id, true);
  for (const char* id : {"p03-pulsar", "p30-queen-bee-shuttle"}) expect(id, false);

  Composite c = compose_lcm(catalog_entry("x-jam").pattern(), 3, catalog_entry("x-mold").pattern(), 4);
  DynamicsReport r = detect_dynamics(c.pattern, default_max_gens);
  bool trivial = volatility_stats(c.pattern, 12).trivial;
  if (r.period != 12 || !trivial) wrong += " jam+mold(period " + std::to_string(r.period) + ")";
  return {wrong.empty(), wrong.empty() ? "all volatility expectations hold" : "unexpected:" + wrong};
}

Outcome rle_round_trip() {
  std::size_t n = 0;
  std::string bad;
  for (const CatalogEntry& e : catalog()) {
    if (!e.has_pattern()) continue;
    ++n;
    std::string first = write_rle(e.pattern());
    Pattern again = parse_rle(first).pattern;
    if (again != normalize(e.pattern()) || write_rle(again) != first || write_rle(e.pattern()) != first)
      bad += " " + e.id;
  }
  return {bad.empty(), std::to_string(n) + " patterns" + (bad.empty() ? " fixed and byte-stable" : ", failed:" + bad)};
}

Outcome queen_bee() {
  SearchConfig cfg = fixtures::queen_bee_search();
  SearchResult one = search_catalysts(cfg, 1);
  SearchResult eight = search_catalysts(cfg, 8);
  std::size_t matches = 0;
  for (const SearchSolution& s : one.solutions) matches += fixtures::is_queen_bee_shuttle(s.resulting_pattern);
  bool same = fixtures::same_solutions(one, eight);
  return {matches >= 1 && same && !one.incomplete,
          std::to_string(one.solutions.size()) + " solutions, " + std::to_string(matches) +
              " equivalent to the shuttle, jobs 1 vs 8 " + (same ? "identical" : "DIFFER")};
}

Outcome census() {
  SoupConfig cfg;
  cfg.seed = 1;
  cfg.soup_count = 10000;
  CensusTally t1 = run_census(cfg, 1);
  bool same = run_census(cfg, 4) == t1 && run_census(cfg, 8) == t1;
  std::vector<std::pair<std::uint64_t, std::string>> named;
  for (const auto& [k, n] : t1.objects)
    if (k.find(':') == std::string::npos) named.push_back({n, k});
  std::sort(named.rbegin(), named.rend());
  bool top = named.size() >= 2 && std::set<std::string>{named[0].second, named[1].second} ==
                                       std::set<std::string>{"block", "blinker"};
  std::string lead = named.size() >= 2 ? named[0].second + " " + std::to_string(named[0].first) + ", " +
                                             named[1].second + " " + std::to_string(named[1].first)
                                       : "too few objects";
  return {same && top, "10000 soups, jobs 1/4/8 " + std::string(same ? "identical" : "DIFFER") + ", top: " + lead};
}

Outcome pruning() {
  std::string bad;
  std::size_t total = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SearchConfig cfg = fixtures::seeded_hassler_search(seed);
    SearchResult pruned = search_catalysts(cfg, 1);
    SearchResult full = search_catalysts_exhaustive(cfg, 1);
    total += full.solutions.size();
    if (!fixtures::same_solutions(pruned, full)) bad += " seed" + std::to_string(seed);
  }
  return {bad.empty(), "5 seeded regions, " + std::to_string(total) + " solutions" +
                           (bad.empty() ? ", sets identical" : ", differ at" + bad)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"catalog verification", catalog_verification},
      {"omniperiodicity 1..120", omniperiodicity},
      {"stepper oracle equivalence", stepper_equivalence},
      {"kinematics", kinematics},
      {"volatility suite", volatility},
      {"RLE round trip", rle_round_trip},
      {"queen bee rediscovery", queen_bee},
      {"census determinism", census},
      {"pruning soundness", pruning},
  };
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) only = std::atoi(argv[2]);
  if (only < 0 || only > static_cast<int>(criteria.size()) || (argc != 1 && only == 0)) {
    std::cerr << "usage: acceptance [--criterion N]\n";
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i + 1) != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
              << o.detail << " (" << std::fixed << std::setprecision(1) << secs << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
