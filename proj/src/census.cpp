#include "lifekit/census.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "lifekit/grid.hpp"
#include "lifekit/parallel.hpp"
#include "lifekit/rle.hpp"
#include "lifekit/step.hpp"

namespace lifekit {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

// Positive remainder.
Coord wrap(Coord v, Coord n) {
  Coord r = v % n;
  return r < 0 ? r + n : r;
}

// Start coordinate of the cut after the largest run of unused values on a
// circle of size n; on the plane the minimum.
Coord cut_start(std::vector<Coord> vals, Coord n, bool circular) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  if (!circular || vals.size() < 2) return vals.front();
  Coord best_gap = vals.front() + n - vals.back() - 1;
  Coord start = vals.front();
  for (std::size_t i = 1; i < vals.size(); ++i) {
    Coord gap = vals[i] - vals[i - 1] - 1;
    if (gap > best_gap) {
      best_gap = gap;
      start = vals[i];
    }
  }
  return start;
}

// Origin-normalized shape of cells that may straddle the torus seam.
Pattern unwrap(const Pattern& cells, const Topology& t) {
  if (cells.empty()) return cells;
  if (!t.is_torus()) return normalize(cells);
  std::vector<Coord> xs, ys;
  for (const Cell& c : cells.cells()) {
    xs.push_back(c.x);
    ys.push_back(c.y);
  }
  Coord sx = cut_start(xs, t.width, true);
  Coord sy = cut_start(ys, t.height, true);
  std::vector<Cell> out;
  out.reserve(cells.population());
  for (const Cell& c : cells.cells()) out.push_back({wrap(c.x - sx, t.width), wrap(c.y - sy, t.height)});
  return normalize(Pattern(std::move(out)));
}

// Least image over D8 and phases, walking phases until the unwrapped
// shape comes back to the first one.
std::pair<Pattern, std::uint64_t> canonical_over_phases(const std::vector<Pattern>& shapes) {
  std::uint64_t period = shapes.size();
  for (std::uint64_t k = 1; k < shapes.size(); ++k) {
    if (shapes[k] == shapes[0]) {
      period = k;
      break;
    }
  }
  Pattern best;
  bool have = false;
  for (std::uint64_t k = 0; k < period; ++k) {
    Pattern c = canonical(shapes[k]);
    if (!have || c < best) {
      best = std::move(c);
      have = true;
    }
  }
  return {best, period};
}

struct Named {
  Pattern canonical;
  std::uint64_t period;
  const char* name;
};

const std::vector<Named>& dictionary() {
  static const std::vector<Named> dict = [] {
    const std::pair<const char*, const char*> src[] = {
        {"block", "2o$2o!"},           {"blinker", "3o!"},        {"beehive", "b2o$o2bo$b2o!"},
        {"loaf", "b2o$o2bo$bobo$2bo!"}, {"boat", "2o$obo$bo!"},    {"tub", "bo$obo$bo!"},
        {"pond", "b2o$o2bo$o2bo$b2o!"}, {"ship", "2o$obo$b2o!"},   {"glider", "bo$2bo$3o!"},
    };
    std::vector<Named> out;
    for (const auto& [name, body] : src) {
      Pattern p = parse_rle(std::string("x = 8, y = 8\n") + body).pattern;
      std::vector<Pattern> shapes;
      for (int t = 0; t < 4; ++t) {
        shapes.push_back(normalize(p));
        p = step(p, Topology::plane());
      }
      auto [c, period] = canonical_over_phases(shapes);
      out.push_back({c, period, name});
    }
    return out;
  }();
  return dict;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + kGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

XorShift64Star::XorShift64Star(std::uint64_t seed) : x_(splitmix64(seed)) {
  if (x_ == 0) x_ = kGamma;
}

std::uint64_t XorShift64Star::next() {
  x_ ^= x_ >> 12;
  x_ ^= x_ << 25;
  x_ ^= x_ >> 27;
  return x_ * 0x2545F4914F6CDD1Dull;
}

Pattern random_soup(std::uint64_t seed, Coord w, Coord h, double density) {
  if (!(density >= 0.0 && density <= 1.0)) throw InputError("density must be in [0, 1]");
  if (w < 0 || h < 0) throw InputError("soup size must be non-negative");
  if (w > 1 << 14 || h > 1 << 14) throw InputError("soup too large");
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(density, 53));
  XorShift64Star rng(seed);
  std::vector<Cell> cells;
  for (Coord y = 0; y < h; ++y)
    for (Coord x = 0; x < w; ++x)
      if ((rng.next() >> 11) < threshold) cells.push_back({x, y});
  return Pattern::from_sorted(std::move(cells));
}

std::uint64_t soup_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + kGamma * (index + 1));
}

CycleResult run_to_cycle(const Pattern& p, const Topology& t, std::uint64_t max_gens) {
  if (!t.is_torus()) throw InputError("run_to_cycle needs a torus");
  LifeGrid g(p, t);
  const std::size_t nw = g.words().size();
  std::vector<std::uint64_t> history;
  std::unordered_multimap<std::uint64_t, std::uint64_t> seen;
  for (std::uint64_t gen = 0;; ++gen) {
    auto w = g.words();
    std::uint64_t d = g.digest();
    auto [lo, hi] = seen.equal_range(d);
    for (auto it = lo; it != hi; ++it) {
      const std::uint64_t* old = history.data() + it->second * nw;
      if (std::equal(w.begin(), w.end(), old)) {
        CycleResult r;
        r.preperiod = it->second;
        r.period = gen - it->second;
        LifeGrid back(p, t);
        back.step(r.preperiod);
        r.cycle_phase = back.pattern();
        return r;
      }
    }
    if (gen >= max_gens) throw UnresolvedError("no repeat within max_gens", static_cast<long long>(gen));
    seen.emplace(d, gen);
    history.insert(history.end(), w.begin(), w.end());
    g.step();
  }
}

std::string object_key(const Pattern& canonical, std::uint64_t period) {
  for (const Named& n : dictionary())
    if (n.period == period && n.canonical == canonical) return n.name;
  std::string body = rle_body(canonical);
  body.erase(std::remove(body.begin(), body.end(), '\n'), body.end());
  return "p" + std::to_string(period) + ":" + body;
}

std::vector<CensusObject> separate_objects(const Pattern& cycle_phase, std::uint64_t period,
                                           const Topology& t) {
  if (period == 0) throw InputError("period must be positive");
  const bool torus = t.is_torus();
  if (torus)
    for (const Cell& c : cycle_phase.cells())
      if (c.x < 0 || c.y < 0 || c.x >= t.width || c.y >= t.height)
        throw InputError("cell outside the torus");

  std::vector<Pattern> phases{cycle_phase};
  {
    LifeGrid g(cycle_phase, t);
    for (std::uint64_t k = 1; k < period; ++k) {
      g.step();
      phases.push_back(g.pattern());
    }
  }
  Pattern all;
  for (const Pattern& q : phases) all = all | q;
  auto cells = all.cells();
  const std::size_t n = cells.size();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto index_of = [&](Cell c) -> std::ptrdiff_t {
    if (torus) c = {wrap(c.x, t.width), wrap(c.y, t.height)};
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    return it != cells.end() && *it == c ? it - cells.begin() : -1;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Cell c = cells[i];
    for (Cell d : {Cell{1, 0}, Cell{-1, 1}, Cell{0, 1}, Cell{1, 1}}) {
      std::ptrdiff_t j = index_of({c.x + d.x, c.y + d.y});
      if (j >= 0) parent[find(i)] = find(static_cast<std::size_t>(j));
    }
  }

  std::vector<std::vector<Cell>> groups;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = slot.try_emplace(find(i), groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(cells[i]);
  }

  std::vector<CensusObject> out;
  for (auto& group : groups) {
    CensusObject obj;
    obj.footprint = Pattern::from_sorted(std::move(group));
    obj.cells = cycle_phase & obj.footprint;
    std::vector<Pattern> shapes;
    for (const Pattern& q : phases) shapes.push_back(unwrap(q & obj.footprint, t));
    auto [c, p] = canonical_over_phases(shapes);
    obj.canonical = std::move(c);
    obj.period = p;
    obj.key = object_key(obj.canonical, obj.period);
    out.push_back(std::move(obj));
  }
  return out;
}

CensusTally run_census(const SoupConfig& cfg, unsigned jobs) {
  if (!cfg.torus.is_torus()) throw InputError("census needs a torus");
  if (cfg.soup_width > cfg.torus.width || cfg.soup_height > cfg.torus.height)
    throw InputError("soup larger than the torus");
  std::vector<std::vector<std::string>> keys(cfg.soup_count);
  std::vector<char> unresolved(cfg.soup_count, 0);
  parallel_for(cfg.soup_count, jobs, [&](std::size_t i) {
    Pattern soup = random_soup(soup_seed(cfg.seed, i), cfg.soup_width, cfg.soup_height, cfg.density);
    try {
      CycleResult r = run_to_cycle(soup, cfg.torus, cfg.max_gens);
      for (CensusObject& o : separate_objects(r.cycle_phase, r.period, cfg.torus))
        keys[i].push_back(std::move(o.key));
    } catch (const UnresolvedError&) {
      unresolved[i] = 1;
    }
  });
  CensusTally tally;
  tally.soups = cfg.soup_count;
  for (std::size_t i = 0; i < cfg.soup_count; ++i) {
    tally.unresolved += unresolved[i];
    for (const std::string& k : keys[i]) ++tally.objects[k];
  }
  return tally;
}

}  // namespace lifekit
