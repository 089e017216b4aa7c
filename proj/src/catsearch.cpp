#include "lifekit/catsearch.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "json.hpp"
#include "lifekit/catalog.hpp"
#include "lifekit/grid.hpp"
#include "lifekit/parallel.hpp"
#include "lifekit/rle.hpp"
#include "lifekit/step.hpp"

namespace lifekit {

namespace {

constexpr std::uint64_t kNever = std::numeric_limits<std::uint64_t>::max();

// One candidate: a placement, plus its image in C2 mode.
struct Unit {
  std::vector<CatalystPlacement> placements;
  Pattern cells;
  std::uint64_t deadline = 0;
};

// Some cell of a within Chebyshev distance d of a cell of b.
bool near(const Pattern& a, const Pattern& b, Coord d) {
  if (a.empty() || b.empty()) return false;
  Box ba = a.bounding_box(), bb = b.bounding_box();
  if (ba.x0 - d > bb.x1 || bb.x0 - d > ba.x1 || ba.y0 - d > bb.y1 || bb.y0 - d > ba.y1) return false;
  const Pattern& small = a.population() <= b.population() ? a : b;
  const Pattern& big = &small == &a ? b : a;
  for (const Cell& c : small.cells())
    for (Coord dy = -d; dy <= d; ++dy)
      for (Coord dx = -d; dx <= d; ++dx)
        if (big.contains({c.x + dx, c.y + dy})) return true;
  return false;
}

bool still(const Pattern& p) { return step(p, Topology::plane()) == p; }

struct Problem {
  const SearchConfig& cfg;
  std::vector<Unit> units;
  Box area;  // covers every unit cell
  std::uint64_t horizon = 0;  // engagement must come before this generation

  explicit Problem(const SearchConfig& c) : cfg(c) {
    validate_search_config(cfg);
    horizon = cfg.require_period ? std::min(cfg.max_gens, *cfg.require_period) : cfg.max_gens;
    const Box rb = cfg.active_region.bounding_box();
    std::vector<Pattern> seen;
    for (std::size_t i = 0; i < cfg.catalysts.size(); ++i) {
      const CatalystSpec& spec = cfg.catalysts[i];
      const Pattern base = normalize(spec.pattern);
      std::vector<Pattern> shapes;
      for (Symmetry s : all_symmetries) {
        if (std::find(spec.allowed_transforms.begin(), spec.allowed_transforms.end(), s) ==
            spec.allowed_transforms.end())
          continue;
        Pattern oriented = transform(base, {s, 0, 0});
        Box ob = oriented.bounding_box();
        Pattern shape = oriented.translated(-ob.x0, -ob.y0);
        if (std::find(shapes.begin(), shapes.end(), shape) != shapes.end()) continue;
        shapes.push_back(shape);
        Box box = cfg.placement_box;
        if (cfg.placement_margin) {
          Coord m = *cfg.placement_margin;
          box = {rb.x0 - m, rb.y0 - m, rb.x1 + m - (ob.x1 - ob.x0), rb.y1 + m - (ob.y1 - ob.y0)};
        }
        for (Coord oy = box.y0; oy <= box.y1; ++oy) {
          for (Coord ox = box.x0; ox <= box.x1; ++ox) {
            CatalystPlacement pl{i, {s, ox - ob.x0, oy - ob.y0}};
            Unit u;
            u.cells = shape.translated(ox, oy);
            u.placements.push_back(pl);
            u.deadline = spec.recovery_deadline;
            if (cfg.symmetry == SearchSymmetry::c2) {
              CatalystPlacement img{i, D8Transform{Symmetry::rot180, cfg.c2_x2, cfg.c2_y2}.compose(pl.transform)};
              Pattern image = transform(base, img.transform);
              if (image != u.cells) {
                if (near(image, u.cells, 1)) continue;
                u.cells = u.cells | image;
                u.placements.push_back(img);
                std::sort(u.placements.begin(), u.placements.end());
                if (!still(u.cells)) continue;
              }
            }
            if (near(u.cells, cfg.active_region, 1)) continue;
            if (cfg.symmetry == SearchSymmetry::c2 &&
                std::find(seen.begin(), seen.end(), u.cells) != seen.end())
              continue;
            if (cfg.symmetry == SearchSymmetry::c2) seen.push_back(u.cells);
            units.push_back(std::move(u));
          }
        }
      }
    }
    area = rb;
    for (const Unit& u : units) area = area.united(u.cells.bounding_box());
  }

  // Units may sit together: no contact and no births between them.
  bool compatible(const Pattern& placed, const Pattern& cells) const {
    if (near(cells, placed, 1)) return false;
    if (near(cells, placed, 2)) return still(placed | cells);
    return true;
  }

  // Full check of a configuration: an oscillator (of the required period)
  // in which every catalyst is touched by the reaction and never stays
  // damaged longer than its deadline.
  std::optional<SearchSolution> check(const std::vector<std::size_t>& chosen) const {
    Pattern cat;
    for (std::size_t j : chosen) cat = cat | units[j].cells;
    Pattern whole = cfg.active_region | cat;
    DynamicsReport r = detect_dynamics(whole, cfg.max_gens);
    if (r.kind != DynamicsKind::oscillator) return std::nullopt;
    if (cfg.require_period && r.period != *cfg.require_period) return std::nullopt;

    std::vector<Pattern> phases{whole};
    LifeGrid g(whole, Topology::plane());
    for (std::uint64_t t = 1; t < r.period; ++t) {
      g.step();
      phases.push_back(g.pattern());
    }
    for (std::size_t j : chosen) {
      const Unit& u = units[j];
      bool engaged = false;
      std::vector<char> damaged(r.period, 0);
      for (std::uint64_t t = 0; t < r.period; ++t) {
        engaged = engaged || near(phases[t] - cat, u.cells, 1);
        damaged[t] = (phases[t] & u.cells) != u.cells;
      }
      if (!engaged) return std::nullopt;
      if (std::all_of(damaged.begin(), damaged.end(), [](char d) { return d; })) return std::nullopt;
      std::uint64_t run = 0, longest = 0;
      for (std::uint64_t t = 0; t < 2 * r.period; ++t) {
        run = damaged[t % r.period] ? run + 1 : 0;
        longest = std::max(longest, run);
      }
      if (longest > u.deadline) return std::nullopt;
    }
    SearchSolution s;
    for (std::size_t j : chosen)
      s.placements.insert(s.placements.end(), units[j].placements.begin(), units[j].placements.end());
    std::sort(s.placements.begin(), s.placements.end());
    s.resulting_pattern = std::move(whole);
    s.report = r;
    return s;
  }
};

// Evolution of one configuration, cut at the first deadline violation.
struct History {
  std::vector<Pattern> states;
  std::vector<std::vector<std::uint64_t>> runs;  // damage run per unit, per generation
  std::uint64_t violation = kNever;
  bool returns = false;  // came back to generation 0 within the budget
};

class Searcher {
 public:
  Searcher(const Problem& pb, std::uint64_t budget) : pb_(pb), budget_(budget) {}

  struct Found {
    std::uint64_t index;
    SearchSolution solution;
  };
  std::vector<Found> found;
  std::uint64_t count = 0;
  bool truncated = false;

  // Node holding `chosen`; last = (engagement generation, unit index) of
  // the newest unit.
  void node(std::vector<std::size_t>& chosen, const Pattern& cat, std::uint64_t last_i,
            std::size_t last_j) {
    if (!take()) return;
    const std::uint64_t index = count - 1;
    History h = simulate(chosen, cat);
    if (h.returns && h.violation == kNever) consider(chosen, index);
    if (chosen.size() >= pb_.cfg.max_catalysts) return;
    expand(chosen, cat, h, last_i, last_j);
  }

 private:
  bool take() {
    if (budget_ && count >= budget_) {
      truncated = true;
      return false;
    }
    ++count;
    return true;
  }

  void consider(const std::vector<std::size_t>& chosen, std::uint64_t index) {
    if (auto s = pb_.check(chosen)) found.push_back({index, std::move(*s)});
  }

  bool recurs_at(std::uint64_t t) const {
    return pb_.cfg.require_period ? t == *pb_.cfg.require_period : true;
  }

  History simulate(const std::vector<std::size_t>& chosen, const Pattern& cat) const {
    History h;
    Pattern start = pb_.cfg.active_region | cat;
    h.states.push_back(start);
    h.runs.emplace_back(chosen.size(), 0);
    LifeGrid g(start, Topology::plane());
    for (std::uint64_t t = 1; t <= pb_.cfg.max_gens; ++t) {
      g.step();
      std::vector<std::uint64_t> run = h.runs.back();
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        const Unit& u = pb_.units[chosen[k]];
        bool dmg = false;
        for (const Cell& c : u.cells.cells()) dmg = dmg || !g.get(c.x, c.y);
        run[k] = dmg ? run[k] + 1 : 0;
        if (run[k] > u.deadline) h.violation = t;
      }
      if (h.violation != kNever) break;
      Pattern s = g.pattern();
      if (!h.returns && recurs_at(t) && s == start) h.returns = true;
      h.states.push_back(std::move(s));
      h.runs.push_back(std::move(run));
    }
    return h;
  }

  // A last unit needs no history of its own: generations before it is
  // reached are the parent's plus its cells.
  void leaf(std::vector<std::size_t>& chosen, const Pattern& cat, const History& parent,
            std::uint64_t i) {
    if (!take()) return;
    const std::uint64_t index = count - 1;
    const Unit& nu = pb_.units[chosen.back()];
    const Pattern start = pb_.cfg.active_region | cat;
    std::vector<std::uint64_t> run = parent.runs[i];
    run.push_back(0);
    LifeGrid g(parent.states[i] | nu.cells, Topology::plane());
    for (std::uint64_t t = i + 1; t <= pb_.cfg.max_gens; ++t) {
      g.step();
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        const Unit& u = pb_.units[chosen[k]];
        bool dmg = false;
        for (const Cell& c : u.cells.cells()) dmg = dmg || !g.get(c.x, c.y);
        run[k] = dmg ? run[k] + 1 : 0;
        if (run[k] > u.deadline) return;
      }
      if (recurs_at(t) && g.population() == start.population() && g.pattern() == start) {
        consider(chosen, index);
        return;
      }
      if (pb_.cfg.require_period && t >= *pb_.cfg.require_period) return;
    }
  }

  // A unit first reached (within two cells) at generation i cannot change
  // anything before generation i + 1, so this node's history is exact for
  // every child up to its own i. Children therefore come in (i, index)
  // order, and only before the first deadline violation, which no later
  // unit could undo.
  void expand(std::vector<std::size_t>& chosen, const Pattern& cat, const History& h,
              std::uint64_t last_i, std::size_t last_j) {
    const std::uint64_t limit = std::min<std::uint64_t>(
        {pb_.horizon, h.violation, static_cast<std::uint64_t>(h.states.size())});
    // first generation the reaction comes within two cells, per area cell
    const Box& a = pb_.area;
    const Coord w = a.width();
    std::vector<std::uint64_t> first(static_cast<std::size_t>(w * a.height()), kNever);
    for (std::uint64_t t = 0; t < limit; ++t) {
      for (const Cell& r : h.states[t].cells()) {
        if (cat.contains(r)) continue;
        for (Coord y = std::max(r.y - 2, a.y0); y <= std::min(r.y + 2, a.y1); ++y)
          for (Coord x = std::max(r.x - 2, a.x0); x <= std::min(r.x + 2, a.x1); ++x) {
            auto& f = first[static_cast<std::size_t>((y - a.y0) * w + (x - a.x0))];
            if (f == kNever) f = t;
          }
      }
    }
    const bool last_level = chosen.size() + 1 >= pb_.cfg.max_catalysts;
    for (std::size_t j = 0; j < pb_.units.size(); ++j) {
      const Unit& u = pb_.units[j];
      std::uint64_t i = kNever;
      for (const Cell& c : u.cells.cells())
        i = std::min(i, first[static_cast<std::size_t>((c.y - a.y0) * w + (c.x - a.x0))]);
      if (i == kNever) continue;
      if (!chosen.empty() && (i < last_i || (i == last_i && j <= last_j))) continue;
      if (!pb_.compatible(cat, u.cells)) continue;
      chosen.push_back(j);
      Pattern next = cat | u.cells;
      if (last_level)
        leaf(chosen, next, h, i);
      else
        node(chosen, next, i, j);
      chosen.pop_back();
      if (truncated) return;
    }
  }

  const Problem& pb_;
  std::uint64_t budget_;

 public:
  // Admissible first units, in the order the serial search visits them.
  std::vector<std::pair<std::size_t, std::uint64_t>> roots(History& root_history) {
    std::vector<std::size_t> none;
    root_history = simulate(none, Pattern());
    std::vector<std::pair<std::size_t, std::uint64_t>> out;
    if (pb_.cfg.max_catalysts == 0) return out;
    const Box& a = pb_.area;
    const Coord w = a.width();
    const std::uint64_t limit = std::min<std::uint64_t>(pb_.horizon, root_history.states.size());
    std::vector<std::uint64_t> first(static_cast<std::size_t>(w * a.height()), kNever);
    for (std::uint64_t t = 0; t < limit; ++t)
      for (const Cell& r : root_history.states[t].cells())
        for (Coord y = std::max(r.y - 2, a.y0); y <= std::min(r.y + 2, a.y1); ++y)
          for (Coord x = std::max(r.x - 2, a.x0); x <= std::min(r.x + 2, a.x1); ++x) {
            auto& f = first[static_cast<std::size_t>((y - a.y0) * w + (x - a.x0))];
            if (f == kNever) f = t;
          }
    for (std::size_t j = 0; j < pb_.units.size(); ++j) {
      std::uint64_t i = kNever;
      for (const Cell& c : pb_.units[j].cells.cells())
        i = std::min(i, first[static_cast<std::size_t>((c.y - a.y0) * w + (c.x - a.x0))]);
      if (i != kNever) out.push_back({j, i});
    }
    return out;
  }

  void branch(std::size_t j, std::uint64_t i, const History& root_history) {
    std::vector<std::size_t> chosen{j};
    const Pattern& cells = pb_.units[j].cells;
    if (pb_.cfg.max_catalysts == 1)
      leaf(chosen, cells, root_history, i);
    else
      node(chosen, cells, i, j);
  }

  void root(const History& h) {
    if (!take()) return;
    if (h.returns) consider({}, count - 1);
  }
};

// Keeps found solutions whose global index is inside the budget, one per
// D8 class, in a fixed order.
SearchResult finish(std::vector<std::vector<Searcher::Found>> parts, std::vector<std::uint64_t> counts,
                    std::vector<char> truncated, std::uint64_t budget) {
  SearchResult res;
  std::map<Pattern, SearchSolution> best;
  std::uint64_t offset = 0;
  for (std::size_t b = 0; b < parts.size(); ++b) {
    for (auto& f : parts[b]) {
      if (budget && offset + f.index >= budget) continue;
      Pattern key = canonical(f.solution.resulting_pattern);
      auto it = best.find(key);
      if (it == best.end())
        best.emplace(std::move(key), std::move(f.solution));
      else if (f.solution.placements < it->second.placements)
        it->second = std::move(f.solution);
    }
    offset += counts[b];
    if (truncated[b] || (budget && offset > budget)) res.incomplete = true;
  }
  res.configs_examined = budget ? std::min(offset, budget) : offset;
  std::vector<std::pair<Pattern, SearchSolution>> sorted(std::make_move_iterator(best.begin()),
                                                         std::make_move_iterator(best.end()));
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.second.placements.size() != y.second.placements.size())
      return x.second.placements.size() < y.second.placements.size();
    if (x.second.report.period != y.second.report.period)
      return x.second.report.period < y.second.report.period;
    return x.first < y.first;
  });
  for (auto& [k, s] : sorted) res.solutions.push_back(std::move(s));
  return res;
}

}  // namespace

void validate_search_config(const SearchConfig& cfg) {
  if (cfg.active_region.empty()) throw InputError("active region is empty");
  if (cfg.max_catalysts < 1) throw InputError("max_catalysts must be at least 1");
  if (cfg.max_catalysts > 8) throw InputError("max_catalysts above 8 is not supported");
  if (cfg.max_gens == 0) throw InputError("max_gens must be positive");
  if (cfg.require_period && *cfg.require_period == 0) throw InputError("require_period must be positive");
  if (!cfg.placement_margin) {
    if (cfg.placement_box.empty()) throw InputError("placement box is empty");
  } else if (*cfg.placement_margin < 0 || *cfg.placement_margin > 256) {
    throw InputError("placement margin out of range");
  }
  const Box& b = cfg.placement_box;
  if (!cfg.placement_margin && (b.width() > 1024 || b.height() > 1024))
    throw InputError("placement box too large");
  for (const CatalystSpec& c : cfg.catalysts) {
    if (c.pattern.empty()) throw InputError("catalyst " + c.name + " is empty");
    if (!still(c.pattern)) throw InputError("catalyst " + c.name + " is not a still life");
    if (c.allowed_transforms.empty()) throw InputError("catalyst " + c.name + " allows no transforms");
  }
}

SearchResult search_catalysts(const SearchConfig& cfg, unsigned jobs) {
  const Problem pb(cfg);
  Searcher top(pb, cfg.max_configs);
  History root_history;
  auto roots = top.roots(root_history);
  top.root(root_history);

  std::vector<Searcher> workers;
  workers.reserve(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) workers.emplace_back(pb, cfg.max_configs);
  parallel_for(roots.size(), jobs, [&](std::size_t k) { workers[k].branch(roots[k].first, roots[k].second, root_history); });

  std::vector<std::vector<Searcher::Found>> parts{std::move(top.found)};
  std::vector<std::uint64_t> counts{top.count};
  std::vector<char> truncated{top.truncated};
  for (Searcher& w : workers) {
    parts.push_back(std::move(w.found));
    counts.push_back(w.count);
    truncated.push_back(w.truncated);
  }
  return finish(std::move(parts), std::move(counts), std::move(truncated), cfg.max_configs);
}

SearchResult search_catalysts_exhaustive(const SearchConfig& cfg, unsigned jobs) {
  const Problem pb(cfg);
  const std::size_t n = pb.units.size();
  // part 0 is the bare region, part k + 1 all sets whose least unit is k
  std::vector<std::vector<Searcher::Found>> parts(n + 1);
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<char> truncated(n + 1, 0);
  const std::uint64_t budget = cfg.max_configs;

  auto visit = [&](std::size_t part, const std::vector<std::size_t>& chosen) {
    if (budget && counts[part] >= budget) {
      truncated[part] = 1;
      return false;
    }
    ++counts[part];
    if (auto s = pb.check(chosen)) parts[part].push_back({counts[part] - 1, std::move(*s)});
    return true;
  };
  visit(0, {});
  parallel_for(n, jobs, [&](std::size_t k) {
    std::vector<std::size_t> chosen{k};
    std::vector<Pattern> cats{pb.units[k].cells};
    auto rec = [&](auto&& self, std::size_t from) -> bool {
      if (!visit(k + 1, chosen)) return false;
      if (chosen.size() >= cfg.max_catalysts) return true;
      for (std::size_t j = from; j < n; ++j) {
        if (!pb.compatible(cats.back(), pb.units[j].cells)) continue;
        chosen.push_back(j);
        cats.push_back(cats.back() | pb.units[j].cells);
        bool go = self(self, j + 1);
        chosen.pop_back();
        cats.pop_back();
        if (!go) return false;
      }
      return true;
    };
    rec(rec, k + 1);
  });
  return finish(std::move(parts), std::move(counts), std::move(truncated), budget);
}

namespace {

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::map<std::string, const char*>& builtin_catalysts() {
  static const std::map<std::string, const char*> m = {
      {"block", "x = 2, y = 2\n2o$2o!"},
      {"beehive", "x = 4, y = 3\nb2o$o2bo$b2o!"},
      {"tub", "x = 3, y = 3\nbo$obo$bo!"},
      {"eater", "x = 4, y = 4\n2o$obo$2bo$2b2o!"},
  };
  return m;
}

// {"rle": text} | {"file": path} | {"catalog": id} | {"builtin": name}
Pattern pattern_source(const nlohmann::json& j, const std::filesystem::path& base, const char* what) {
  if (j.is_string()) return parse_rle(j.get<std::string>()).pattern;
  if (!j.is_object()) throw InputError(std::string(what) + " must be an object or RLE string");
  if (j.contains("rle")) return parse_rle(j.at("rle").get<std::string>()).pattern;
  if (j.contains("file")) {
    std::filesystem::path p = j.at("file").get<std::string>();
    return parse_rle(read_text(p.is_absolute() ? p : base / p)).pattern;
  }
  if (j.contains("catalog")) return catalog_entry(j.at("catalog").get<std::string>()).pattern();
  if (j.contains("builtin")) {
    auto it = builtin_catalysts().find(j.at("builtin").get<std::string>());
    if (it == builtin_catalysts().end()) throw InputError("unknown builtin catalyst");
    return parse_rle(it->second).pattern;
  }
  throw InputError(std::string(what) + " needs rle, file, catalog or builtin");
}

}  // namespace

SearchConfig parse_search_config(const std::string& text, const std::filesystem::path& base_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad search config: ") + e.what());
  }
  static const char* known[] = {"active_region", "catalysts",  "max_catalysts", "placement_box",
                                "max_gens",      "require_period", "symmetry",  "max_configs"};
  try {
    if (!j.is_object()) throw InputError("search config must be an object");
    for (const auto& [k, v] : j.items())
      if (std::find(std::begin(known), std::end(known), k) == std::end(known))
        throw InputError("unknown search config key: " + k);

    SearchConfig cfg;
    if (!j.contains("active_region")) throw InputError("search config needs active_region");
    cfg.active_region = normalize(pattern_source(j["active_region"], base_dir, "active_region"));
    for (const auto& c : j.value("catalysts", nlohmann::json::array())) {
      CatalystSpec spec;
      if (c.is_string()) {
        spec.name = c.get<std::string>();
        spec.pattern = pattern_source(nlohmann::json{{"builtin", spec.name}}, base_dir, "catalyst");
      } else {
        spec.name = c.value("name", std::string());
        if (!c.contains("rle") && !c.contains("file") && !c.contains("catalog") && !c.contains("builtin"))
          spec.pattern = pattern_source(nlohmann::json{{"builtin", spec.name}}, base_dir, "catalyst");
        else
          spec.pattern = pattern_source(c, base_dir, "catalyst");
        if (c.contains("transforms")) {
          spec.allowed_transforms.clear();
          for (const auto& s : c["transforms"]) {
            auto sym = symmetry_from_name(s.get<std::string>());
            if (!sym) throw InputError("unknown transform " + s.get<std::string>());
            spec.allowed_transforms.push_back(*sym);
          }
        }
        spec.recovery_deadline = c.value("recovery_deadline", spec.recovery_deadline);
      }
      cfg.catalysts.push_back(std::move(spec));
    }
    cfg.max_catalysts = j.value("max_catalysts", 1u);
    const auto& box = j.value("placement_box", nlohmann::json{{"margin", 8}});
    if (box.contains("margin")) {
      cfg.placement_margin = box["margin"].get<Coord>();
    } else {
      cfg.placement_box = {box.at("x0").get<Coord>(), box.at("y0").get<Coord>(), box.at("x1").get<Coord>(),
                           box.at("y1").get<Coord>()};
    }
    cfg.max_gens = j.value("max_gens", cfg.max_gens);
    if (j.contains("require_period") && !j["require_period"].is_null())
      cfg.require_period = j["require_period"].get<std::uint64_t>();
    if (j.contains("symmetry")) {
      const auto& s = j["symmetry"];
      std::string type = s.is_string() ? s.get<std::string>() : s.value("type", std::string("none"));
      if (type == "C2") {
        cfg.symmetry = SearchSymmetry::c2;
        if (!s.is_object() || !s.contains("center2")) throw InputError("C2 symmetry needs center2");
        cfg.c2_x2 = s["center2"].at(0).get<Coord>();
        cfg.c2_y2 = s["center2"].at(1).get<Coord>();
      } else if (type != "none") {
        throw InputError("symmetry must be none or C2");
      }
    }
    cfg.max_configs = j.value("max_configs", cfg.max_configs);
    validate_search_config(cfg);
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad search config: ") + e.what());
  }
}

}  // namespace lifekit
