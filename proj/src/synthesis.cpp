#include "lifekit/synthesis.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "lifekit/catalog.hpp"
#include "lifekit/grid.hpp"
#include "lifekit/step.hpp"

namespace lifekit {

namespace {

// Reflector layout of the 43-generation loop: symmetry applied to the
// fixture, then bounding-box top-left, in loop coordinates.
struct Placement {
  Symmetry sym;
  Coord x, y;
};
constexpr std::array<Placement, 4> kLoop43 = {{
    {Symmetry::identity, 19, 42},  // bottom
    {Symmetry::rot90, 0, 19},      // left
    {Symmetry::rot180, 27, 0},     // top
    {Symmetry::rot270, 42, 27},    // right
}};

// One phase of the glider running from the left reflector to the bottom one.
const Pattern& seed_glider() {
  static const Pattern g{{19, 38}, {17, 39}, {19, 39}, {18, 40}, {19, 40}};
  return g;
}

const std::set<Pattern>& glider_shapes() {
  static const std::set<Pattern> shapes = [] {
    std::set<Pattern> out;
    Pattern g = seed_glider();
    for (int phase = 0; phase < 4; ++phase) {
      for (Symmetry s : all_symmetries) out.insert(normalize(transform(g, {s, 0, 0})));
      g = step(g, Topology::plane());
    }
    return out;
  }();
  return shapes;
}

Cell glider_heading(const Pattern& g) {
  Pattern later = step_n(g, Topology::plane(), 4);
  Box a = g.bounding_box(), b = later.bounding_box();
  return {b.x0 - a.x0, b.y0 - a.y0};
}

// Cells of `extra` keep more than `gap` cells (Chebyshev) away from `bare`.
bool clear_of(const Pattern& extra, const Pattern& bare, Coord gap) {
  for (const Cell& c : extra.cells())
    for (Coord dy = -gap; dy <= gap; ++dy)
      for (Coord dx = -gap; dx <= gap; ++dx)
        if (bare.contains({c.x + dx, c.y + dy})) return false;
  return true;
}

std::string describe(const SnarkLoopSpec& s) {
  std::string out = "p=" + std::to_string(s.p) + " n=" + std::to_string(s.n) +
                    " m=" + std::to_string(s.m) + " reflectors:";
  for (const D8Transform& t : s.reflector_placements)
    out += " " + std::string(symmetry_name(t.sym)) + "@(" + std::to_string(t.dx) + "," +
           std::to_string(t.dy) + ")";
  return out;
}

}  // namespace

const SnarkFixture& snark_fixture() {
  static const SnarkFixture f = [] {
    SnarkFixture s;
    s.snark = normalize(catalog_entry("x-snark").pattern());
    const Placement& bottom = kLoop43[0];
    s.input_glider = seed_glider().translated(-bottom.x, -bottom.y);
    return s;
  }();
  return f;
}

SnarkLoop synth_snark_loop(std::uint64_t p) {
  if (p < 43)
    throw InputError("Snark loops need p >= 43; use resolve_period for smaller periods");
  if (p > (std::uint64_t{1} << 20)) throw InputError("period too large");

  const SnarkFixture& fx = snark_fixture();
  SnarkLoopSpec spec;
  spec.p = p;
  spec.n = (p - 1) / 2;
  spec.m = p - 1 - spec.n;
  const Coord a = static_cast<Coord>(spec.n) - 21;
  const Coord b = static_cast<Coord>(spec.m) - 21;
  // Moving a reflector pair one diagonal along its lane adds 8 generations
  // to the circuit, one generation per period.
  const std::array<Cell, 4> shift = {{{b, b}, {0, 0}, {a, -a}, {a + b, b - a}}};

  Pattern bare;
  for (std::size_t i = 0; i < 4; ++i) {
    const Placement& pl = kLoop43[i];
    Pattern oriented = transform(fx.snark, {pl.sym, 0, 0});
    Box box = oriented.bounding_box();
    D8Transform t{pl.sym, pl.x + shift[i].x - box.x0, pl.y + shift[i].y - box.y0};
    spec.reflector_placements[i] = t;
    bare = bare | transform(fx.snark, t);
  }

  // Run a single glider once around; every snapshot p generations apart is
  // a candidate slot for another glider.
  const std::uint64_t lap = spec.traversal_time();
  std::vector<Pattern> snaps;
  snaps.reserve(lap + 1);
  LifeGrid grid(bare | seed_glider(), Topology::plane());
  snaps.push_back(grid.pattern());
  for (std::uint64_t t = 0; t < lap; ++t) {
    grid.step();
    snaps.push_back(grid.pattern());
  }
  if (snaps[lap] != snaps[0])
    throw VerificationError("single glider does not complete the loop in 8p generations: " +
                            describe(spec));

  auto glider_in = [&](const Pattern& s) -> std::optional<Pattern> {
    if (s.population() != bare.population() + 5) return std::nullopt;
    Pattern extra = s - bare;
    if (extra.population() != 5 || !glider_shapes().count(normalize(extra))) return std::nullopt;
    return extra;
  };

  for (Coord gap = 3; gap >= 0; --gap) {
    for (std::uint64_t t0 = 0; t0 < p; ++t0) {
      Pattern loop = bare;
      std::array<GliderInsertion, 8> ins;
      bool ok = true;
      for (std::uint64_t k = 0; k < 8 && ok; ++k) {
        auto g = glider_in(snaps[t0 + k * p]);
        ok = g && clear_of(*g, bare, gap);
        if (ok) {
          ins[k] = {t0 + k * p, *g, glider_heading(*g)};
          loop = loop | *g;
        }
      }
      if (!ok) continue;
      DynamicsReport r = detect_dynamics(loop, 2 * p);
      if (r.kind != DynamicsKind::oscillator || r.period != p) continue;
      spec.glider_insertions = ins;
      spec.clearance = gap;
      return {spec, loop, r};
    }
  }
  throw VerificationError("no glider arrangement verified: " + describe(spec));
}

Composite compose_lcm(const Pattern& a, std::uint64_t pa, const Pattern& b, std::uint64_t pb,
                      Coord gap) {
  if (pa == 0 || pb == 0) throw InputError("periods must be positive");
  if (gap < 0) throw InputError("gap must be non-negative");
  std::uint64_t max_gens = std::max<std::uint64_t>({default_max_gens, 2 * pa, 2 * pb});
  DynamicsReport ra = detect_dynamics(a, max_gens);
  DynamicsReport rb = detect_dynamics(b, max_gens);
  if (ra.kind != DynamicsKind::oscillator || ra.period != pa)
    throw InputError("first pattern is not an oscillator of period " + std::to_string(pa));
  if (rb.kind != DynamicsKind::oscillator || rb.period != pb)
    throw InputError("second pattern is not an oscillator of period " + std::to_string(pb));

  const std::uint64_t period = std::lcm(pa, pb);
  if (period > (std::uint64_t{1} << 24)) throw InputError("composite period too large");

  Composite c;
  c.period = period;
  if (!a.empty() && !b.empty()) {
    const Box& ba = ra.cycle_bounding_box;
    const Box& bb = rb.cycle_bounding_box;
    c.shift_x = checked_sub(checked_add(checked_add(ba.x1, gap), 1), bb.x0);
    c.shift_y = checked_sub(ba.y0, bb.y0);
  }
  Pattern bt = b.translated(c.shift_x, c.shift_y);
  c.pattern = a | bt;

  LifeGrid ga(a, Topology::plane()), gb(bt, Topology::plane()), gc(c.pattern, Topology::plane());
  for (std::uint64_t t = 1; t <= period; ++t) {
    ga.step();
    gb.step();
    gc.step();
    if (gc.pattern() != (ga.pattern() | gb.pattern()))
      throw VerificationError("components interact at generation " + std::to_string(t));
  }
  DynamicsReport rc = detect_dynamics(c.pattern, period + 1);
  if (rc.kind != DynamicsKind::oscillator || rc.period != period)
    throw VerificationError("composite period is not " + std::to_string(period));
  return c;
}

Resolution resolve_period(std::uint64_t p) {
  if (p == 0) throw InputError("period must be positive");
  Resolution r;
  if (p <= 42) {
    const CatalogEntry* pick = nullptr;
    for (const CatalogEntry& e : catalog()) {
      if (e.period == p && e.source == "gallery" && e.kind == "oscillator" && e.has_pattern()) {
        pick = &e;
        break;
      }
    }
    if (!pick) throw VerificationError("no catalog oscillator for period " + std::to_string(p));
    r.pattern = pick->pattern();
    r.provenance = "catalog";
    r.name = pick->name;
    r.entry_id = pick->id;
    r.report = detect_dynamics(r.pattern, std::max<std::uint64_t>(default_max_gens, 2 * p));
  } else {
    SnarkLoop loop = synth_snark_loop(p);
    r.pattern = std::move(loop.pattern);
    r.provenance = "snark-loop";
    r.name = "Snark loop";
    r.report = detect_dynamics(r.pattern, 2 * p);
  }
  if (r.report.kind != DynamicsKind::oscillator || r.report.period != p)
    throw VerificationError("resolved pattern does not have period " + std::to_string(p));
  return r;
}

}  // namespace lifekit
