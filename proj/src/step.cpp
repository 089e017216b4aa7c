#include "lifekit/step.hpp"

#include <algorithm>
#include <limits>

#include "lifekit/grid.hpp"

namespace lifekit {

namespace {

constexpr Coord kMin = std::numeric_limits<Coord>::min();
constexpr Coord kMax = std::numeric_limits<Coord>::max();

// Windows up to this many cells go through the bit grid directly.
constexpr std::uint64_t kDirectArea = std::uint64_t{1} << 22;

void check_plane_bounds(const Pattern& p) {
  if (p.empty()) return;
  Box b = p.bounding_box();
  if (b.x0 == kMin || b.y0 == kMin || b.x1 == kMax || b.y1 == kMax)
    throw OverflowError("live cell on the coordinate boundary");
}

std::uint64_t area(const Box& b) {
  if (b.empty()) return 0;
  auto w = static_cast<unsigned __int128>(static_cast<std::uint64_t>(b.x1) - static_cast<std::uint64_t>(b.x0)) + 3;
  auto h = static_cast<unsigned __int128>(static_cast<std::uint64_t>(b.y1) - static_cast<std::uint64_t>(b.y0)) + 3;
  auto a = w * h;
  return a > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                        : static_cast<std::uint64_t>(a);
}

Pattern naive_sparse(const Pattern& p);

// Cells split by two or more empty rows (or columns) evolve independently
// for one generation, and their successors cannot overlap.
void step_pieces(std::vector<Cell> cells, std::vector<Cell>& out) {
  if (cells.empty()) return;
  Pattern piece(std::move(cells));
  Box b = piece.bounding_box();
  if (area(b) <= kDirectArea) {
    LifeGrid g(piece, Topology::plane());
    g.step();
    Pattern r = g.pattern();
    out.insert(out.end(), r.cells().begin(), r.cells().end());
    return;
  }
  std::span<const Cell> cs = piece.cells();
  // rows: already sorted by y
  Coord best_gap = 0;
  std::size_t cut = 0;
  for (std::size_t i = 1; i < cs.size(); ++i) {
    Coord gap = static_cast<Coord>(static_cast<std::uint64_t>(cs[i].y) - static_cast<std::uint64_t>(cs[i - 1].y));
    if (cs[i].y > cs[i - 1].y && (gap > best_gap || gap < 0)) {
      best_gap = gap < 0 ? std::numeric_limits<Coord>::max() : gap;
      cut = i;
    }
  }
  if (best_gap >= 3) {
    step_pieces({cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(cut)}, out);
    step_pieces({cs.begin() + static_cast<std::ptrdiff_t>(cut), cs.end()}, out);
    return;
  }
  std::vector<Cell> byx(cs.begin(), cs.end());
  std::sort(byx.begin(), byx.end(), [](const Cell& a, const Cell& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  best_gap = 0;
  for (std::size_t i = 1; i < byx.size(); ++i) {
    if (byx[i].x <= byx[i - 1].x) continue;
    Coord gap = static_cast<Coord>(static_cast<std::uint64_t>(byx[i].x) - static_cast<std::uint64_t>(byx[i - 1].x));
    if (gap < 0) gap = std::numeric_limits<Coord>::max();
    if (gap > best_gap) {
      best_gap = gap;
      cut = i;
    }
  }
  if (best_gap >= 3) {
    step_pieces({byx.begin(), byx.begin() + static_cast<std::ptrdiff_t>(cut)}, out);
    step_pieces({byx.begin() + static_cast<std::ptrdiff_t>(cut), byx.end()}, out);
    return;
  }
  Pattern r = naive_sparse(piece);
  out.insert(out.end(), r.cells().begin(), r.cells().end());
}

// Tally one entry per (live cell, neighbour) pair, then read counts off runs.
Pattern naive_sparse(const Pattern& p) {
  struct Hit {
    Cell c;
    bool self;
  };
  std::vector<Hit> hits;
  hits.reserve(p.population() * 9);
  for (const Cell& c : p.cells())
    for (Coord dy = -1; dy <= 1; ++dy)
      for (Coord dx = -1; dx <= 1; ++dx) hits.push_back({{c.x + dx, c.y + dy}, dx == 0 && dy == 0});
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.c < b.c; });
  std::vector<Cell> out;
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    int n = 0;
    bool alive = false;
    for (; j < hits.size() && hits[j].c == hits[i].c; ++j) {
      if (hits[j].self)
        alive = true;
      else
        ++n;
    }
    if (n == 3 || (alive && n == 2)) out.push_back(hits[i].c);
    i = j;
  }
  return Pattern::from_sorted(std::move(out));
}

// Dense reference: a byte per cell over the box, neighbours counted one by one.
Pattern naive_dense(const Pattern& p, Coord x0, Coord y0, Coord w, Coord h, bool wrap) {
  std::vector<std::uint8_t> alive(static_cast<std::size_t>(w * h), 0);
  for (const Cell& c : p.cells()) alive[static_cast<std::size_t>((c.y - y0) * w + (c.x - x0))] = 1;
  auto at = [&](Coord x, Coord y) -> int {
    if (wrap) {
      x = (x + w) % w;
      y = (y + h) % h;
    } else if (x < 0 || y < 0 || x >= w || y >= h) {
      return 0;
    }
    return alive[static_cast<std::size_t>(y * w + x)];
  };
  std::vector<Cell> out;
  for (Coord y = 0; y < h; ++y) {
    for (Coord x = 0; x < w; ++x) {
      int n = 0;
      for (Coord dy = -1; dy <= 1; ++dy)
        for (Coord dx = -1; dx <= 1; ++dx)
          if (dx || dy) n += at(x + dx, y + dy);
      if (n == 3 || (n == 2 && at(x, y))) out.push_back({x + x0, y + y0});
    }
  }
  return Pattern::from_sorted(std::move(out));
}

}  // namespace

Pattern step(const Pattern& p, const Topology& t) {
  if (t.is_torus()) {
    LifeGrid g(p, t);
    g.step();
    return g.pattern();
  }
  check_plane_bounds(p);
  std::vector<Cell> out;
  step_pieces({p.cells().begin(), p.cells().end()}, out);
  return Pattern(std::move(out));
}

Pattern step_naive(const Pattern& p, const Topology& t) {
  if (t.is_torus()) {
    if (t.width < 3 || t.height < 3) throw InputError("torus must be at least 3x3");
    require_within(p, t);
    return naive_dense(p, 0, 0, t.width, t.height, true);
  }
  check_plane_bounds(p);
  if (p.empty()) return p;
  Box b = p.bounding_box();
  if (area(b) > kDirectArea) return naive_sparse(p);
  return naive_dense(p, b.x0 - 1, b.y0 - 1, b.width() + 2, b.height() + 2, false);
}

Pattern step_n(const Pattern& p, const Topology& t, std::uint64_t n) {
  if (n == 0) {
    if (t.is_torus()) require_within(p, t);
    return p;
  }
  if (t.is_torus() || area(p.bounding_box()) <= kDirectArea) {
    if (!t.is_torus()) check_plane_bounds(p);
    LifeGrid g(p, t);
    g.step(n);
    return g.pattern();
  }
  Pattern cur = p;
  for (std::uint64_t i = 0; i < n; ++i) cur = step(cur, t);
  return cur;
}

}  // namespace lifekit
