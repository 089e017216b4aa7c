#include "lifekit/pattern.hpp"

#include <algorithm>
#include <limits>

namespace lifekit {

namespace {

struct Matrix {
  int a, b, c, d;  // x' = a x + b y, y' = c x + d y
};

constexpr std::array<Matrix, 8> kMatrices = {{
    {1, 0, 0, 1},
    {0, -1, 1, 0},
    {-1, 0, 0, -1},
    {0, 1, -1, 0},
    {-1, 0, 0, 1},
    {1, 0, 0, -1},
    {0, 1, 1, 0},
    {0, -1, -1, 0},
}};

constexpr std::array<std::string_view, 8> kNames = {
    "identity", "rot90", "rot180", "rot270", "flip_x", "flip_y", "transpose", "antitranspose"};

const Matrix& matrix_of(Symmetry s) { return kMatrices[static_cast<int>(s)]; }

Symmetry symmetry_of(const Matrix& m) {
  for (int i = 0; i < 8; ++i) {
    const Matrix& k = kMatrices[i];
    if (k.a == m.a && k.b == m.b && k.c == m.c && k.d == m.d) return static_cast<Symmetry>(i);
  }
  throw Error("not a D8 matrix");
}

// Every coefficient is -1, 0 or 1 and exactly one per row is nonzero.
Coord term(int k, Coord v) {
  if (k == 0) return 0;
  return k > 0 ? v : checked_neg(v);
}

Coord apply_row(int k1, Coord x, int k2, Coord y) {
  return k1 != 0 ? term(k1, x) : term(k2, y);
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Coord checked_add(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coordinate overflow");
  return r;
}

Coord checked_sub(Coord a, Coord b) {
  Coord r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("coordinate overflow");
  return r;
}

Coord checked_neg(Coord a) {
  if (a == std::numeric_limits<Coord>::min()) throw OverflowError("coordinate overflow");
  return -a;
}

Box Box::united(const Box& o) const {
  if (empty()) return o;
  if (o.empty()) return *this;
  return {std::min(x0, o.x0), std::min(y0, o.y0), std::max(x1, o.x1), std::max(y1, o.y1)};
}

std::string_view symmetry_name(Symmetry s) { return kNames[static_cast<int>(s)]; }

std::optional<Symmetry> symmetry_from_name(std::string_view name) {
  for (int i = 0; i < 8; ++i)
    if (kNames[i] == name) return static_cast<Symmetry>(i);
  return std::nullopt;
}

Cell D8Transform::apply(Cell c) const {
  const Matrix& m = matrix_of(sym);
  return {checked_add(apply_row(m.a, c.x, m.b, c.y), dx),
          checked_add(apply_row(m.c, c.x, m.d, c.y), dy)};
}

D8Transform D8Transform::compose(const D8Transform& o) const {
  const Matrix& p = matrix_of(sym);
  const Matrix& q = matrix_of(o.sym);
  Matrix r{p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c,
           p.c * q.b + p.d * q.d};
  Cell t = apply({o.dx, o.dy});
  return {symmetry_of(r), t.x, t.y};
}

D8Transform D8Transform::inverse() const {
  const Matrix& m = matrix_of(sym);
  Matrix inv{m.a, m.c, m.b, m.d};  // orthogonal: inverse is the transpose
  D8Transform r{symmetry_of(inv), 0, 0};
  Cell t = r.apply({dx, dy});
  r.dx = checked_neg(t.x);
  r.dy = checked_neg(t.y);
  return r;
}

Topology Topology::torus(Coord w, Coord h) {
  if (w < 3 || h < 3) throw InputError("torus must be at least 3x3");
  return {Kind::torus, w, h};
}

Pattern::Pattern(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Pattern::Pattern(std::initializer_list<Cell> cells) : Pattern(std::vector<Cell>(cells)) {}

Pattern Pattern::from_sorted(std::vector<Cell> cells) {
  Pattern p;
  p.cells_ = std::move(cells);
  return p;
}

bool Pattern::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

Box Pattern::bounding_box() const {
  if (cells_.empty()) return {};
  Box b{cells_.front().x, cells_.front().y, cells_.front().x, cells_.back().y};
  for (const Cell& c : cells_) {
    b.x0 = std::min(b.x0, c.x);
    b.x1 = std::max(b.x1, c.x);
  }
  return b;
}

Pattern Pattern::translated(Coord dx, Coord dy) const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (const Cell& c : cells_) out.push_back({checked_add(c.x, dx), checked_add(c.y, dy)});
  return from_sorted(std::move(out));
}

Pattern Pattern::operator|(const Pattern& o) const {
  std::vector<Cell> out;
  out.reserve(cells_.size() + o.cells_.size());
  std::set_union(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(),
                 std::back_inserter(out));
  return from_sorted(std::move(out));
}

Pattern Pattern::operator&(const Pattern& o) const {
  std::vector<Cell> out;
  std::set_intersection(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(),
                        std::back_inserter(out));
  return from_sorted(std::move(out));
}

Pattern Pattern::operator-(const Pattern& o) const {
  std::vector<Cell> out;
  std::set_difference(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(),
                      std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::uint64_t Pattern::hash() const {
  std::uint64_t h = mix64(cells_.size());
  for (const Cell& c : cells_) {
    h = mix64(h ^ static_cast<std::uint64_t>(c.x));
    h = mix64(h ^ static_cast<std::uint64_t>(c.y) * 0x9E3779B97F4A7C15ULL);
  }
  return h;
}

Pattern transform(const Pattern& p, const D8Transform& g) {
  if (g.sym == Symmetry::identity) return p.translated(g.dx, g.dy);
  std::vector<Cell> out;
  out.reserve(p.population());
  for (const Cell& c : p.cells()) out.push_back(g.apply(c));
  return Pattern(std::move(out));
}

Pattern normalize(const Pattern& p) {
  if (p.empty()) return p;
  Box b = p.bounding_box();
  if (b.x0 == 0 && b.y0 == 0) return p;
  std::vector<Cell> out;
  out.reserve(p.population());
  for (const Cell& c : p.cells()) out.push_back({checked_sub(c.x, b.x0), checked_sub(c.y, b.y0)});
  return Pattern::from_sorted(std::move(out));
}

Pattern canonical(const Pattern& p) {
  const Pattern base = normalize(p);
  Pattern best = base;
  for (Symmetry s : all_symmetries) {
    if (s == Symmetry::identity) continue;
    Pattern q = normalize(transform(base, {s, 0, 0}));
    if (q < best) best = std::move(q);
  }
  return best;
}

bool d8_equivalent(const Pattern& a, const Pattern& b) {
  if (a.population() != b.population()) return false;
  return canonical(a) == canonical(b);
}

void require_within(const Pattern& p, const Topology& t) {
  if (!t.is_torus()) return;
  for (const Cell& c : p.cells())
    if (c.x < 0 || c.y < 0 || c.x >= t.width || c.y >= t.height)
      throw InputError("pattern cell outside torus bounds");
}

}  // namespace lifekit
