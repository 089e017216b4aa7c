#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "lifekit/error.hpp"

namespace lifekit {

using Coord = std::int64_t;

// x grows rightward, y grows downward (RLE reading order).
struct Cell {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

// Inclusive bounds.
struct Box {
  Coord x0 = 0, y0 = 0, x1 = -1, y1 = -1;

  bool empty() const { return x1 < x0 || y1 < y0; }
  Coord width() const { return empty() ? 0 : x1 - x0 + 1; }
  Coord height() const { return empty() ? 0 : y1 - y0 + 1; }
  bool contains(Cell c) const {
    return c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1;
  }
  Box united(const Box& o) const;
  friend bool operator==(const Box&, const Box&) = default;
};

Coord checked_add(Coord a, Coord b);
Coord checked_sub(Coord a, Coord b);
Coord checked_neg(Coord a);

// The eight symmetries of the square, as integer matrices acting on (x, y).
enum class Symmetry : std::uint8_t {
  identity,     // ( x,  y)
  rot90,        // (-y,  x)
  rot180,       // (-x, -y)
  rot270,       // ( y, -x)
  flip_x,       // (-x,  y)
  flip_y,       // ( x, -y)
  transpose,    // ( y,  x)
  antitranspose // (-y, -x)
};

inline constexpr std::array<Symmetry, 8> all_symmetries = {
    Symmetry::identity, Symmetry::rot90,  Symmetry::rot180,    Symmetry::rot270,
    Symmetry::flip_x,   Symmetry::flip_y, Symmetry::transpose, Symmetry::antitranspose};

std::string_view symmetry_name(Symmetry s);
std::optional<Symmetry> symmetry_from_name(std::string_view name);

struct D8Transform {
  Symmetry sym = Symmetry::identity;
  Coord dx = 0;
  Coord dy = 0;

  static D8Transform translate(Coord dx, Coord dy) { return {Symmetry::identity, dx, dy}; }

  Cell apply(Cell c) const;
  // (*this)(other(c))
  D8Transform compose(const D8Transform& other) const;
  D8Transform inverse() const;

  friend bool operator==(const D8Transform&, const D8Transform&) = default;
};

struct Topology {
  enum class Kind : std::uint8_t { plane, torus };
  Kind kind = Kind::plane;
  Coord width = 0;
  Coord height = 0;

  static Topology plane() { return {}; }
  // Throws InputError below 3x3.
  static Topology torus(Coord w, Coord h);
  bool is_torus() const { return kind == Kind::torus; }
};

// Finite set of live cells, kept sorted by (y, x) without duplicates.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<Cell> cells);
  Pattern(std::initializer_list<Cell> cells);

  // Caller guarantees sorted and unique.
  static Pattern from_sorted(std::vector<Cell> cells);

  std::span<const Cell> cells() const { return cells_; }
  std::size_t population() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(Cell c) const;
  Box bounding_box() const;

  Pattern translated(Coord dx, Coord dy) const;

  Pattern operator|(const Pattern& o) const;
  Pattern operator&(const Pattern& o) const;
  Pattern operator-(const Pattern& o) const;

  std::uint64_t hash() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) {
    return a.cells_ <=> b.cells_;
  }

 private:
  std::vector<Cell> cells_;
};

struct PatternHash {
  std::size_t operator()(const Pattern& p) const { return static_cast<std::size_t>(p.hash()); }
};

Pattern transform(const Pattern& p, const D8Transform& g);

// Translate so the bounding box's top-left is (0, 0).
Pattern normalize(const Pattern& p);

// Lexicographically least normalized image over all eight symmetries.
Pattern canonical(const Pattern& p);

// True if some symmetry plus translation maps a onto b.
bool d8_equivalent(const Pattern& a, const Pattern& b);

// Throws InputError unless every cell lies in [0,w) x [0,h).
void require_within(const Pattern& p, const Topology& t);

}  // namespace lifekit
