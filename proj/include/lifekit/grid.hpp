#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lifekit/pattern.hpp"

namespace lifekit {

// Bit-packed mutable universe, 64 cells per word along x.
// On the plane the window follows the pattern, keeping a dead margin so
// no birth is lost; on a torus the window is the torus.
class LifeGrid {
 public:
  LifeGrid(const Pattern& p, const Topology& t);

  void step();
  void step(std::uint64_t n);

  bool get(Coord x, Coord y) const;
  Pattern pattern() const;
  std::size_t population() const;
  bool empty() const;
  // Bounding box of live cells, in pattern coordinates.
  Box live_box() const;
  std::uint64_t generation() const { return gen_; }
  const Topology& topology() const { return topo_; }

  // Torus only: raw row-major words and their hash.
  std::span<const std::uint64_t> words() const { return cur_; }
  std::uint64_t digest() const;

  // Largest window area allowed before the plane grid refuses a pattern.
  static constexpr std::uint64_t max_cells = std::uint64_t{1} << 28;

 private:
  void reframe(const Box& live);
  bool touches_border() const;
  void set(Coord x, Coord y);

  Topology topo_;
  Coord ox_ = 0, oy_ = 0;  // pattern coordinates of window cell (0, 0)
  Coord w_ = 0, h_ = 0;
  std::size_t nw_ = 0;  // words per row
  std::uint64_t last_mask_ = 0;
  std::vector<std::uint64_t> cur_, nxt_;
  std::uint64_t gen_ = 0;
};

}  // namespace lifekit
