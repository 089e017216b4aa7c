#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lifekit/pattern.hpp"

namespace lifekit {

struct RleDocument {
  std::vector<std::string> comments;  // full lines, leading '#' kept
  Coord width = 0;
  Coord height = 0;
  std::string rule = "B3/S23";
  Pattern pattern;  // anchored at (0, 0)
  bool width_overrun = false;  // a live cell at x >= width
};

// Throws InputError on malformed text.
RleDocument parse_rle(std::string_view text);

// Canonical text: origin-normalized, maximal runs, lines <= 70 chars,
// terminated by "!\n".
std::string write_rle(const Pattern& p);

// Body only (no header, no trailing newline), used as an object key.
std::string rle_body(const Pattern& p);

}  // namespace lifekit
