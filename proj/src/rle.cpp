#include "lifekit/rle.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace lifekit {

namespace {

constexpr std::size_t kMaxCells = std::size_t{1} << 26;
constexpr std::size_t kLineWidth = 70;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

Coord parse_dimension(std::string_view v, const char* what) {
  v = trim(v);
  Coord n = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (ec != std::errc() || ptr != v.data() + v.size() || n < 0)
    throw InputError(std::string("bad RLE header value for ") + what);
  return n;
}

void parse_header(std::string_view line, RleDocument& doc) {
  bool seen_x = false, seen_y = false;
  while (!line.empty()) {
    std::size_t comma = line.find(',');
    std::string_view item = line.substr(0, comma);
    line = comma == std::string_view::npos ? std::string_view{} : line.substr(comma + 1);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("bad RLE header");
    std::string_view key = trim(item.substr(0, eq));
    std::string_view val = trim(item.substr(eq + 1));
    if (key == "x") {
      doc.width = parse_dimension(val, "x");
      seen_x = true;
    } else if (key == "y") {
      doc.height = parse_dimension(val, "y");
      seen_y = true;
    } else if (key == "rule") {
      if (!iequals(val, "B3/S23")) throw InputError("unsupported rule: " + std::string(val));
      doc.rule = "B3/S23";
    } else {
      throw InputError("unknown RLE header key: " + std::string(key));
    }
  }
  if (!seen_x || !seen_y) throw InputError("RLE header needs x and y");
}

}  // namespace

RleDocument parse_rle(std::string_view text) {
  RleDocument doc;
  std::size_t pos = 0;
  bool have_header = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::size_t end = eol == std::string_view::npos ? text.size() : eol;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    std::string_view t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      doc.comments.emplace_back(line);
      continue;
    }
    if (t.front() != 'x') throw InputError("missing RLE header");
    parse_header(t, doc);
    have_header = true;
    break;
  }
  if (!have_header) throw InputError("missing RLE header");

  std::vector<Cell> cells;
  Coord x = 0, y = 0;
  Coord count = 0;
  bool have_count = false;
  bool done = false;
  for (; pos < text.size() && !done; ++pos) {
    char c = text[pos];
    if (c >= '0' && c <= '9') {
      if (__builtin_mul_overflow(count, Coord{10}, &count) ||
          __builtin_add_overflow(count, Coord{c - '0'}, &count))
        throw InputError("RLE run count too large");
      have_count = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (have_count) throw InputError("whitespace inside RLE run count");
      continue;
    }
    const bool counted = have_count;
    Coord n = counted ? count : 1;
    if (counted && count == 0) throw InputError("RLE run count of 0");
    count = 0;
    have_count = false;
    switch (c) {
      case 'b':
        x = checked_add(x, n);
        break;
      case 'o':
        if (y >= doc.height) throw InputError("RLE body exceeds declared height");
        if (cells.size() + static_cast<std::size_t>(n) > kMaxCells)
          throw InputError("RLE pattern too large");
        for (Coord i = 0; i < n; ++i) cells.push_back({x + i, y});
        x = checked_add(x, n);
        if (x > doc.width) doc.width_overrun = true;
        break;
      case '$':
        y = checked_add(y, n);
        x = 0;
        break;
      case '!':
        if (counted) throw InputError("RLE run count before '!'");
        done = true;
        break;
      default:
        throw InputError(std::string("unexpected character in RLE body: ") + c);
    }
  }
  if (!done) throw InputError("RLE body missing '!'");
  doc.pattern = Pattern::from_sorted(std::move(cells));
  return doc;
}

std::string rle_body(const Pattern& p) {
  Pattern q = normalize(p);
  std::vector<std::string> tokens;
  auto run = [&](Coord n, char c) {
    tokens.push_back(n > 1 ? std::to_string(n) + c : std::string(1, c));
  };
  std::span<const Cell> cs = q.cells();
  Coord row = 0;
  for (std::size_t i = 0; i < cs.size();) {
    if (cs[i].y != row) {
      run(cs[i].y - row, '$');
      row = cs[i].y;
    }
    Coord x = 0;
    while (i < cs.size() && cs[i].y == row) {
      std::size_t j = i;
      while (j + 1 < cs.size() && cs[j + 1].y == row && cs[j + 1].x == cs[j].x + 1) ++j;
      if (cs[i].x > x) run(cs[i].x - x, 'b');
      run(static_cast<Coord>(j - i + 1), 'o');
      x = cs[j].x + 1;
      i = j + 1;
    }
  }
  tokens.emplace_back("!");

  std::string out, line;
  for (const std::string& t : tokens) {
    if (!line.empty() && line.size() + t.size() > kLineWidth) {
      out += line;
      out += '\n';
      line.clear();
    }
    line += t;
  }
  out += line;
  return out;
}

std::string write_rle(const Pattern& p) {
  Box b = p.bounding_box();
  std::string out = "x = " + std::to_string(b.width()) + ", y = " + std::to_string(b.height()) +
                    ", rule = B3/S23\n";
  out += rle_body(p);
  out += '\n';
  return out;
}

}  // namespace lifekit
