#include <random>

#include "doctest.h"
#include "lifekit/rle.hpp"

using namespace lifekit;

TEST_CASE("parse small patterns") {
  RleDocument d = parse_rle("x = 2, y = 2, rule = B3/S23\n2o$2o!");
  CHECK(d.pattern == Pattern{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(d.width == 2);
  CHECK(d.height == 2);
  CHECK(d.rule == "B3/S23");
  CHECK_FALSE(d.width_overrun);

  CHECK(parse_rle("x = 3, y = 1, rule = B3/S23\n3o!").pattern == Pattern{{0, 0}, {1, 0}, {2, 0}});
  CHECK(parse_rle("x = 3, y = 3\nbo$2bo$3o!").pattern ==
        Pattern{{1, 0}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
  CHECK(parse_rle("x = 0, y = 0, rule = B3/S23\n!").pattern.empty());
}

TEST_CASE("parse grammar details") {
  RleDocument d = parse_rle("#N glider\n#C two\nx=3,y=3,rule=b3/s23\nb\no$2b\no$3o!trailing junk");
  CHECK(d.comments == std::vector<std::string>{"#N glider", "#C two"});
  CHECK(d.pattern.population() == 5);
  CHECK(parse_rle("x = 5 , y = 3\r\n2o2$o!\r\n").pattern == Pattern{{0, 0}, {1, 0}, {0, 2}});
  CHECK(parse_rle("x = 4, y = 1\n4b!").pattern.empty());
  CHECK(parse_rle("x = 3, y = 2\no$$!").pattern == Pattern{{0, 0}});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_rle("2o$2o!"), InputError);
  CHECK_THROWS_AS(parse_rle(""), InputError);
  CHECK_THROWS_AS(parse_rle("#C only\n"), InputError);
  CHECK_THROWS_AS(parse_rle("x = 2, y = 2\n2o$2o"), InputError);
  CHECK_THROWS_AS(parse_rle("x = 2, y = 2, rule = B36/S23\n2o$2o!"), InputError);
  CHECK_THROWS_AS(parse_rle("x = 2, y = 2\n0o!"), InputError);
  CHECK_THROWS_AS(parse_rle("x = 2, y = 1\n2o$2o!"), InputError);
  CHECK_THROWS_AS(parse_rle("x = 2, y = 2\n2x!"), InputError);
  CHECK_THROWS_AS(parse_rle("x = -2, y = 2\n2o!"), InputError);
  CHECK_THROWS_AS(parse_rle("x = 2\n2o!"), InputError);
  CHECK_THROWS_AS(parse_rle("x = 2, y = 2, z = 1\n2o!"), InputError);
}

TEST_CASE("width overrun is a warning") {
  RleDocument d = parse_rle("x = 2, y = 1\n5o!");
  CHECK(d.width_overrun);
  CHECK(d.pattern.population() == 5);
}

TEST_CASE("write") {
  Pattern block{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  CHECK(write_rle(block) == "x = 2, y = 2, rule = B3/S23\n2o$2o!\n");
  CHECK(write_rle(block.translated(-7, 40)) == write_rle(block));
  CHECK(write_rle(Pattern{}) == "x = 0, y = 0, rule = B3/S23\n!\n");
  CHECK(write_rle(Pattern{{0, 0}, {3, 0}, {0, 4}}) == "x = 4, y = 5, rule = B3/S23\no2bo4$o!\n");
  CHECK(write_rle(Pattern{{1, 0}, {2, 1}, {0, 2}, {1, 2}, {2, 2}}) ==
        "x = 3, y = 3, rule = B3/S23\nbo$2bo$3o!\n");
}

TEST_CASE("write wraps long lines") {
  std::vector<Cell> cells;
  for (Coord x = 0; x < 400; x += 2) cells.push_back({x, 0});
  std::string text = write_rle(Pattern(cells));
  std::size_t start = text.find('\n') + 1;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    CHECK(end - start <= 70);
    start = end + 1;
  }
  CHECK(parse_rle(text).pattern == Pattern(cells));
}

TEST_CASE("round trip on random patterns") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Coord> coord(-40, 40);
  for (int i = 0; i < 200; ++i) {
    std::vector<Cell> cells;
    int n = static_cast<int>(rng() % 300);
    for (int k = 0; k < n; ++k) cells.push_back({coord(rng), coord(rng) / 3});
    Pattern p(cells);
    std::string text = write_rle(p);
    RleDocument d = parse_rle(text);
    CHECK(d.pattern == normalize(p));
    CHECK_FALSE(d.width_overrun);
    CHECK(write_rle(d.pattern) == text);
  }
}
