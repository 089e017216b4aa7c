#include <set>

#include "doctest.h"
#include "lifekit/catalog.hpp"
#include "lifekit/rle.hpp"

using namespace lifekit;

TEST_CASE("lookup") {
  auto p19 = catalog_lookup(19);
  REQUIRE(p19.size() == 1);
  CHECK(p19[0].name == "cribbage");
  CHECK(p19[0].discoverer == "Mitchell Riley");
  CHECK(p19[0].year == "2023");

  auto p2 = catalog_lookup(2);
  std::set<std::string> names;
  for (const auto& e : p2) names.insert(e.name);
  CHECK(names.count("blinker"));
  CHECK(names.count("phoenix"));
  for (const auto& e : p2)
    if (e.name == "blinker") {
      CHECK(e.discoverer == "John H. Conway");
      CHECK(e.year == "1969");
    }

  CHECK(catalog_lookup(99).empty());
  CHECK(catalog_lookup(0).empty());

  auto p41 = catalog_lookup(41);
  REQUIRE(p41.size() == 1);
  CHECK(p41[0].name == "204P41");
  CHECK(p41[0].discoverer == "Nico Brown");
  CHECK(p41[0].year == "2023");

  auto p43 = catalog_lookup(43);
  bool loop = false;
  for (const auto& e : p43) loop = loop || (e.name == "Snark loop" && e.discoverer == "Mike Playle" && e.year == "2013");
  CHECK(loop);
}

TEST_CASE("every period 1..42 has an embedded pattern") {
  for (std::uint64_t p = 1; p <= 42; ++p) {
    bool found = false;
    for (const auto& e : catalog_lookup(p)) found = found || (e.has_pattern() && e.verify);
    CHECK_MESSAGE(found, p);
  }
}

TEST_CASE("manifest-only rows carry no pattern and are not verified") {
  std::size_t manifest_only = 0;
  for (const auto& e : catalog()) {
    if (!e.has_pattern()) {
      ++manifest_only;
      CHECK_FALSE(e.verify);
      CHECK_THROWS_AS(e.pattern(), InputError);
    }
  }
  CHECK(manifest_only > 0);
  CHECK(catalog_entry("m-50plus40n").family == "50+40n");
}

TEST_CASE("all embedded RLE text parses") {
  for (const auto& e : catalog()) {
    if (!e.has_pattern()) continue;
    RleDocument d = parse_rle(e.rle);
    CHECK_FALSE(d.pattern.empty());
    CHECK(d.comments.size() >= 1);
  }
  // headers understating the width are tolerated
  CHECK(parse_rle(catalog_entry("p30-queen-bee-shuttle").rle).width_overrun);
}

TEST_CASE("verify_catalog passes and is parallelism invariant") {
  CatalogReport serial = verify_catalog(1);
  CHECK(serial.pass());
  for (const auto& r : serial.entries) CHECK_MESSAGE(r.pass, r.id << ": " << r.message);
  CatalogReport parallel = verify_catalog(8);
  REQUIRE(parallel.entries.size() == serial.entries.size());
  for (std::size_t i = 0; i < serial.entries.size(); ++i) {
    CHECK(parallel.entries[i].id == serial.entries[i].id);
    CHECK(parallel.entries[i].report == serial.entries[i].report);
  }
  for (std::size_t i = 1; i < serial.entries.size(); ++i) {
    const auto& a = serial.entries[i - 1];
    const auto& b = serial.entries[i];
    CHECK((a.period < b.period || (a.period == b.period && a.name <= b.name)));
  }
  for (const auto& r : serial.entries)
    if (r.id == "p03-pulsar") CHECK(r.report.period == 3);
}

TEST_CASE("a corrupted entry fails alone") {
  std::vector<CatalogEntry> entries = catalog();
  std::string victim;
  for (auto& e : entries) {
    if (e.id == "p03-pulsar") {
      // flip one run character from alive to dead
      auto pos = e.rle.rfind('o');
      REQUIRE(pos != std::string::npos);
      e.rle[pos] = 'b';
      victim = e.id;
    }
  }
  REQUIRE(!victim.empty());
  CatalogReport r = verify_catalog(entries, 4);
  CHECK_FALSE(r.pass());
  for (const auto& e : r.entries) CHECK(e.pass == (e.id != victim));

  for (auto& e : entries)
    if (e.id == "p01-block") e.rle = "x = 2, y = 2\n2o$2o";  // no terminator
  r = verify_catalog(entries, 2);
  for (const auto& e : r.entries)
    if (e.id == "p01-block") {
      CHECK_FALSE(e.pass);
      CHECK(e.message.find('!') != std::string::npos);
    }
}

TEST_CASE("round trip over the catalog") {
  for (const auto& e : catalog()) {
    if (!e.has_pattern()) continue;
    Pattern p = e.pattern();
    std::string text = write_rle(p);
    RleDocument d = parse_rle(text);
    CHECK(d.pattern == normalize(p));
    CHECK(write_rle(d.pattern) == text);
  }
}

TEST_CASE("load_catalog validation") {
  CHECK_THROWS_AS(load_catalog("not json", {}), InputError);
  CHECK_THROWS_AS(load_catalog(R"({"schema":2,"entries":[]})", {}), InputError);
  CHECK_THROWS_AS(load_catalog(R"({"schema":1,"entries":[{"id":"a","period":0}]})", {}), InputError);
  CHECK_THROWS_AS(load_catalog(R"({"schema":1,"entries":[{"id":"a","period":1,"file":"a.rle"}]})", {}),
                  InputError);
  auto e = load_catalog(R"({"schema":1,"entries":[{"id":"a","period":1,"file":"a.rle","verify":true}]})",
                        {{"a.rle", "x = 2, y = 2\n2o$2o!"}});
  REQUIRE(e.size() == 1);
  CHECK(verify_catalog(e).pass());
}
