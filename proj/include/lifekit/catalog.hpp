#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lifekit/dynamics.hpp"
#include "lifekit/pattern.hpp"

namespace lifekit {

struct CatalogEntry {
  std::string id;
  std::uint64_t period = 0;
  std::string name;
  std::string discoverer;
  std::string year;    // may carry a "≤" qualifier
  std::string file;    // empty for manifest-only rows
  std::string rle;     // file contents, empty for manifest-only rows
  std::string kind;    // "oscillator", "still-life" or "active-region"
  bool verify = false; // simulated by verify_catalog
  std::string source;
  std::string family;  // parametric period family, e.g. "50+40n"
  std::string note;

  bool has_pattern() const { return !rle.empty(); }
  // Parses `rle`. Throws InputError for manifest-only rows.
  Pattern pattern() const;
};

// Embedded entries in manifest order.
const std::vector<CatalogEntry>& catalog();

// Entries with exactly this period, in manifest order.
std::vector<CatalogEntry> catalog_lookup(std::uint64_t period);

// Throws InputError if no entry has this id.
const CatalogEntry& catalog_entry(const std::string& id);

// Parses a manifest document plus a file-name -> text lookup.
std::vector<CatalogEntry> load_catalog(const std::string& manifest_json,
                                       const std::vector<std::pair<std::string, std::string>>& files);

struct EntryResult {
  std::string id;
  std::string name;
  std::uint64_t period = 0;
  bool pass = false;
  DynamicsReport report;
  std::string message;  // set on failure
};

struct CatalogReport {
  std::vector<EntryResult> entries;  // sorted by period, then name
  std::size_t skipped = 0;           // entries not marked for verification
  bool pass() const;
};

CatalogReport verify_catalog(const std::vector<CatalogEntry>& entries, unsigned jobs = 1);
CatalogReport verify_catalog(unsigned jobs = 1);

}  // namespace lifekit
