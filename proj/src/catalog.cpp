#include "lifekit/catalog.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "lifekit/parallel.hpp"
#include "lifekit/rle.hpp"

namespace lifekit {

namespace detail {
extern const std::pair<std::string_view, std::string_view> catalog_files[];
extern const unsigned catalog_file_count;
}  // namespace detail

namespace {

std::string get_string(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_string()) throw InputError(std::string("manifest field is not a string: ") + key);
  return it->get<std::string>();
}

}  // namespace

Pattern CatalogEntry::pattern() const {
  if (rle.empty()) throw InputError("catalog entry has no pattern: " + id);
  return parse_rle(rle).pattern;
}

std::vector<CatalogEntry> load_catalog(const std::string& manifest_json,
                                       const std::vector<std::pair<std::string, std::string>>& files) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(manifest_json);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad catalog manifest: ") + e.what());
  }
  if (doc.value("schema", 0) != 1 || !doc.contains("entries") || !doc["entries"].is_array())
    throw InputError("unsupported catalog manifest");

  std::map<std::string, std::string> by_name(files.begin(), files.end());
  std::vector<CatalogEntry> out;
  for (const auto& j : doc["entries"]) {
    CatalogEntry e;
    e.id = get_string(j, "id");
    if (!j.contains("period") || !j["period"].is_number_unsigned() || j["period"].get<std::uint64_t>() == 0)
      throw InputError("catalog entry needs a positive period: " + e.id);
    e.period = j["period"].get<std::uint64_t>();
    e.name = get_string(j, "name");
    e.discoverer = get_string(j, "discoverer");
    e.year = get_string(j, "year");
    e.file = get_string(j, "file");
    e.kind = get_string(j, "kind");
    e.verify = j.value("verify", false);
    e.source = get_string(j, "source");
    e.family = get_string(j, "family");
    e.note = get_string(j, "note");
    if (!e.file.empty()) {
      auto it = by_name.find(e.file);
      if (it == by_name.end()) throw InputError("catalog file missing: " + e.file);
      e.rle = it->second;
    }
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::string manifest;
    std::vector<std::pair<std::string, std::string>> files;
    for (unsigned i = 0; i < detail::catalog_file_count; ++i) {
      const auto& [name, text] = detail::catalog_files[i];
      if (name == "manifest.json")
        manifest = std::string(text);
      else
        files.emplace_back(std::string(name), std::string(text));
    }
    return load_catalog(manifest, files);
  }();
  return entries;
}

std::vector<CatalogEntry> catalog_lookup(std::uint64_t period) {
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : catalog())
    if (e.period == period) out.push_back(e);
  return out;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const CatalogEntry& e : catalog())
    if (e.id == id) return e;
  throw InputError("no catalog entry " + id);
}

bool CatalogReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const EntryResult& r) { return r.pass; });
}

CatalogReport verify_catalog(const std::vector<CatalogEntry>& entries, unsigned jobs) {
  std::vector<const CatalogEntry*> todo;
  CatalogReport report;
  for (const CatalogEntry& e : entries) {
    if (e.verify)
      todo.push_back(&e);
    else
      ++report.skipped;
  }
  std::stable_sort(todo.begin(), todo.end(), [](const CatalogEntry* a, const CatalogEntry* b) {
    return a->period != b->period ? a->period < b->period : a->name < b->name;
  });

  report.entries.resize(todo.size());
  parallel_for(todo.size(), jobs, [&](std::size_t i) {
    const CatalogEntry& e = *todo[i];
    EntryResult& r = report.entries[i];
    r.id = e.id;
    r.name = e.name;
    r.period = e.period;
    try {
      Pattern p = e.pattern();
      r.report = detect_dynamics(p, std::max<std::uint64_t>(default_max_gens, 2 * e.period));
      if (r.report.kind != DynamicsKind::oscillator)
        r.message = "expected oscillator, got " + std::string(kind_name(r.report.kind));
      else if (r.report.period != e.period)
        r.message = "expected period " + std::to_string(e.period) + ", got " +
                    std::to_string(r.report.period);
      else
        r.pass = true;
    } catch (const Error& ex) {
      r.message = ex.what();
    }
  });
  return report;
}

CatalogReport verify_catalog(unsigned jobs) { return verify_catalog(catalog(), jobs); }

}  // namespace lifekit
