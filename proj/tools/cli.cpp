#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "lifekit/catalog.hpp"
#include "lifekit/catsearch.hpp"
#include "lifekit/census.hpp"
#include "lifekit/dynamics.hpp"
#include "lifekit/rle.hpp"
#include "lifekit/synthesis.hpp"

namespace lifekit {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed: " + path.string());
}

Json box_json(const Box& b) {
  if (b.empty()) return nullptr;
  return Json::array({b.x0, b.y0, b.x1, b.y1});
}

Json report_json(const DynamicsReport& r) {
  Json j;
  j["kind"] = std::string(kind_name(r.kind));
  j["period"] = r.period;
  j["dx"] = r.dx;
  j["dy"] = r.dy;
  j["generations_examined"] = r.generations_examined;
  if (r.kind == DynamicsKind::unresolved) {
    j["preperiod"] = r.preperiod ? Json(*r.preperiod) : Json(nullptr);
    j["cycle_period"] = r.cycle_period;
  } else {
    j["min_population"] = r.min_population;
    j["max_population"] = r.max_population;
    j["bounding_box"] = box_json(r.cycle_bounding_box);
  }
  return j;
}

Json volatility_json(const VolatilityStats& v) {
  Json j;
  j["rotor_cells"] = v.rotor_cell_count;
  j["stator_cells"] = v.stator_cell_count;
  j["volatility"] = v.volatility();
  j["strictly_volatile"] = v.strictly_volatile;
  j["trivial"] = v.trivial;
  return j;
}

Json ok() { return Json{{"status", "ok"}}; }

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Writes the RLE to `path` when given; otherwise embeds it in the JSON.
void emit_pattern(Json& j, const Pattern& p, const std::string& path) {
  std::string text = write_rle(p);
  if (path.empty()) {
    j["rle"] = text;
  } else {
    write_file(path, text);
    j["file"] = path;
  }
}

std::pair<Coord, Coord> parse_size(const std::string& s) {
  auto x = s.find('x');
  if (x == std::string::npos) throw InputError("size must look like WxH: " + s);
  try {
    std::size_t used = 0;
    long long w = std::stoll(s.substr(0, x), &used);
    if (used != x) throw InputError("bad size " + s);
    long long h = std::stoll(s.substr(x + 1), &used);
    if (used != s.size() - x - 1 || w <= 0 || h <= 0) throw InputError("bad size " + s);
    return {w, h};
  } catch (const std::logic_error&) {
    throw InputError("bad size " + s);
  }
}

int analyze(const std::string& file, std::uint64_t max_gens, std::ostream& out) {
  Pattern p = parse_rle(read_file(file)).pattern;
  DynamicsReport r = detect_dynamics(p, max_gens);
  Json j = ok();
  j["population"] = p.population();
  j.update(report_json(r));
  if (r.kind == DynamicsKind::oscillator) j["volatility"] = volatility_json(volatility_stats(p, r.period));
  print(out, j);
  return 0;
}

int synth(std::uint64_t period, const std::string& path, std::ostream& out) {
  SnarkLoop loop = synth_snark_loop(period);
  Json j = ok();
  j["period"] = loop.report.period;
  j["n"] = loop.spec.n;
  j["m"] = loop.spec.m;
  j["traversal_time"] = loop.spec.traversal_time();
  j["clearance"] = loop.spec.clearance;
  Json refl = Json::array();
  for (const D8Transform& t : loop.spec.reflector_placements)
    refl.push_back({{"transform", std::string(symmetry_name(t.sym))}, {"dx", t.dx}, {"dy", t.dy}});
  j["reflectors"] = refl;
  Json gl = Json::array();
  for (const GliderInsertion& g : loop.spec.glider_insertions)
    gl.push_back({{"phase", g.phase}, {"heading", Json::array({g.heading.x, g.heading.y})},
                  {"box", box_json(g.glider.bounding_box())}});
  j["gliders"] = gl;
  j["population"] = loop.pattern.population();
  emit_pattern(j, loop.pattern, path);
  print(out, j);
  return 0;
}

int resolve(std::uint64_t period, const std::string& path, std::ostream& out) {
  Resolution r = resolve_period(period);
  Json j = ok();
  j["period"] = r.report.period;
  j["provenance"] = r.provenance;
  j["name"] = r.name;
  if (!r.entry_id.empty()) j["catalog_id"] = r.entry_id;
  j["population"] = r.pattern.population();
  emit_pattern(j, r.pattern, path);
  print(out, j);
  return 0;
}

int compose(const std::string& fa, const std::string& fb, Coord gap, const std::string& path,
            std::ostream& out) {
  Pattern a = parse_rle(read_file(fa)).pattern;
  Pattern b = parse_rle(read_file(fb)).pattern;
  DynamicsReport ra = detect_dynamics(a, default_max_gens);
  DynamicsReport rb = detect_dynamics(b, default_max_gens);
  if (ra.kind != DynamicsKind::oscillator) throw InputError(fa + " is not an oscillator");
  if (rb.kind != DynamicsKind::oscillator) throw InputError(fb + " is not an oscillator");
  Composite c = compose_lcm(a, ra.period, b, rb.period, gap);
  Json j = ok();
  j["period"] = c.period;
  j["periods"] = Json::array({ra.period, rb.period});
  j["shift"] = Json::array({c.shift_x, c.shift_y});
  j["volatility"] = volatility_json(volatility_stats(c.pattern, c.period));
  emit_pattern(j, c.pattern, path);
  print(out, j);
  return 0;
}

int verify(unsigned jobs, std::ostream& out) {
  CatalogReport rep = verify_catalog(jobs);
  Json j;
  j["status"] = rep.pass() ? "ok" : "fail";
  j["checked"] = rep.entries.size();
  j["skipped"] = rep.skipped;
  Json entries = Json::array();
  for (const EntryResult& e : rep.entries) {
    Json x{{"id", e.id}, {"name", e.name}, {"period", e.period}, {"pass", e.pass},
           {"measured_period", e.report.period}};
    if (!e.message.empty()) x["message"] = e.message;
    entries.push_back(x);
  }
  j["entries"] = entries;
  print(out, j);
  return rep.pass() ? 0 : 1;
}

int census(const SoupConfig& cfg, unsigned jobs, std::ostream& out) {
  CensusTally t = run_census(cfg, jobs);
  std::vector<std::pair<std::string, std::uint64_t>> rows(t.objects.begin(), t.objects.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  Json objects = Json::object();
  for (const auto& [k, n] : rows) objects[k] = n;
  Json j = ok();
  j["objects"] = objects;
  j["soups"] = t.soups;
  j["unresolved"] = t.unresolved;
  j["config"] = {{"seed", cfg.seed},
                 {"soup_size", Json::array({cfg.soup_width, cfg.soup_height})},
                 {"torus", Json::array({cfg.torus.width, cfg.torus.height})},
                 {"density", cfg.density},
                 {"max_gens", cfg.max_gens},
                 {"prng", "xorshift64*"}};
  print(out, j);
  return 0;
}

int catsearch(const std::string& config, unsigned jobs, const std::string& out_dir, std::ostream& out) {
  SearchConfig cfg = parse_search_config(read_file(config), fs::path(config).parent_path());
  SearchResult r = search_catalysts(cfg, jobs);
  if (!out_dir.empty()) fs::create_directories(out_dir);
  Json sols = Json::array();
  for (std::size_t i = 0; i < r.solutions.size(); ++i) {
    const SearchSolution& s = r.solutions[i];
    std::ostringstream name;
    name << "solution-" << std::setw(3) << std::setfill('0') << i << ".rle";
    Json pl = Json::array();
    for (const CatalystPlacement& p : s.placements)
      pl.push_back({{"catalyst", cfg.catalysts[p.catalyst].name.empty() ? Json(p.catalyst)
                                                                         : Json(cfg.catalysts[p.catalyst].name)},
                    {"index", p.catalyst},
                    {"transform", std::string(symmetry_name(p.transform.sym))},
                    {"dx", p.transform.dx},
                    {"dy", p.transform.dy}});
    Json x{{"placements", pl}, {"period", s.report.period}, {"population", s.resulting_pattern.population()}};
    if (!out_dir.empty()) {
      std::string header = "#C catsearch solution " + std::to_string(i) + "\n";
      write_file(fs::path(out_dir) / name.str(), header + write_rle(s.resulting_pattern));
      x["file"] = name.str();
    } else {
      x["rle"] = write_rle(s.resulting_pattern);
    }
    sols.push_back(x);
  }
  Json j;
  j["status"] = r.solutions.empty() ? "none" : "ok";
  j["incomplete"] = r.incomplete;
  j["configs_examined"] = r.configs_examined;
  j["solutions"] = sols;
  if (!out_dir.empty()) write_file(fs::path(out_dir) / "index.json", j.dump(2) + "\n");
  print(out, j);
  return r.solutions.empty() ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Game of Life oscillator toolkit", "lifekit"};
  app.require_subcommand(1);

  std::string file, file_b, out_path, out_dir, config, soup_size = "16x16", torus_size = "64x64";
  std::uint64_t max_gens = default_max_gens, period = 0;
  std::uint64_t census_gens = SoupConfig{}.max_gens;
  unsigned jobs = 1;
  Coord gap = 3;
  SoupConfig soup;

  auto* a = app.add_subcommand("analyze", "classify a pattern");
  a->add_option("file", file, "RLE file")->required();
  a->add_option("--max-gens", max_gens, "generation budget")->check(CLI::PositiveNumber);

  auto* s = app.add_subcommand("synth", "Snark loop of a period >= 43");
  s->add_option("--period", period)->required();
  s->add_option("-o", out_path, "output RLE");

  auto* r = app.add_subcommand("resolve", "verified oscillator of any period");
  r->add_option("--period", period)->required();
  r->add_option("-o", out_path, "output RLE");

  auto* c = app.add_subcommand("compose", "side-by-side oscillator of the lcm period");
  c->add_option("a", file, "first RLE")->required();
  c->add_option("b", file_b, "second RLE")->required();
  c->add_option("--gap", gap, "dead columns between the parts")->check(CLI::NonNegativeNumber);
  c->add_option("-o", out_path, "output RLE");

  auto* v = app.add_subcommand("verify-catalog", "simulate every catalog entry");
  v->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* ce = app.add_subcommand("census", "torus soup census");
  ce->add_option("--soups", soup.soup_count)->required();
  ce->add_option("--seed", soup.seed)->required();
  ce->add_option("--soup-size", soup_size, "WxH")->required();
  ce->add_option("--torus", torus_size, "WxH")->required();
  ce->add_option("--density", soup.density)->check(CLI::Range(0.0, 1.0));
  ce->add_option("--max-gens", census_gens)->check(CLI::PositiveNumber);
  ce->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* cs = app.add_subcommand("catsearch", "catalyst placement search");
  cs->add_option("--config", config, "search config JSON")->required();
  cs->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  cs->add_option("--out-dir", out_dir, "directory for solution RLE files and index.json");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return 2;
  }

  try {
    if (a->parsed()) return analyze(file, max_gens, out);
    if (s->parsed()) return synth(period, out_path, out);
    if (r->parsed()) return resolve(period, out_path, out);
    if (c->parsed()) return compose(file, file_b, gap, out_path, out);
    if (v->parsed()) return verify(jobs, out);
    if (ce->parsed()) {
      auto [sw, sh] = parse_size(soup_size);
      auto [tw, th] = parse_size(torus_size);
      soup.soup_width = sw;
      soup.soup_height = sh;
      soup.torus = Topology::torus(tw, th);
      soup.max_gens = census_gens;
      return census(soup, jobs, out);
    }
    if (cs->parsed()) return catsearch(config, jobs, out_dir, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    print(out, Json{{"status", "fail"}, {"error", e.what()}});
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace lifekit
