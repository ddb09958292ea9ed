// circpers: bar codes and Jordan cells of circle-valued maps.

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "circpers/fixtures.hpp"
#include "circpers/io.hpp"
#include "circpers/pipeline.hpp"

using namespace circpers;

namespace {

enum Exit { kOk = 0, kInput = 1, kCheck = 2, kInternal = 3 };

void parse_dims(const std::string& text, RunConfig& cfg) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      cfg.lo = cfg.hi = std::stoi(text);
    } else {
      cfg.lo = std::stoi(text.substr(0, dots));
      cfg.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw InputError("bad --dims '" + text + "' (expected A..B or A)");
  }
  if (cfg.lo < 0 || cfg.hi < cfg.lo) throw InputError("bad --dims '" + text + "'");
}

void parse_checks(const std::string& text, RunConfig& cfg) {
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item == "covering") cfg.check_covering = true;
    else if (item == "sublevel") cfg.check_sublevel = true;
    else if (item == "eqf") cfg.check_eqf = true;
    else if (item == "all") cfg.check_covering = cfg.check_sublevel = cfg.check_eqf = true;
    else if (!item.empty()) throw InputError("unknown check '" + item + "'");
  }
}

MapFixture named_fixture(const std::string& name) {
  if (name == "torus") return mapping_torus_fixture(Monodromy::kIdentity);
  if (name == "klein") return mapping_torus_fixture(Monodromy::kReflection);
  if (name == "shear") return mapping_torus_fixture(Monodromy::kShear);
  if (name.rfind("degree", 0) == 0) {
    int d = 3;
    if (name.size() > 6) d = std::stoi(name.substr(6));
    return mapping_torus_fixture(Monodromy::kDegree, d);
  }
  if (name == "winding_triangle") return winding_triangle();
  if (name == "two_winding_triangles") return two_winding_triangles();
  if (name == "sphere_over_arc") return sphere_over_arc();
  if (name.rfind("random", 0) == 0 && name.size() > 6) return random_map_fixture(std::stoull(name.substr(6)));
  throw InputError("unknown fixture '" + name + "'");
}

int export_fixture(const std::string& name, const std::string& dir, const std::string& field) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  if (name == "figure2") {
    auto reps = figure2_representations(Field::parse(field.empty() ? "q" : field));
    write_text_file((base / "figure2.rep").string(), representation_text(reps));
    std::cout << (base / "figure2.rep").string() << '\n';
    return kOk;
  }
  MapFixture f = named_fixture(name);
  auto complex_path = base / (f.name + ".complex");
  auto map_path = base / (f.name + ".map");
  write_text_file(complex_path.string(), complex_text(f.map.complex()));
  write_text_file(map_path.string(), map_text(f.map));
  std::cout << complex_path.string() << '\n' << map_path.string() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistence invariants of circle-valued maps"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string dims, checks;
  auto* compute = app.add_subcommand("compute", "Compute bar codes and Jordan cells");
  compute->add_option("--complex", cfg.complex_path, "Complex file (one maximal simplex per line)");
  compute->add_option("--map", cfg.map_path, "Map file (v vertex p/q, e u v p/q)");
  compute->add_option("--cocycle", cfg.cocycle_path, "Cocycle file (u v p/q)");
  compute->add_option("--rep", cfg.rep_path, "Representation file");
  compute->add_option("--field", cfg.field, "q or zp:P (default q)");
  compute->add_option("--dims", dims, "Dimension range A..B (default 0..dim)");
  compute->add_option("--check", checks, "Comma list of covering, sublevel, eqf");
  compute->add_option("--json", cfg.json_path, "Write the JSON report here ('-' for stdout)");
  compute->add_option("--svg", cfg.svg_path, "Write the SVG drawing here");
  compute->add_flag("-v,--verbose", cfg.verbosity, "More output on stderr");

  std::string fixture_name, out_dir = ".", fixture_field;
  auto* fixture = app.add_subcommand("fixture", "Export a built-in fixture in the file formats");
  fixture->add_option("name", fixture_name,
                      "torus, klein, shear, degreeD, winding_triangle, two_winding_triangles, sphere_over_arc, randomSEED, figure2")
      ->required();
  fixture->add_option("--out-dir", out_dir, "Output directory");
  fixture->add_option("--field", fixture_field, "Field for figure2 (default q)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }

  try {
    if (fixture->parsed()) return export_fixture(fixture_name, out_dir, fixture_field);
    if (!dims.empty()) parse_dims(dims, cfg);
    parse_checks(checks, cfg);
    const bool to_stdout = cfg.json_path == "-";
    if (to_stdout) cfg.json_path.clear();
    InvariantsReport report = run_pipeline(cfg, std::cerr);
    if (to_stdout) std::cout << report_json(report);
    if (cfg.json_path.empty() && !to_stdout) {
      for (const auto& [r, dec] : report.dims) {
        std::cout << "H" << r << ":";
        for (const auto& b : dec.bars) std::cout << ' ' << b.to_string();
        for (const auto& c : dec.jordan) std::cout << " (" << c.factor.to_string() << "," << c.size << ")";
        std::cout << '\n';
      }
    }
    return report.checks_pass() ? kOk : kCheck;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number in arguments\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
