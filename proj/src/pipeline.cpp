#include "circpers/pipeline.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "circpers/cocycle.hpp"
#include "circpers/fixtures.hpp"
#include "circpers/io.hpp"
#include "circpers/sublevel.hpp"

namespace circpers {

namespace {

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + x.to_string();
  return out.empty() ? "-" : out;
}

}  // namespace

MapAnalysis analyze(const PLCircleMap& map) {
  MapAnalysis a;
  a.map = map;
  a.crit = critical_structure(map);
  a.cut = cut_at_levels(map, a.crit.t);
  return a;
}

InvariantsReport compute_invariants(const MapAnalysis& a, Field field, int lo, int hi, const DecomposeOptions& opt) {
  InvariantsReport report;
  report.field = field;
  report.critical = a.crit.s;
  for (int r = lo; r <= hi; ++r) {
    CyclicQuiverRep rep = build_representation(a.cut, a.crit, r, field);
    report.dims.emplace(r, decompose(rep, opt));
    report.reps.emplace(r, std::move(rep));
  }
  return report;
}

InvariantsReport compute_invariants(const PLCircleMap& map, Field field, int lo, int hi) {
  return compute_invariants(analyze(map), field, lo, hi);
}

InvariantsReport compute_invariants(const std::map<int, CyclicQuiverRep>& reps) {
  if (reps.empty()) throw InputError("no representations");
  InvariantsReport report;
  report.field = reps.begin()->second.field;
  const std::size_t m = reps.begin()->second.m;
  for (const auto& [r, rep] : reps) {
    if (rep.m != m) throw InputError("representations disagree on m");
    if (!(rep.field == report.field)) throw InputError("representations disagree on the field");
    rep.validate();
    report.dims.emplace(r, decompose(rep));
    report.reps.emplace(r, rep);
  }
  for (std::size_t i = 1; i <= m; ++i) {
    Scalar s(static_cast<long>(i), static_cast<long>(m));
    s.canonicalize();
    report.critical.push_back(s);
  }
  return report;
}

CoveringRun run_covering(const MapAnalysis& a, int r, Field field) {
  CoveringRun run;
  run.r = r;
  const Scalar& theta = a.crit.t[0];
  run.estimate = estimate_truncation(a.map, a.cut, theta, r, field);
  TruncatedCovering cov(a.cut, a.crit, run.estimate.k);
  run.linear_bars = decompose_linear(covering_representation(cov, r, field));
  run.circle_bars = extract_circle_bars(run.linear_bars, a.crit.m(), run.estimate.k);
  std::sort(run.circle_bars.begin(), run.circle_bars.end());
  return run;
}

CheckResult covering_check(const MapAnalysis& a, const InvariantsReport& report) {
  CheckResult res{"covering", true, ""};
  std::ostringstream detail;
  for (const auto& [r, dec] : report.dims) {
    CoveringRun run = run_covering(a, r, report.field);
    std::vector<CircleBarCode> expected = dec.bars;
    std::sort(expected.begin(), expected.end());
    bool ok = run.estimate.consistent() && run.circle_bars == expected;
    detail << "r=" << r << " k=" << run.estimate.k << (ok ? " ok" : " MISMATCH");
    if (!run.estimate.consistent())
      detail << " (fiber rank " << run.estimate.level_z2 << " vs minor " << *run.estimate.minor_z2 << ")";
    if (run.circle_bars != expected) detail << " quiver: " << join(expected) << " covering: " << join(run.circle_bars);
    detail << "; ";
    res.pass = res.pass && ok;
  }
  res.detail = detail.str();
  return res;
}

CheckResult sublevel_check(const MapAnalysis& a, const InvariantsReport& report) {
  CheckResult res{"sublevel", true, ""};
  std::ostringstream detail;
  const std::size_t m = a.crit.m();
  for (const auto& [r, dec] : report.dims) {
    TruncationEstimate est = estimate_truncation(a.map, a.cut, a.crit.t[0], r, report.field);
    TruncatedCovering cov(a.cut, a.crit, est.k);
    std::vector<LinearBar> direct = bars_in_rows(decompose_linear(covering_representation(cov, r, report.field)), m + 1, 2 * m);
    std::vector<LinearBar> counted = level_bar_counts(covering_tables(cov, r, report.field, m + 1, 2 * m)).bars();
    std::sort(direct.begin(), direct.end());
    std::sort(counted.begin(), counted.end());
    bool ok = direct == counted;
    detail << "r=" << r << (ok ? " ok" : " MISMATCH");
    if (!ok) detail << " decomposition: " << join(direct) << " counts: " << join(counted);
    detail << "; ";
    res.pass = res.pass && ok;
  }
  res.detail = detail.str();
  return res;
}

CheckResult eqf_check(const MapAnalysis& a, const InvariantsReport& report) {
  CheckResult res{"eqf", true, ""};
  std::map<int, CyclicQuiverRep> reps = report.reps;
  std::map<int, std::size_t> direct;
  for (const auto& [r, dec] : report.dims) {
    if (r > 0 && !reps.count(r - 1)) reps.emplace(r - 1, build_representation(a.cut, a.crit, r - 1, report.field));
    direct.emplace(r, brute_force_homology(a.map.complex(), r, report.field));
  }
  std::ostringstream detail;
  for (const auto& row : verify_eqf(reps, direct)) {
    detail << "r=" << row.r << " H=" << row.direct << " dck=" << row.coker << " dk=" << row.ker_below
           << (row.pass() ? " ok" : " MISMATCH") << "; ";
    res.pass = res.pass && row.pass();
  }
  res.detail = detail.str();
  return res;
}

InvariantsReport run_pipeline(const RunConfig& cfg, std::ostream& log) {
  const bool any_check = cfg.check_covering || cfg.check_sublevel || cfg.check_eqf;
  InvariantsReport report;
  if (!cfg.rep_path.empty()) {
    if (!cfg.complex_path.empty() || !cfg.map_path.empty() || !cfg.cocycle_path.empty())
      throw InputError("--rep cannot be combined with --complex, --map or --cocycle");
    if (any_check) throw InputError("checks need a complex; they are not available for --rep input");
    auto reps = parse_representations(read_text_file(cfg.rep_path), cfg.rep_path);
    std::map<int, CyclicQuiverRep> chosen;
    for (auto& [r, rep] : reps)
      if (r >= cfg.lo && (cfg.hi < 0 || r <= cfg.hi)) chosen.emplace(r, std::move(rep));
    if (chosen.empty()) throw InputError("no representation in the requested dimensions");
    report = compute_invariants(chosen);
    if (!cfg.field.empty() && !(Field::parse(cfg.field) == report.field))
      throw InputError("--field " + cfg.field + " disagrees with the representation file (" + report.field.spec() + ")");
  } else {
    if (cfg.complex_path.empty()) throw InputError("--complex is required");
    if (cfg.map_path.empty() == cfg.cocycle_path.empty()) throw InputError("give exactly one of --map and --cocycle");
    SimplicialComplex k = parse_complex(read_text_file(cfg.complex_path), cfg.complex_path);
    PLCircleMap map;
    if (!cfg.map_path.empty()) {
      std::vector<std::string> warnings;
      map = parse_map(read_text_file(cfg.map_path), k, cfg.map_path, &warnings);
      for (const auto& w : warnings) log << "warning: " << w << '\n';
    } else {
      OneCocycle c = parse_cocycle(read_text_file(cfg.cocycle_path), k, cfg.cocycle_path);
      AlmostIntegralWitness w = period_alpha(c);
      if (cfg.verbosity > 0) log << "cocycle period " << fraction_string(w.alpha) << (w.exact ? " (exact)" : "") << '\n';
      map = cocycle_to_circle_map(c, w);
    }
    const int hi = cfg.hi < 0 ? k.dimension() : cfg.hi;
    if (cfg.lo < 0 || hi < cfg.lo) throw InputError("bad dimension range");
    Field field = Field::parse(cfg.field.empty() ? "q" : cfg.field);
    MapAnalysis a = analyze(map);
    if (cfg.verbosity > 0) log << "critical angles: " << a.crit.m() << ", derived simplices: " << a.cut.derived.complex().ordered().size() << '\n';
    report = compute_invariants(a, field, cfg.lo, hi);
    if (cfg.check_covering) report.checks.push_back(covering_check(a, report));
    if (cfg.check_sublevel) report.checks.push_back(sublevel_check(a, report));
    if (cfg.check_eqf) report.checks.push_back(eqf_check(a, report));
  }
  for (const auto& c : report.checks)
    if (cfg.verbosity > 0 || !c.pass) log << c.name << ": " << (c.pass ? "pass" : "FAIL") << " " << c.detail << '\n';
  if (!cfg.json_path.empty()) write_text_file(cfg.json_path, report_json(report));
  if (!cfg.svg_path.empty()) write_text_file(cfg.svg_path, report_svg(report));
  return report;
}

}  // namespace circpers
