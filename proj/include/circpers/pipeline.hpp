// End-to-end computation: input files to report, with the optional
// cross-check routes.

#ifndef CIRCPERS_PIPELINE_HPP
#define CIRCPERS_PIPELINE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "circpers/covering.hpp"
#include "circpers/invariants.hpp"

namespace circpers {

/// A map together with its critical structure and the cut at every t_i.
struct MapAnalysis {
  PLCircleMap map;
  CriticalStructure crit;
  CutComplex cut;
};

MapAnalysis analyze(const PLCircleMap& map);

InvariantsReport compute_invariants(const MapAnalysis& a, Field field, int lo, int hi,
                                    const DecomposeOptions& opt = {});
InvariantsReport compute_invariants(const PLCircleMap& map, Field field, int lo, int hi);
/// Invariants of representations given directly; critical angles are i/m.
InvariantsReport compute_invariants(const std::map<int, CyclicQuiverRep>& reps);

/// One truncated covering per dimension, decomposed as a linear representation.
struct CoveringRun {
  int r = 0;
  TruncationEstimate estimate;
  std::vector<LinearBar> linear_bars;
  std::vector<CircleBarCode> circle_bars;
};
CoveringRun run_covering(const MapAnalysis& a, int r, Field field);

/// Circle bars read off the covering agree with the quiver decomposition.
CheckResult covering_check(const MapAnalysis& a, const InvariantsReport& report);
/// Bars of the second turn agree with the counts from windows of the covering.
CheckResult sublevel_check(const MapAnalysis& a, const InvariantsReport& report);
/// dim H_r(X) = dck(M_r) + dk(M_{r-1}) against brute-force homology of X.
CheckResult eqf_check(const MapAnalysis& a, const InvariantsReport& report);

struct RunConfig {
  std::string complex_path, map_path, cocycle_path, rep_path;
  /// Empty: q, or the field of a representation file.
  std::string field;
  /// Inclusive; hi < 0 means the dimension of the complex.
  int lo = 0, hi = -1;
  bool check_covering = false, check_sublevel = false, check_eqf = false;
  std::string json_path, svg_path;
  int verbosity = 0;
};

/// Parses, computes, runs the requested checks and writes the outputs.
/// Throws InputError on bad input; check failures are recorded in the report.
InvariantsReport run_pipeline(const RunConfig& cfg, std::ostream& log);

}  // namespace circpers

#endif  // CIRCPERS_PIPELINE_HPP
