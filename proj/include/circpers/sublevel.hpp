// Sublevel persistence counts, simultaneous persistence of two one-sided
// filtrations, and the level bar counts they determine on a covering.

#ifndef CIRCPERS_SUBLEVEL_HPP
#define CIRCPERS_SUBLEVEL_HPP

#include <map>
#include <tuple>
#include <vector>

#include "circpers/covering.hpp"
#include "circpers/fibers.hpp"

namespace circpers {

/// X_0 ⊆ X_1 ⊆ ... ; inclusions match vertex keys.
struct NestedSequence {
  std::vector<Subcomplex> stages;
  std::vector<Scalar> values;
};

/// Stage i is the full subcomplex on vertices with value <= the i-th distinct value.
NestedSequence sublevel_sequence(const SimplicialComplex& k, const std::vector<Scalar>& values);

struct PersistenceCounts {
  std::vector<Scalar> values;
  /// (birth stage, death stage) -> count; death stage == values.size() means never
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mu;
  std::size_t at(std::size_t birth, std::size_t death) const;
  std::size_t never() const { return values.size(); }
};

/// mu(a, b) by inclusion-exclusion over image ranks. With from_start_only
/// only births at stage 0 are tabulated.
PersistenceCounts persistence_counts(const NestedSequence& seq, int r, Field field, bool from_start_only = false);
PersistenceCounts sublevel_mu(const SimplicialComplex& k, const std::vector<Scalar>& values, int r, Field field);

struct SimultaneousCounts {
  std::vector<Scalar> minus_values, plus_values;
  /// (minus death stage, plus death stage) -> count; size() of a side means never
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> omega;
  std::size_t at(std::size_t s, std::size_t t) const;
};

/// Both sequences start at the same A; counts classes of H_r(A) by the exact
/// stages at which they die on either side.
SimultaneousCounts simultaneous_omega(const NestedSequence& minus, const NestedSequence& plus, int r, Field field);

/// The counts N{c_i,c_j), N(c_i,c_j}, N(c_i,c_j), N{c_i,c_j} for critical
/// indices of a covering; missing entries are zero.
struct LevelTables {
  std::size_t pieces = 0;
  std::size_t first_row = 1, last_row = 0;
  std::map<std::pair<std::size_t, std::size_t>, long> meets_open_right, open_left_meets, open_open, meets_both;
};

LevelTables covering_tables(const TruncatedCovering& cov, int r, Field field, std::size_t first_row,
                            std::size_t last_row);

struct LevelBarCounts {
  /// (i, j, left closed, right closed) -> count
  std::map<std::tuple<std::size_t, std::size_t, bool, bool>, long> counts;
  /// Expands the multiplicities; InternalError on a negative count.
  std::vector<LinearBar> bars() const;
};

/// Bars with left end c_i for first_row <= i <= last_row.
LevelBarCounts level_bar_counts(const LevelTables& tables);

/// Bars with start in [first, last], bars touching an end recorded as closed there.
std::vector<LinearBar> bars_in_rows(const std::vector<LinearBar>& bars, std::size_t first, std::size_t last);

}  // namespace circpers

#endif  // CIRCPERS_SUBLEVEL_HPP
