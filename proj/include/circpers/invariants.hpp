// The r-invariants of a map and the counting formulas built on them.

#ifndef CIRCPERS_INVARIANTS_HPP
#define CIRCPERS_INVARIANTS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "circpers/quiver.hpp"

namespace circpers {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct InvariantsReport {
  Field field = Field::rationals();
  /// s_1 < ... < s_m in (0, 1]
  std::vector<Scalar> critical;
  /// per dimension r
  std::map<int, Decomposition> dims;
  std::map<int, CyclicQuiverRep> reps;
  std::vector<CheckResult> checks;

  bool operator==(const InvariantsReport& o) const {
    return field == o.field && critical == o.critical && dims == o.dims;
  }
  const Decomposition& at(int r) const;
  bool checks_pass() const;
};

/// Number of j >= 0 with theta + j inside the bar (theta reduced into [0, 1)).
std::size_t n_theta(const CircleBarCode& bar, const std::vector<Scalar>& s, const Scalar& theta);
/// Dimension a cell occupies: size times degree of its factor.
std::size_t n_cell(const GeneralizedJordanBlock& cell);

/// Sum of n_theta over bars plus sum of n_cell over cells.
std::size_t betti_fiber(const InvariantsReport& report, int r, const Scalar& theta);
/// Closed-closed r-bars, open-open (r-1)-bars and cells with factor x - 1 in r
/// and r - 1. Dimensions missing from the report count as empty.
std::size_t betti_total(const InvariantsReport& report, int r);

/// alpha_i on the block diagonal, -beta_i right of it, -beta_m in the corner.
FieldMatrix block_matrix(const CyclicQuiverRep& rep);
std::size_t dk(const CyclicQuiverRep& rep);
std::size_t dck(const CyclicQuiverRep& rep);

struct EqfRow {
  int r = 0;
  std::size_t direct = 0, coker = 0, ker_below = 0;
  bool pass() const { return direct == coker + ker_below; }
};
/// dim H_r(X) = dck(M_r) + dk(M_{r-1}) for every r in direct_betti; a missing
/// representation counts as zero.
std::vector<EqfRow> verify_eqf(const std::map<int, CyclicQuiverRep>& reps, const std::map<int, std::size_t>& direct_betti);

/// Points of the spiral of a bar, radius 2 at its start and 3 at its end.
std::vector<std::pair<double, double>> spiral_points(const CircleBarCode& bar, const std::vector<Scalar>& s,
                                                     std::size_t samples_per_turn);
/// Radius of the spiral at a lifted angle (in turns), exactly.
Scalar spiral_radius(const Scalar& start, const Scalar& end, const Scalar& angle);

}  // namespace circpers

#endif  // CIRCPERS_INVARIANTS_HPP
