// Truncated infinite cyclic covering of a circle-valued map and the circle
// bar codes read off its level persistence.

#ifndef CIRCPERS_COVERING_HPP
#define CIRCPERS_COVERING_HPP

#include <optional>
#include <vector>

#include "circpers/fibers.hpp"
#include "circpers/quiver.hpp"

namespace circpers {

struct TruncationEstimate {
  std::size_t d = 0;  // dim H_r(X_theta)
  std::size_t k = 2;
  /// Z/2 ranks of the level subcomplex and of the fiber minor (the latter
  /// absent when a vertex sits at theta together with another).
  std::size_t level_z2 = 0;
  std::optional<std::size_t> minor_z2;
  bool consistent() const { return !minor_z2 || *minor_z2 == level_z2; }
};

/// k = d + 2 with d = dim H_r(X_theta). theta must be a cut level.
TruncationEstimate estimate_truncation(const PLCircleMap& map, const CutComplex& cut, const Scalar& theta, int r,
                                       Field field);

enum class Block { kTop, kLevel, kLowerCollar, kUpperCollar };

/// Partition of the derived simplices with respect to the level at theta.
struct Dissection {
  std::vector<Simplex> top, level, lower_collar, upper_collar;
  Block block_of(const Simplex& s) const;
};

Dissection dissect(const CutComplex& cut, const Scalar& theta);

class TruncatedCovering {
 public:
  /// The window [theta, theta + k] of the covering, theta = t_1; cut must
  /// contain every t_i of crit.
  TruncatedCovering(const CutComplex& cut, const CriticalStructure& crit, std::size_t k);

  const Scalar& theta() const { return theta_; }
  std::size_t copies() const { return k_; }
  std::size_t m() const { return crit_.m(); }
  /// Number of critical values c_1 < ... < c_N inside the window.
  std::size_t pieces() const { return k_ * crit_.m(); }
  /// R_0 = theta < c_1 < R_1 < ... < c_N < R_N = theta + k.
  Scalar regular(std::size_t j) const;
  Scalar critical(std::size_t j) const;

  const Subcomplex& space() const { return space_; }
  /// Y[R_a, R_b]; a == b gives the level at R_a.
  Subcomplex window(std::size_t a, std::size_t b) const;

  /// Block and copy index of a simplex of space().
  std::pair<Block, long> provenance(const Simplex& local) const;
  /// Simplices of space() in an order that keeps faces first and respects the
  /// copy-by-copy filtration.
  std::vector<Simplex> filtration_order() const;
  /// Filtration stage used by filtration_order.
  long stage(const Simplex& local) const;

 private:
  PLCircleMap derived_;
  CriticalStructure crit_;
  Scalar theta_;
  std::size_t k_;
  Subcomplex space_;
  Dissection dissection_;
};

/// Level representation of the covering: levels R_0..R_N, pieces [R_{j-1}, R_j].
LinearQuiverRep covering_representation(const TruncatedCovering& cov, int r, Field field);

/// Bars starting in the second turn, moved back by one turn. A kept bar that
/// reaches the right end of the truncation raises InternalError.
std::vector<CircleBarCode> extract_circle_bars(const std::vector<LinearBar>& bars, std::size_t m, std::size_t k);

}  // namespace circpers

#endif  // CIRCPERS_COVERING_HPP
