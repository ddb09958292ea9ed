// Rational 1-cocycles, their period and the conversion to and from circle maps.

#ifndef CIRCPERS_COCYCLE_HPP
#define CIRCPERS_COCYCLE_HPP

#include <map>
#include <utility>
#include <vector>

#include "circpers/complex.hpp"

namespace circpers {

class OneCocycle {
 public:
  OneCocycle() = default;
  /// Values on oriented edges; each edge of the complex needs a value in at
  /// least one orientation, and both orientations must agree up to sign.
  static OneCocycle create(SimplicialComplex complex, const std::map<std::pair<int, int>, Scalar>& values);

  const SimplicialComplex& complex() const { return complex_; }
  /// f(u, v) = -f(v, u)
  Scalar value(int u, int v) const;
  const std::map<std::pair<int, int>, Scalar>& values() const { return values_; }
  OneCocycle scaled(const Scalar& c) const;

 private:
  SimplicialComplex complex_;
  std::map<std::pair<int, int>, Scalar> values_;  // u < v
};

struct AlmostIntegralWitness {
  bool exact = false;  // all holonomies vanish
  Scalar alpha = 1;
  /// One per non-tree edge of the spanning forest, in edge order.
  std::vector<Scalar> holonomies;
};

AlmostIntegralWitness period_alpha(const OneCocycle& c);

/// Angles are potential / alpha reduced mod 1 (potential 0 at the lowest
/// vertex of each component), lifts are value / alpha.
PLCircleMap cocycle_to_circle_map(const OneCocycle& c, const AlmostIntegralWitness& w);
/// Lifts as values, period one turn.
std::pair<OneCocycle, Scalar> circle_map_to_cocycle(const PLCircleMap& map);

}  // namespace circpers

#endif  // CIRCPERS_COCYCLE_HPP
