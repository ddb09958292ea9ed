// Level and interval subcomplexes of a cut complex, homology bases and the
// maps induced by inclusions.

#ifndef CIRCPERS_FIBERS_HPP
#define CIRCPERS_FIBERS_HPP

#include <map>
#include <string>
#include <vector>

#include "circpers/complex.hpp"
#include "circpers/sparse.hpp"

namespace circpers {

/// A vertex of a lifted piece: derived vertex id plus its lifted value.
struct VertexKey {
  int vertex;
  Scalar level;
  bool operator<(const VertexKey& o) const { return vertex != o.vertex ? vertex < o.vertex : level < o.level; }
  bool operator==(const VertexKey& o) const { return vertex == o.vertex && level == o.level; }
};

/// Part of the infinite cyclic covering of a cut complex, with local vertex
/// ids 0..n-1 (assigned in key order).
struct Subcomplex {
  enum class Kind { kLevel, kInterval, kWindow };
  Kind kind = Kind::kWindow;
  Scalar lo, hi;
  SimplicialComplex complex;
  std::vector<VertexKey> keys;
  std::map<VertexKey, int> lookup;

  /// The derived simplex a local simplex copies.
  Simplex source(const Simplex& local) const;

  bool empty() const { return complex.empty(); }
};

/// All lifted copies of derived simplices whose values lie in [lo, hi].
Subcomplex window_subcomplex(const PLCircleMap& derived, const Scalar& lo, const Scalar& hi);
/// The fiber over t; t must be a cut level.
Subcomplex level_subcomplex(const CutComplex& cut, const Scalar& t);
/// X_[t_i, t_{i+1}] for 1 <= i <= m, with t_{m+1} = t_1 + 1.
Subcomplex interval_subcomplex(const CutComplex& cut, const CriticalStructure& crit, std::size_t i);

class HomologyBasis {
 public:
  HomologyBasis(const SimplicialComplex& k, int r, Field field);

  int degree() const { return r_; }
  std::size_t rank() const { return reps_.size(); }
  const Field& field() const { return field_; }
  /// Cycle representatives as chains over simplices(r).
  const std::vector<SparseVector>& representatives() const { return reps_; }
  /// Coordinates of the class of a cycle; throws InternalError for non-cycles.
  Vector coordinates(const SparseVector& cycle) const;

 private:
  int r_;
  Field field_;
  std::vector<SparseVector> reps_;
  Reducer classes_;  // boundaries (zero tag) followed by representatives (unit tags)
};

/// H_r of the inclusion small -> big, where a small key (v, l) goes to (v, l + shift).
FieldMatrix induced_map(const Subcomplex& small, const HomologyBasis& small_basis, const Subcomplex& big,
                        const HomologyBasis& big_basis, const Scalar& shift = Scalar(0));

/// Betti numbers by the library's sparse reduction.
std::size_t betti(const SimplicialComplex& k, int r, Field field);

/// Unsigned incidence of the cell structure X_theta read off the original
/// complex: cells are (simplex, lifted crossing) pairs, one dimension lower;
/// a vertex at theta contributes one extra leading 0-cell. Cell order is returned.
struct FiberMinor {
  IncidenceMatrix incidence;
  std::vector<int> cell_dims;
};
FiberMinor fiber_minor(const PLCircleMap& map, const Scalar& theta);
/// Betti numbers over Z/2 of the cell complex of a fiber minor.
std::size_t fiber_minor_betti(const FiberMinor& minor, int r);

}  // namespace circpers

#endif  // CIRCPERS_FIBERS_HPP
