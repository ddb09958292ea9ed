// Simplicial complexes, PL circle-valued maps (vertex angles + edge lifts), the
// critical/regular angle structure and the level-cut subdivision.

#ifndef CIRCPERS_COMPLEX_HPP
#define CIRCPERS_COMPLEX_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circpers/field.hpp"
#include "circpers/sparse.hpp"

namespace circpers {

/// Sorted, distinct vertex ids.
using Simplex = std::vector<int>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Closes the given simplices under faces. Vertex lists need not be sorted
  /// but must be free of repeats.
  static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int dim) const;
  std::size_t size() const;
  bool empty() const { return by_dim_.empty(); }
  /// Simplices of one dimension in lexicographic order.
  const std::vector<Simplex>& simplices(int dim) const;
  std::optional<std::size_t> find(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }
  std::vector<int> vertices() const;
  std::vector<Simplex> maximal_simplices() const;
  /// All simplices ordered by (dimension, lexicographic); faces precede cofaces.
  std::vector<Simplex> ordered() const;
  std::size_t global_index(int dim, std::size_t local) const;

  /// Signed boundary of simplices(dim)[local] in (dim-1)-simplex coordinates.
  SparseVector boundary(int dim, std::size_t local, const Field& f) const;
  long euler_characteristic() const;

  bool operator==(const SimplicialComplex& o) const { return by_dim_ == o.by_dim_; }

 private:
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

/// User-facing constructor: non-empty input, vertex ids dense from 0.
SimplicialComplex build_complex(const std::vector<std::vector<int>>& maximal_simplices);

struct IncidenceMatrix {
  std::vector<Simplex> order;
  /// entry (i, j) is nonzero iff order[i] is a codimension-one face of order[j]
  FieldMatrix matrix;
};

/// Unsigned entries are 0/1; the signed variant uses the alternating
/// convention on ascending vertex lists.
IncidenceMatrix incidence_matrix(const SimplicialComplex& k, bool signed_entries, Field field);

class PLCircleMap {
 public:
  PLCircleMap() = default;
  /// Angles are fractions of a turn and are reduced into [0, 1). Explicit
  /// lifts are keyed by oriented edge (u, v) and mean F(v) - F(u).
  static PLCircleMap create(SimplicialComplex complex, std::vector<Scalar> angles,
                            const std::map<std::pair<int, int>, Scalar>& explicit_lifts = {},
                            std::vector<std::string>* warnings = nullptr);

  const SimplicialComplex& complex() const { return complex_; }
  const Scalar& angle(int v) const { return angles_.at(static_cast<std::size_t>(v)); }
  const std::vector<Scalar>& angles() const { return angles_; }
  /// F(v) - F(u) along the edge {u, v}; zero when u == v.
  Scalar lift(int u, int v) const;
  /// Lifted values on the vertices of s in the frame where F(s[0]) = angle(s[0]).
  std::vector<Scalar> frame_values(const Simplex& s) const;
  /// True when no two vertices share an angle.
  bool generic() const;
  const std::map<std::pair<int, int>, Scalar>& edge_lifts() const { return lifts_; }

 private:
  SimplicialComplex complex_;
  std::vector<Scalar> angles_;
  std::map<std::pair<int, int>, Scalar> lifts_;  // u < v
};

/// Representative of x in [0, 1).
Scalar mod_one(const Scalar& x);
Scalar floor_of(const Scalar& x);
Scalar ceil_of(const Scalar& x);
/// Representative of angle(v) - angle(u) in (-1/2, 1/2].
Scalar shortest_arc(const Scalar& from, const Scalar& to);

struct CriticalStructure {
  /// s_1 < ... < s_m in (0, 1]
  std::vector<Scalar> s;
  /// t_1 = s_1 / 2, t_i = (s_{i-1} + s_i) / 2
  std::vector<Scalar> t;
  std::size_t m() const { return s.size(); }
};

CriticalStructure critical_structure(const PLCircleMap& map);

struct CutComplex {
  /// Derived complex with its own angles and lifts. Original vertices keep
  /// their ids; crossing vertices follow.
  PLCircleMap derived;
  /// Sorted distinct cut levels in [0, 1).
  std::vector<Scalar> levels;
  std::size_t original_vertex_count = 0;
  /// Per derived vertex: (a, a) for an original vertex, (a, b) with a < b for a
  /// crossing on the original edge {a, b}.
  std::vector<std::pair<int, int>> origin;

  bool is_level(const Scalar& t) const;
  /// Smallest original simplex containing the derived simplex.
  Simplex carrier(const Simplex& derived_simplex) const;
};

CutComplex cut_at_levels(const PLCircleMap& map, const std::vector<Scalar>& levels);

}  // namespace circpers

#endif  // CIRCPERS_COMPLEX_HPP
