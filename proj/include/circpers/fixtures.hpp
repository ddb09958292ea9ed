// Built-in complexes, maps and representations, and a naive homology oracle.

#ifndef CIRCPERS_FIXTURES_HPP
#define CIRCPERS_FIXTURES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "circpers/complex.hpp"
#include "circpers/quiver.hpp"

namespace circpers {

/// dim ker d_r - rank d_{r+1} by plain dense elimination.
std::size_t brute_force_homology(const SimplicialComplex& k, int r, Field field);

struct MapFixture {
  std::string name;
  PLCircleMap map;
};

enum class Monodromy { kIdentity, kReflection, kDegree, kShear };

/// Mapping torus of a circle (or, for kShear, of a wedge of two circles)
/// with its projection to the circle. degree is used by kDegree only.
MapFixture mapping_torus_fixture(Monodromy kind, int degree = 3);

/// Boundary of a triangle going once around the circle.
MapFixture winding_triangle();
/// Two disjoint copies of winding_triangle.
MapFixture two_winding_triangles();
/// Octahedron over an arc: one sphere whose middle fibers are circles.
MapFixture sphere_over_arc();

struct RandomOptions {
  int min_vertices = 4, max_vertices = 8;
  int max_dim = 3;
  int denominator = 12;
  std::size_t max_simplices = 200;
  int max_winding = 1;
};

/// Deterministic in the seed.
MapFixture random_map_fixture(std::uint64_t seed, const RandomOptions& opt = {});

/// Bars (s6, s1+1], [s2, s3], (s4, s5) with cells (3, 1), (1, 2) in degree 1
/// and a single cell (1, 1) in degree 0, all over m = 6.
std::map<int, CyclicQuiverRep> figure2_representations(Field field);

}  // namespace circpers

#endif  // CIRCPERS_FIXTURES_HPP
