#include "doctest.h"
#include "circpers/fibers.hpp"
#include "circpers/fixtures.hpp"
#include "oracle.hpp"

using namespace circpers;

namespace {

struct Cut {
  PLCircleMap map;
  CriticalStructure crit;
  CutComplex cut;
};

Cut cut_of(const MapFixture& fx) {
  Cut c{fx.map, critical_structure(fx.map), {}};
  c.cut = cut_at_levels(c.map, c.crit.t);
  return c;
}

}  // namespace

TEST_SUITE("fibers") {

TEST_CASE("level subcomplexes") {
  Field q = Field::rationals();
  auto tri = cut_of(winding_triangle());
  for (const auto& t : tri.crit.t) {
    auto level = level_subcomplex(tri.cut, t);
    CHECK(level.complex.count(0) == 1);
    CHECK(level.complex.dimension() == 0);
  }
  auto two = cut_of(two_winding_triangles());
  CHECK(level_subcomplex(two.cut, two.crit.t[0]).complex.count(0) == 2);

  auto torus = cut_of(mapping_torus_fixture(Monodromy::kIdentity));
  auto level = level_subcomplex(torus.cut, torus.crit.t[1]);
  CHECK(betti(level.complex, 0, q) == 1);
  CHECK(betti(level.complex, 1, q) == 1);
  CHECK(level.complex.dimension() == 1);
}

TEST_CASE("interval pieces") {
  Field q = Field::rationals();
  auto tri = cut_of(winding_triangle());
  for (std::size_t i = 1; i <= tri.crit.m(); ++i) {
    auto piece = interval_subcomplex(tri.cut, tri.crit, i);
    CHECK(betti(piece.complex, 0, q) == 1);
    CHECK(betti(piece.complex, 1, q) == 0);
  }
  auto torus = cut_of(mapping_torus_fixture(Monodromy::kIdentity));
  for (std::size_t i = 1; i <= torus.crit.m(); ++i) {
    auto piece = interval_subcomplex(torus.cut, torus.crit, i);
    CHECK(betti(piece.complex, 1, q) == 1);
    CHECK(betti(piece.complex, 2, q) == 0);
  }
}

TEST_CASE("homology bases") {
  Field q = Field::rationals(), z2 = Field::prime(2);
  auto circle = build_complex({{0, 1}, {1, 2}, {0, 2}});
  CHECK(HomologyBasis(circle, 1, q).rank() == 1);
  auto point = build_complex({{0}});
  CHECK(HomologyBasis(point, 0, q).rank() == 1);
  CHECK(HomologyBasis(point, 1, q).rank() == 0);
  auto klein = mapping_torus_fixture(Monodromy::kReflection).map.complex();
  CHECK(HomologyBasis(klein, 1, z2).rank() == 2);
  CHECK(HomologyBasis(klein, 1, q).rank() == 1);
  CHECK(HomologyBasis(klein, 2, z2).rank() == 1);
  CHECK(HomologyBasis(klein, 2, q).rank() == 0);

  HomologyBasis b(circle, 1, q);
  auto cycle = b.representatives()[0];
  CHECK(b.coordinates(cycle) == Vector{Scalar(1)});
  cycle.scale(q, Scalar(-2));
  CHECK(b.coordinates(cycle) == Vector{Scalar(-2)});
}

TEST_CASE("library betti agrees with the oracle") {
  for (std::uint64_t seed : {1, 2, 5, 8, 13}) {
    const auto fx = random_map_fixture(seed);
    const auto& k = fx.map.complex();
    for (unsigned long p : {0ul, 2ul, 5ul}) {
      Field f = p == 0 ? Field::rationals() : Field::prime(p);
      for (int r = 0; r <= k.dimension(); ++r) {
        CHECK(betti(k, r, f) == oracle::betti(k, r, p));
        CHECK(brute_force_homology(k, r, f) == oracle::betti(k, r, p));
      }
    }
  }
}

TEST_CASE("induced maps") {
  Field q = Field::rationals();
  auto torus = cut_of(mapping_torus_fixture(Monodromy::kIdentity));
  auto level = level_subcomplex(torus.cut, torus.crit.t[0]);
  HomologyBasis lb(level.complex, 1, q);
  CHECK(induced_map(level, lb, level, lb) == FieldMatrix::identity(q, 1));
  auto piece = interval_subcomplex(torus.cut, torus.crit, 1);
  HomologyBasis pb(piece.complex, 1, q);
  auto a = induced_map(level, lb, piece, pb);
  REQUIRE(a.rows() == 1);
  REQUIRE(a.cols() == 1);
  CHECK((a(0, 0) == 1 || a(0, 0) == -1));

  auto tri = cut_of(winding_triangle());
  auto pt = level_subcomplex(tri.cut, tri.crit.t[0]);
  auto arc = interval_subcomplex(tri.cut, tri.crit, 1);
  HomologyBasis ptb(pt.complex, 0, q), arcb(arc.complex, 0, q);
  CHECK(induced_map(pt, ptb, arc, arcb) == FieldMatrix::identity(q, 1));
}

TEST_CASE("fiber minors") {
  auto tri = winding_triangle();
  auto minor = fiber_minor(tri.map, Scalar(1, 6));
  CHECK(minor.cell_dims == std::vector<int>{0});
  CHECK(fiber_minor_betti(minor, 0) == 1);

  auto solid = PLCircleMap::create(build_complex({{0, 1, 2}}), {Scalar(0), Scalar(1, 3), Scalar(2, 3)},
                                   {{{0, 2}, Scalar(2, 3)}});
  auto seg = fiber_minor(solid, Scalar(1, 2));
  CHECK(seg.cell_dims.size() == 3);
  CHECK(fiber_minor_betti(seg, 0) == 1);
  CHECK(fiber_minor_betti(seg, 1) == 0);

  // a vertex at theta inside a fan of triangles
  auto fan = PLCircleMap::create(build_complex({{0, 1, 2}, {0, 2, 3}}),
                                 {Scalar(1, 2), Scalar(1, 4), Scalar(3, 4), Scalar(1, 3)});
  auto at_vertex = fiber_minor(fan, Scalar(1, 2));
  CHECK(at_vertex.cell_dims.front() == 0);
  CHECK(fiber_minor_betti(at_vertex, 0) == 1);
}

TEST_CASE("fiber minor matches sliced fibers over Z/2") {
  for (std::uint64_t seed : {4, 6, 9}) {
    auto fx = random_map_fixture(seed);
    for (const Scalar& theta : {Scalar(1, 7), Scalar(3, 7), Scalar(6, 7)})
      for (int r = 0; r < fx.map.complex().dimension(); ++r)
        CHECK(fiber_minor_betti(fiber_minor(fx.map, theta), r) == oracle::fiber_betti(fx.map, theta, r, 2));
  }
}

}  // TEST_SUITE
