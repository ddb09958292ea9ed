#include <algorithm>
#include <set>

#include "doctest.h"
#include "circpers/fixtures.hpp"
#include "circpers/pipeline.hpp"
#include "oracle.hpp"

using namespace circpers;

TEST_SUITE("covering") {

TEST_CASE("truncation estimates") {
  Field q = Field::rationals();
  auto tri = analyze(winding_triangle().map);
  auto e0 = estimate_truncation(tri.map, tri.cut, tri.crit.t[0], 0, q);
  CHECK(e0.d == 1);
  CHECK(e0.k == 3);
  CHECK(e0.consistent());

  auto torus = analyze(mapping_torus_fixture(Monodromy::kIdentity).map);
  auto e1 = estimate_truncation(torus.map, torus.cut, torus.crit.t[0], 1, q);
  CHECK(e1.d == 1);
  CHECK(e1.k == 3);

  auto sphere = analyze(sphere_over_arc().map);
  auto e2 = estimate_truncation(sphere.map, sphere.cut, sphere.crit.t[0], 0, q);
  CHECK(e2.d == 0);
  CHECK(e2.k == 2);
}

TEST_CASE("dissection") {
  auto tri = analyze(winding_triangle().map);
  auto parts = dissect(tri.cut, tri.crit.t[0]);
  // the star of the level point: the point and its two edges
  CHECK(parts.level.size() == 3);
  CHECK(parts.lower_collar.size() == 1);
  CHECK(parts.upper_collar.size() == 1);
  std::size_t total = parts.top.size() + parts.level.size() + parts.lower_collar.size() + parts.upper_collar.size();
  CHECK(total == tri.cut.derived.complex().size());
  for (const auto& s : parts.level) CHECK(parts.block_of(s) == Block::kLevel);

  auto both = analyze(two_winding_triangles().map);
  CHECK(dissect(both.cut, both.crit.t[0]).level.size() == 6);
}

TEST_CASE("truncated coverings") {
  Field q = Field::rationals();
  auto tri = analyze(winding_triangle().map);
  TruncatedCovering cov(tri.cut, tri.crit, 2);
  CHECK(cov.pieces() == 6);
  CHECK(cov.regular(0) == tri.crit.t[0]);
  CHECK(cov.regular(cov.pieces()) == tri.crit.t[0] + 2);
  CHECK(betti(cov.space().complex, 0, q) == 1);
  CHECK(betti(cov.space().complex, 1, q) == 0);

  auto two = analyze(two_winding_triangles().map);
  CHECK(betti(TruncatedCovering(two.cut, two.crit, 2).space().complex, 0, q) == 2);

  auto torus = analyze(mapping_torus_fixture(Monodromy::kIdentity).map);
  TruncatedCovering annulus(torus.cut, torus.crit, 2);
  CHECK(betti(annulus.space().complex, 1, q) == 1);
  CHECK(betti(annulus.space().complex, 2, q) == 0);
  // faces come before their cofaces
  auto order = annulus.filtration_order();
  std::set<Simplex> seen;
  for (const auto& s : order) {
    if (s.size() > 1)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        CHECK(seen.count(face) == 1);
      }
    seen.insert(s);
  }
  CHECK(order.size() == annulus.space().complex.size());
}

TEST_CASE("circle bars from the covering") {
  Field q = Field::rationals();
  auto tri = analyze(winding_triangle().map);
  auto run = run_covering(tri, 0, q);
  CHECK(run.circle_bars.empty());
  REQUIRE(run.linear_bars.size() == 1);
  CHECK(run.linear_bars[0].touches_left);
  CHECK(run.linear_bars[0].touches_right);

  for (std::uint64_t seed : {2, 9, 17, 23}) {
    auto a = analyze(random_map_fixture(seed).map);
    for (Field f : {Field::rationals(), Field::prime(2)}) {
      auto report = compute_invariants(a, f, 0, a.map.complex().dimension());
      for (const auto& [r, dec] : report.dims) {
        auto expected = dec.bars;
        std::sort(expected.begin(), expected.end());
        CHECK(run_covering(a, r, f).circle_bars == expected);
      }
    }
  }
}

TEST_CASE("extracting bars") {
  // a bar beginning at c_4 and ending at c_5 with m = 3: second turn, one critical step
  std::vector<LinearBar> bars{{4, 5, true, false, false, false}, {1, 2, true, true, false, false}};
  auto got = extract_circle_bars(bars, 3, 3);
  REQUIRE(got.size() == 1);
  CHECK(got[0].to_string() == "[s1,s2)");
  std::vector<LinearBar> runaway{{5, 9, true, true, false, true}};
  CHECK_THROWS_AS(extract_circle_bars(runaway, 3, 3), InternalError);
}

}  // TEST_SUITE
