#include "doctest.h"
#include "circpers/fixtures.hpp"
#include "circpers/pipeline.hpp"
#include "circpers/sublevel.hpp"

using namespace circpers;

namespace {

std::vector<Scalar> tenths(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) {
    Scalar v(x, 10);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

NestedSequence windows(const PLCircleMap& map, const Scalar& at, const std::vector<Scalar>& others, bool below) {
  NestedSequence seq;
  seq.stages.push_back(window_subcomplex(map, at, at));
  seq.values.push_back(at);
  for (const auto& o : others) {
    seq.stages.push_back(below ? window_subcomplex(map, o, at) : window_subcomplex(map, at, o));
    seq.values.push_back(o);
  }
  return seq;
}

}  // namespace

TEST_SUITE("sublevel") {

TEST_CASE("sublevel persistence") {
  Field q = Field::rationals();
  auto segment = build_complex({{0, 1}});
  auto mu = sublevel_mu(segment, {Scalar(0), Scalar(1)}, 0, q);
  CHECK(mu.at(0, mu.never()) == 1);
  CHECK(mu.mu.size() == 1);

  auto circle = build_complex({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::vector<Scalar> height{Scalar(0), Scalar(1, 2), Scalar(1), Scalar(1, 2)};
  auto mu0 = sublevel_mu(circle, height, 0, q);
  CHECK(mu0.at(0, mu0.never()) == 1);
  CHECK(mu0.mu.size() == 1);
  auto mu1 = sublevel_mu(circle, height, 1, q);
  CHECK(mu1.at(2, mu1.never()) == 1);
  CHECK(mu1.mu.size() == 1);

  auto w = build_complex({{0, 1}, {1, 2}, {2, 3}});
  auto wmu = sublevel_mu(w, {Scalar(0), Scalar(2), Scalar(1), Scalar(3)}, 0, q);
  CHECK(wmu.at(1, 2) == 1);
  CHECK(wmu.at(0, wmu.never()) == 1);
  CHECK(wmu.mu.size() == 2);
}

TEST_CASE("simultaneous persistence") {
  Field q = Field::rationals();
  auto seg = PLCircleMap::create(build_complex({{0, 1}, {1, 2}}), tenths({1, 3, 5}));
  auto point = simultaneous_omega(windows(seg, tenths({3})[0], tenths({1}), true),
                                  windows(seg, tenths({3})[0], tenths({5}), false), 0, q);
  // never dies on either side
  CHECK(point.at(2, 2) == 1);
  CHECK(point.omega.size() == 1);

  auto square = PLCircleMap::create(build_complex({{0, 1}, {1, 2}, {2, 3}, {0, 3}}), tenths({1, 3, 5, 3}));
  auto two = simultaneous_omega(windows(square, tenths({3})[0], tenths({1}), true),
                                windows(square, tenths({3})[0], tenths({5}), false), 0, q);
  CHECK(two.at(0, 0) == 0);
  CHECK(two.at(1, 1) == 1);
  CHECK(two.at(2, 2) == 1);

  auto none = simultaneous_omega(windows(seg, tenths({2})[0], tenths({1}), true),
                                 windows(seg, tenths({2})[0], tenths({5}), false), 0, q);
  CHECK(none.omega.empty());
}

TEST_CASE("level bar counts") {
  LevelTables empty;
  CHECK(level_bar_counts(empty).bars().empty());

  Field q = Field::rationals();
  for (auto fx : {winding_triangle(), mapping_torus_fixture(Monodromy::kIdentity), sphere_over_arc(),
                  random_map_fixture(12)}) {
    auto a = analyze(fx.map);
    auto report = compute_invariants(a, q, 0, a.map.complex().dimension());
    auto res = sublevel_check(a, report);
    CHECK_MESSAGE(res.pass, fx.name, ": ", res.detail);
  }
}

TEST_CASE("rows of bars") {
  std::vector<LinearBar> bars{{1, 2, true, true, true, false}, {4, 6, false, true, false, false},
                              {7, 7, true, true, false, false}};
  auto rows = bars_in_rows(bars, 4, 6);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].start == 4);
}

}  // TEST_SUITE
