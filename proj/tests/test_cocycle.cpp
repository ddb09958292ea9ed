#include <set>
#include <tuple>

#include "doctest.h"
#include "circpers/cocycle.hpp"
#include "circpers/fixtures.hpp"
#include "circpers/pipeline.hpp"

using namespace circpers;

namespace {

using Values = std::map<std::pair<int, int>, Scalar>;

OneCocycle hollow(const Scalar& v) {
  return OneCocycle::create(build_complex({{0, 1}, {1, 2}, {0, 2}}), {{{0, 1}, v}, {{1, 2}, v}, {{2, 0}, v}});
}

}  // namespace

TEST_SUITE("cocycle") {

TEST_CASE("cocycle conditions") {
  auto tree = build_complex({{0, 1}, {1, 2}, {1, 3}});
  CHECK_NOTHROW(OneCocycle::create(tree, {{{0, 1}, Scalar(5)}, {{1, 2}, Scalar(-1, 7)}, {{3, 1}, Scalar(2)}}));
  auto tri = build_complex({{0, 1, 2}});
  CHECK_NOTHROW(OneCocycle::create(tri, {{{0, 1}, Scalar(1)}, {{1, 2}, Scalar(1)}, {{2, 0}, Scalar(-2)}}));
  CHECK_THROWS_AS(OneCocycle::create(tri, {{{0, 1}, Scalar(1)}, {{1, 2}, Scalar(1)}, {{2, 0}, Scalar(1)}}), InputError);
  CHECK_THROWS_AS(OneCocycle::create(tree, {{{0, 1}, Scalar(1)}, {{1, 2}, Scalar(1)}}), InputError);
  CHECK_THROWS_AS(OneCocycle::create(tree, {{{0, 1}, Scalar(1)}, {{1, 0}, Scalar(1)}, {{1, 2}, Scalar(1)}, {{1, 3}, Scalar(1)}}),
                  InputError);
  auto c = OneCocycle::create(tree, {{{0, 1}, Scalar(5)}, {{1, 2}, Scalar(1)}, {{3, 1}, Scalar(2)}});
  CHECK(c.value(1, 3) == -2);
  CHECK(c.value(1, 0) == -5);
}

TEST_CASE("periods") {
  auto w = period_alpha(hollow(Scalar(1, 3)));
  CHECK_FALSE(w.exact);
  CHECK(w.alpha == 1);

  // two triangles sharing vertex 0 with holonomies 2/3 and 1/2
  auto k = build_complex({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  Values v{{{0, 1}, Scalar(2, 3)}, {{1, 2}, Scalar(0)}, {{2, 0}, Scalar(0)},
           {{0, 3}, Scalar(1, 2)}, {{3, 4}, Scalar(0)}, {{4, 0}, Scalar(0)}};
  auto w2 = period_alpha(OneCocycle::create(k, v));
  CHECK(w2.alpha == Scalar(1, 6));
  CHECK(w2.holonomies.size() == 2);

  auto tree = OneCocycle::create(build_complex({{0, 1}, {1, 2}}), {{{0, 1}, Scalar(1, 5)}, {{1, 2}, Scalar(3)}});
  CHECK(period_alpha(tree).exact);
}

TEST_CASE("cocycles to maps") {
  auto c = hollow(Scalar(1, 3));
  auto map = cocycle_to_circle_map(c, period_alpha(c));
  CHECK(map.angles() == std::vector<Scalar>{Scalar(0), Scalar(1, 3), Scalar(2, 3)});
  CHECK(map.lift(0, 1) + map.lift(1, 2) + map.lift(2, 0) == 1);

  auto doubled = c.scaled(Scalar(2));
  auto w2 = period_alpha(doubled);
  CHECK(w2.alpha == 2);
  auto map2 = cocycle_to_circle_map(doubled, w2);
  CHECK(map2.angles() == map.angles());
  CHECK(map2.edge_lifts() == map.edge_lifts());

  auto exact = OneCocycle::create(build_complex({{0, 1}, {1, 2}}), {{{0, 1}, Scalar(1, 4)}, {{1, 2}, Scalar(1, 4)}});
  auto flat = cocycle_to_circle_map(exact, period_alpha(exact));
  CHECK(flat.lift(0, 1) + flat.lift(1, 2) == Scalar(1, 2) / period_alpha(exact).alpha);
}

TEST_CASE("maps to cocycles") {
  auto tri = winding_triangle();
  auto [c, alpha] = circle_map_to_cocycle(tri.map);
  CHECK(alpha == 1);
  CHECK(c.value(0, 1) == Scalar(1, 3));
  CHECK(c.value(1, 2) == Scalar(1, 3));
  CHECK(c.value(2, 0) == Scalar(1, 3));

  auto constant = PLCircleMap::create(build_complex({{0, 1, 2}}), {Scalar(1, 5), Scalar(1, 5), Scalar(1, 5)});
  auto [z, za] = circle_map_to_cocycle(constant);
  for (const auto& [e, v] : z.values()) CHECK(v == 0);
}

TEST_CASE("round trips keep the invariants") {
  Field q = Field::rationals();
  for (auto fx : {winding_triangle(), two_winding_triangles(), mapping_torus_fixture(Monodromy::kDegree, 3),
                  random_map_fixture(31)}) {
    auto [c, alpha] = circle_map_to_cocycle(fx.map);
    auto back = cocycle_to_circle_map(c, AlmostIntegralWitness{false, alpha, {}});
    CHECK(back.edge_lifts() == fx.map.edge_lifts());
    // angles agree up to a rotation along each edge
    for (const auto& [e, lift] : fx.map.edge_lifts())
      CHECK(mod_one(fx.map.angle(e.first) - back.angle(e.first)) == mod_one(fx.map.angle(e.second) - back.angle(e.second)));
    const int top = fx.map.complex().dimension();
    auto original = compute_invariants(fx.map, q, 0, top);
    auto again = compute_invariants(back, q, 0, top);
    for (const auto& [r, dec] : original.dims) {
      auto lengths = [](const InvariantsReport& rep, int dim) {
        std::multiset<std::tuple<Scalar, bool, bool>> out;
        for (const auto& b : rep.at(dim).bars)
          out.emplace(b.end(rep.critical) - b.start(rep.critical), b.left_closed, b.right_closed);
        return out;
      };
      CHECK(lengths(original, r) == lengths(again, r));
      CHECK(dec.jordan == again.at(r).jordan);
    }
  }
}

}  // TEST_SUITE
