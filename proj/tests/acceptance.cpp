// Acceptance run: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "circpers/cocycle.hpp"
#include "circpers/fixtures.hpp"
#include "circpers/pipeline.hpp"
#include "oracle.hpp"

using namespace circpers;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (pass) notes << what;
    else if (notes.tellp() < 400) notes << "; " << what;
    pass = false;
  }
};

const std::vector<Field>& fields() {
  static const std::vector<Field> all{Field::prime(2), Field::prime(5), Field::rationals()};
  return all;
}

unsigned long char_of(const Field& f) { return f.characteristic(); }

std::vector<MapFixture> corpus() {
  std::vector<MapFixture> out;
  RandomOptions wide;
  wide.max_winding = 2;
  wide.max_vertices = 10;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) out.push_back(random_map_fixture(seed));
  for (std::uint64_t seed = 26; seed <= 50; ++seed) out.push_back(random_map_fixture(seed, wide));
  for (auto kind : {Monodromy::kIdentity, Monodromy::kReflection, Monodromy::kShear, Monodromy::kDegree})
    out.push_back(mapping_torus_fixture(kind));
  out.push_back(winding_triangle());
  out.push_back(two_winding_triangles());
  out.push_back(sphere_over_arc());
  return out;
}

using Cells = std::vector<std::pair<std::string, std::size_t>>;

Cells cells_of(const std::vector<GeneralizedJordanBlock>& blocks) {
  Cells out;
  for (const auto& b : blocks) out.emplace_back(b.factor.to_string(), b.size);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> bars_of(const Decomposition& d) {
  std::vector<std::string> out;
  for (const auto& b : d.bars) out.push_back(b.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

/// Angles strictly between a level t_i and a neighbouring critical angle.
std::vector<Scalar> refined_angles(const CriticalStructure& crit) {
  std::vector<Scalar> out;
  const std::size_t m = crit.m();
  for (std::size_t i = 0; i < m && out.size() < 3; ++i) {
    out.push_back(mod_one((crit.t[i] + crit.s[i]) / 2));
    Scalar next = i + 1 < m ? crit.t[i + 1] : crit.t[0] + 1;
    if (out.size() < 3) out.push_back(mod_one((crit.s[i] + next) / 2));
  }
  return out;
}

struct Case {
  const MapFixture* fx;
  Field field;
  MapAnalysis a;
  InvariantsReport report;
  int top;
};

std::vector<Case> build_cases(const std::vector<MapFixture>& all) {
  std::vector<Case> out;
  for (const auto& fx : all)
    for (const auto& f : fields()) {
      Case c{&fx, f, analyze(fx.map), {}, std::min(2, fx.map.complex().dimension())};
      c.report = compute_invariants(c.a, f, 0, c.top);
      out.push_back(std::move(c));
    }
  return out;
}

std::string label(const Case& c, int r) {
  return c.fx->name + "/" + c.field.spec() + "/H" + std::to_string(r);
}

// ---------------------------------------------------------------------------

void figure2(Outcome& o) {
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    auto report = compute_invariants(figure2_representations(f));
    o.expect(bars_of(report.at(1)) == std::vector<std::string>{"(s4,s5)", "(s6,s1+1]", "[s2,s3]"},
             "H1 bars over " + f.spec());
    o.expect(cells_of(report.at(1).jordan) == Cells{{"x-1", 2}, {"x-3", 1}}, "H1 cells over " + f.spec());
    o.expect(report.at(0).bars.empty() && cells_of(report.at(0).jordan) == Cells{{"x-1", 1}},
             "H0 over " + f.spec());
    o.expect(betti_fiber(report, 1, Scalar(5, 12)) == 4, "fiber betti between s2 and s3");
    o.expect(betti_total(report, 1) == 3, "total betti in degree 1");
  }
}

void jordan_example(Outcome& o) {
  auto m = FieldMatrix::from_ints(Field::rationals(), {{3, 0, 0}, {0, 1, 0}, {0, 3, 1}});
  o.expect(cells_of(jordan_decomposition(m)) == Cells{{"x-1", 2}, {"x-3", 1}}, "cells of the 3x3 example");
}

void classical(Outcome& o) {
  auto check_betti = [&](const MapFixture& fx, unsigned long p, std::vector<std::size_t> expected) {
    Field f = p == 0 ? Field::rationals() : Field::prime(p);
    for (int r = 0; r < static_cast<int>(expected.size()); ++r) {
      const std::string what = fx.name + " b" + std::to_string(r) + " over " + f.spec();
      o.expect(oracle::betti(fx.map.complex(), r, p) == expected[static_cast<std::size_t>(r)], what + " (oracle)");
      o.expect(brute_force_homology(fx.map.complex(), r, f) == expected[static_cast<std::size_t>(r)], what);
      auto report = compute_invariants(fx.map, f, 0, 2);
      o.expect(betti_total(report, r) == expected[static_cast<std::size_t>(r)], what + " (total betti)");
    }
  };
  auto torus = mapping_torus_fixture(Monodromy::kIdentity);
  auto klein = mapping_torus_fixture(Monodromy::kReflection);
  for (unsigned long p : {0ul, 2ul, 5ul}) check_betti(torus, p, {1, 2, 1});
  check_betti(klein, 2, {1, 2, 1});
  check_betti(klein, 0, {1, 1, 0});
  auto degree = mapping_torus_fixture(Monodromy::kDegree, 3);
  for (Field f : {Field::prime(5), Field::rationals()}) {
    auto cells = cells_of(compute_invariants(degree.map, f, 1, 1).at(1).jordan);
    o.expect(std::count(cells.begin(), cells.end(), std::pair<std::string, std::size_t>{"x-3", 1}) == 1,
             "degree 3 cell over " + f.spec());
  }
}

void fiber_counts(Outcome& o, const std::vector<Case>& cases) {
  for (const auto& c : cases) {
    const unsigned long p = char_of(c.field);
    std::vector<Scalar> angles = c.a.crit.t;
    std::vector<Scalar> extra = refined_angles(c.a.crit);
    angles.insert(angles.end(), extra.begin(), extra.end());
    std::vector<Scalar> levels = c.a.crit.t;
    levels.insert(levels.end(), extra.begin(), extra.end());
    CutComplex refined = cut_at_levels(c.a.map, levels);
    for (int r = 0; r <= c.top; ++r)
      for (const auto& theta : angles) {
        const std::size_t want = oracle::fiber_betti(c.a.map, theta, r, p);
        o.expect(betti_fiber(c.report, r, theta) == want, label(c, r) + " at " + fraction_string(theta));
        const auto level = level_subcomplex(refined, theta);
        o.expect(betti(level.complex, r, c.field) == want, label(c, r) + " level subcomplex at " + fraction_string(theta));
      }
  }
}

void monodromy_counts(Outcome& o, const std::vector<Case>& cases) {
  for (const auto& c : cases) {
    const unsigned long p = char_of(c.field);
    std::map<int, std::size_t> direct;
    for (int r = 0; r <= c.top; ++r) {
      direct[r] = oracle::betti(c.a.map.complex(), r, p);
      o.expect(betti_total(c.report, r) == direct[r], label(c, r) + " total betti");
    }
    std::map<int, CyclicQuiverRep> reps = c.report.reps;
    for (const auto& row : verify_eqf(reps, direct))
      o.expect(row.pass(), label(c, row.r) + " eqf against the oracle");
    auto res = eqf_check(c.a, c.report);
    o.expect(res.pass, c.fx->name + "/" + c.field.spec() + " eqf: " + res.detail);
  }
}

void routes(Outcome& o, const std::vector<Case>& cases) {
  for (const auto& c : cases) {
    auto cov = covering_check(c.a, c.report);
    o.expect(cov.pass, c.fx->name + "/" + c.field.spec() + " covering: " + cov.detail);
    auto sub = sublevel_check(c.a, c.report);
    o.expect(sub.pass, c.fx->name + "/" + c.field.spec() + " sublevel: " + sub.detail);
  }
}

void tables(Outcome& o) {
  const std::size_t m = 3;
  std::vector<CircleBarCode> layouts;
  for (int ends = 0; ends < 4; ++ends) {
    layouts.push_back({1, 3, 0, (ends & 1) != 0, (ends & 2) != 0});
    layouts.push_back({3, 2, 1, (ends & 1) != 0, (ends & 2) != 0});
  }
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    for (const auto& bar : layouts) {
      const std::size_t table_k = bar.i > bar.j ? bar.k - 1 : bar.k;
      auto table = oracle::interval_table(bar.i, bar.j, table_k, bar.left_closed, bar.right_closed, m);
      o.expect(ap1_dimensions(bar, m) == table, bar.to_string() + " table row");
      auto rep = synthesize_model(bar, m, f);
      o.expect(rep.dimension_vector() == table, bar.to_string() + " model dimensions");
      auto [want_dk, want_dck] = oracle::interval_dk_dck(bar.left_closed, bar.right_closed);
      o.expect(dk(rep) == want_dk && dck(rep) == want_dck, bar.to_string() + " dk/dck over " + f.spec());
    }
    for (long lambda : {1, 2}) {
      for (std::size_t size : {1u, 2u}) {
        auto rep = synthesize_model(GeneralizedJordanBlock{Polynomial::linear(f, lambda), size}, m);
        auto [want_dk, want_dck] = oracle::jordan_dk_dck(lambda == 1);
        o.expect(dk(rep) == want_dk && dck(rep) == want_dck, "cell x-" + std::to_string(lambda) + " dk/dck");
        auto back = decompose(rep);
        o.expect(back.bars.empty() && back.jordan.size() == 1 && back.jordan[0].size == size, "cell recovered");
      }
    }
  }
}

void random_sums(Outcome& o) {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 100; ++trial) {
    const Field& f = fields()[static_cast<std::size_t>(trial) % 3];
    const std::size_t m = 1 + static_cast<std::size_t>(trial) % 4;
    Decomposition expected;
    CyclicQuiverRep sum = CyclicQuiverRep::zero(f, m);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int piece = 0; piece < 6; ++piece) {
      CyclicQuiverRep next;
      if (pick(rng) == 0) {
        std::vector<long> roots{1, 2, 3};
        long lambda = roots[static_cast<std::size_t>(pick(rng)) % roots.size()];
        if (char_of(f) == 2) lambda = 1;
        GeneralizedJordanBlock cell{Polynomial::linear(f, lambda), static_cast<std::size_t>(1 + pick(rng) % 2)};
        if (f.is_rationals() && pick(rng) == 1) {
          auto x = Polynomial::x(f);
          cell.factor = x * x + Polynomial::constant(f, 1);
        }
        next = synthesize_model(cell, m);
        if (sum.total_dim() + next.total_dim() > 40) break;
        expected.jordan.push_back(cell);
      } else {
        auto bar = oracle::random_bar(m, 2, rng);
        next = synthesize_model(bar, m, f);
        if (sum.total_dim() + next.total_dim() > 40) break;
        expected.bars.push_back(bar);
      }
      sum = sum.direct_sum(next);
    }
    std::sort(expected.bars.begin(), expected.bars.end());
    std::sort(expected.jordan.begin(), expected.jordan.end());
    auto scrambled = oracle::scramble(sum, rng);
    for (auto order : {PivotOrder::kLowestFirst, PivotOrder::kHighestFirst}) {
      Decomposition got;
      try {
        got = decompose(scrambled, DecomposeOptions{order});
      } catch (const std::exception& e) {
        o.expect(false, "trial " + std::to_string(trial) + " threw " + e.what());
        continue;
      }
      std::sort(got.bars.begin(), got.bars.end());
      std::sort(got.jordan.begin(), got.jordan.end());
      o.expect(got == expected, "trial " + std::to_string(trial) + (order == PivotOrder::kLowestFirst ? "" : " reversed"));
    }
  }
}

/// Rotates every component so that its lowest vertex sits at angle zero.
PLCircleMap normalized(const PLCircleMap& map) {
  const auto verts = map.complex().vertices();
  std::vector<int> parent(verts.empty() ? 0 : static_cast<std::size_t>(verts.back()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };
  if (map.complex().dimension() >= 1)
    for (const auto& e : map.complex().simplices(1)) {
      int a = root(e[0]), b = root(e[1]);
      parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<Scalar> angles = map.angles();
  for (int v : verts) angles[static_cast<std::size_t>(v)] = mod_one(map.angle(v) - map.angle(root(v)));
  std::map<std::pair<int, int>, Scalar> lifts = map.edge_lifts();
  return PLCircleMap::create(map.complex(), angles, lifts);
}

void cocycles(Outcome& o, const std::vector<MapFixture>& all) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(1, 9), den(1, 7);
  for (const auto& fx : all) {
    const int top = std::min(2, fx.map.complex().dimension());
    auto [c, alpha] = circle_map_to_cocycle(fx.map);
    auto back = cocycle_to_circle_map(c, AlmostIntegralWitness{false, alpha, {}});
    o.expect(back.edge_lifts() == fx.map.edge_lifts(), fx.name + " lifts");
    auto want = compute_invariants(normalized(fx.map), Field::rationals(), 0, top);
    o.expect(compute_invariants(back, Field::rationals(), 0, top) == want, fx.name + " round trip");
  }
  std::vector<const MapFixture*> winding;
  for (const auto& fx : all)
    if (!period_alpha(circle_map_to_cocycle(fx.map).first).exact) winding.push_back(&fx);
  for (int i = 0; i < 10 && !winding.empty(); ++i) {
    const MapFixture& fx = *winding[static_cast<std::size_t>(i) % winding.size()];
    Scalar scale(num(rng), den(rng));
    scale.canonicalize();
    auto c = circle_map_to_cocycle(fx.map).first;
    auto base = period_alpha(c);
    auto scaled = period_alpha(c.scaled(scale));
    o.expect(scaled.alpha == base.alpha * scale, fx.name + " period scales by " + fraction_string(scale));
    auto m1 = cocycle_to_circle_map(c, base), m2 = cocycle_to_circle_map(c.scaled(scale), scaled);
    o.expect(m1.angles() == m2.angles() && m1.edge_lifts() == m2.edge_lifts(), fx.name + " scaled map");
    const int top = std::min(2, fx.map.complex().dimension());
    o.expect(compute_invariants(m1, Field::rationals(), 0, top) == compute_invariants(m2, Field::rationals(), 0, top),
             fx.name + " scaled invariants");
  }
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  bool all_pass = true;
  auto report = [&](int n, const std::string& title, Outcome& o, double seconds) {
    all_pass = all_pass && o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << " (" << o.checks
              << " checks, " << static_cast<long>(seconds * 1000) / 1000.0 << " s)";
    if (!o.pass) std::cout << "  " << o.notes.str();
    std::cout << std::endl;
  };
  auto timed = [&](int n, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    report(n, title, o, std::chrono::duration<double>(clock::now() - t0).count());
  };

  timed(1, "figure2 fixture over Q and Z/5", figure2);
  timed(2, "Jordan cells of the 3x3 example", jordan_example);
  timed(3, "torus, Klein bottle and degree-3 mapping torus", classical);

  const auto all = corpus();
  std::vector<Case> cases;
  double setup = 0;
  {
    auto t0 = clock::now();
    cases = build_cases(all);
    setup = std::chrono::duration<double>(clock::now() - t0).count();
  }
  {
    Outcome o;
    auto t0 = clock::now();
    try {
      fiber_counts(o, cases);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    double seconds = setup + std::chrono::duration<double>(clock::now() - t0).count();
    o.expect(seconds < 300, "over the time budget");
    report(4, "fiber betti numbers on " + std::to_string(all.size()) + " complexes x 3 fields", o, seconds);
  }
  timed(5, "monodromy counts and eqf on the same corpus", [&](Outcome& o) { monodromy_counts(o, cases); });
  timed(6, "quiver, covering and sublevel routes agree", [&](Outcome& o) { routes(o, cases); });
  timed(7, "interval and Jordan models against the tables", tables);
  timed(8, "100 random sums of models recovered", random_sums);
  timed(9, "cocycle round trip and period scaling", [&](Outcome& o) { cocycles(o, all); });
  return all_pass ? 0 : 1;
}
