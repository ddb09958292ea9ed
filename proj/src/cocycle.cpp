#include "circpers/cocycle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace circpers {

OneCocycle OneCocycle::create(SimplicialComplex complex, const std::map<std::pair<int, int>, Scalar>& values) {
  OneCocycle c;
  for (const auto& [e, v] : values) {
    auto [u, w] = e;
    if (u == w) throw InputError("cocycle value on a degenerate edge " + std::to_string(u));
    Simplex edge{std::min(u, w), std::max(u, w)};
    if (!complex.contains(edge)) {
      throw InputError("cocycle value on (" + std::to_string(u) + "," + std::to_string(w) + ") which is not an edge");
    }
    Scalar canon = u < w ? v : Scalar(-v);
    auto [it, fresh] = c.values_.emplace(std::make_pair(edge[0], edge[1]), canon);
    if (!fresh && it->second != canon) {
      throw InputError("values on (" + std::to_string(u) + "," + std::to_string(w) + ") are not antisymmetric");
    }
  }
  for (const auto& e : complex.simplices(1)) {
    if (!c.values_.count({e[0], e[1]}))
      throw InputError("no value on edge (" + std::to_string(e[0]) + "," + std::to_string(e[1]) + ")");
  }
  if (complex.dimension() >= 2) {
    for (const auto& t : complex.simplices(2)) {
      Scalar sum = c.values_.at({t[0], t[1]}) + c.values_.at({t[1], t[2]}) - c.values_.at({t[0], t[2]});
      if (sum != 0) {
        throw InputError("cocycle condition fails on triangle (" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                         "," + std::to_string(t[2]) + "): sum " + fraction_string(sum));
      }
    }
  }
  c.complex_ = std::move(complex);
  return c;
}

Scalar OneCocycle::value(int u, int v) const {
  if (u == v) return 0;
  if (u < v) return values_.at({u, v});
  return -values_.at({v, u});
}

OneCocycle OneCocycle::scaled(const Scalar& c) const {
  OneCocycle out = *this;
  for (auto& [e, v] : out.values_) v *= c;
  return out;
}

namespace {

struct Forest {
  std::map<int, Scalar> potential;
  std::vector<std::pair<int, int>> non_tree;  // u < v
};

Forest spanning_forest(const OneCocycle& c) {
  const SimplicialComplex& k = c.complex();
  std::map<int, std::vector<int>> adj;
  for (int v : k.vertices()) adj[v];
  if (k.dimension() >= 1)
    for (const auto& e : k.simplices(1)) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
  Forest f;
  std::set<std::pair<int, int>> tree;
  for (const auto& [root, nbrs] : adj) {
    if (f.potential.count(root)) continue;
    f.potential[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (f.potential.count(w)) continue;
        f.potential[w] = f.potential[u] + c.value(u, w);
        tree.insert({std::min(u, w), std::max(u, w)});
        queue.push_back(w);
      }
    }
  }
  if (k.dimension() >= 1)
    for (const auto& e : k.simplices(1))
      if (!tree.count({e[0], e[1]})) f.non_tree.emplace_back(e[0], e[1]);
  return f;
}

Scalar rational_gcd(const std::vector<Scalar>& xs) {
  mpz_class den = 1;
  for (const auto& x : xs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& x : xs) {
    mpz_class n = abs(x.get_num() * (den / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Scalar out(g, den);
  out.canonicalize();
  return out;
}

}  // namespace

AlmostIntegralWitness period_alpha(const OneCocycle& c) {
  Forest f = spanning_forest(c);
  AlmostIntegralWitness w;
  std::vector<Scalar> nonzero;
  for (auto [u, v] : f.non_tree) {
    Scalar h = f.potential.at(u) + c.value(u, v) - f.potential.at(v);
    w.holonomies.push_back(h);
    if (h != 0) nonzero.push_back(h);
  }
  if (nonzero.empty()) {
    // exact: twice the potential range
    w.exact = true;
    Scalar lo = 0, hi = 0;
    for (const auto& [v, p] : f.potential) {
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    w.alpha = hi > lo ? Scalar(2 * (hi - lo)) : Scalar(1);
    return w;
  }
  w.alpha = rational_gcd(nonzero);
  return w;
}

PLCircleMap cocycle_to_circle_map(const OneCocycle& c, const AlmostIntegralWitness& w) {
  if (w.alpha <= 0) throw InputError("period must be positive");
  Forest f = spanning_forest(c);
  for (auto [u, v] : f.non_tree) {
    Scalar q = (f.potential.at(u) + c.value(u, v) - f.potential.at(v)) / w.alpha;
    if (q.get_den() != 1) throw InputError("holonomy " + fraction_string(q * w.alpha) + " is not a multiple of the period");
  }
  std::vector<Scalar> angles;
  for (int v : c.complex().vertices()) angles.push_back(mod_one(f.potential.at(v) / w.alpha));
  std::map<std::pair<int, int>, Scalar> lifts;
  for (const auto& [e, val] : c.values()) lifts[e] = val / w.alpha;
  return PLCircleMap::create(c.complex(), std::move(angles), lifts);
}

std::pair<OneCocycle, Scalar> circle_map_to_cocycle(const PLCircleMap& map) {
  std::map<std::pair<int, int>, Scalar> values;
  if (map.complex().dimension() >= 1)
    for (const auto& e : map.complex().simplices(1)) values[{e[0], e[1]}] = map.lift(e[0], e[1]);
  return {OneCocycle::create(map.complex(), values), Scalar(1)};
}

}  // namespace circpers
