#include "circpers/fixtures.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace circpers {

namespace {

std::size_t dense_rank(std::vector<Vector> rows, const Field& f) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    Scalar inv = f.inv(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      Scalar factor = f.mul(rows[r][c], inv);
      for (std::size_t j = c; j < ncols; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

/// rank of the boundary C_d -> C_{d-1}
std::size_t boundary_rank(const SimplicialComplex& k, int d, const Field& f) {
  if (d <= 0 || d > k.dimension()) return 0;
  const auto& faces = k.simplices(d - 1);
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < faces.size(); ++i) index[faces[i]] = i;
  std::vector<Vector> rows;
  for (const auto& s : k.simplices(d)) {
    Vector row(faces.size(), Scalar(0));
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      row[index.at(face)] = f.canon(Scalar(i % 2 == 0 ? 1 : -1));
    }
    rows.push_back(std::move(row));
  }
  return dense_rank(std::move(rows), f);
}

}  // namespace

std::size_t brute_force_homology(const SimplicialComplex& k, int r, Field field) {
  if (r < 0 || r > k.dimension()) return 0;
  return k.count(r) - boundary_rank(k, r, field) - boundary_rank(k, r + 1, field);
}

// ---------------------------------------------------------------------------

namespace {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

Graph cycle_graph(int n) {
  Graph g{n, {}};
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

/// from_upper: the link maps layer l + 1 into layer l.
struct Link {
  bool from_upper = false;
  std::vector<int> image;
};

Link identity_link(int n) {
  Link l;
  for (int i = 0; i < n; ++i) l.image.push_back(i);
  return l;
}

MapFixture layered_torus(const std::string& name, const std::vector<Graph>& layers, const std::vector<Link>& links) {
  const int count = static_cast<int>(layers.size());
  std::vector<int> offset{0};
  for (const auto& g : layers) offset.push_back(offset.back() + g.n);
  std::vector<Simplex> simplices;
  std::vector<Scalar> angles;
  for (int l = 0; l < count; ++l) {
    Scalar a(l, count);
    a.canonicalize();
    for (int i = 0; i < layers[l].n; ++i) angles.push_back(a);
    for (auto [x, y] : layers[l].edges) simplices.push_back({offset[l] + x, offset[l] + y});
  }
  for (int l = 0; l < count; ++l) {
    const int up = (l + 1) % count;
    const Link& link = links[l];
    int src = link.from_upper ? up : l, dst = link.from_upper ? l : up;
    auto a = [&](int x) { return offset[src] + x; };
    auto b = [&](int y) { return offset[dst] + y; };
    for (auto [x, y] : layers[src].edges) {
      int gx = link.image[x], gy = link.image[y];
      if (gx == gy) {
        simplices.push_back({a(x), a(y), b(gx)});
      } else {
        simplices.push_back({a(x), a(y), b(gy)});
        simplices.push_back({a(x), b(gx), b(gy)});
      }
    }
  }
  for (auto& s : simplices) std::sort(s.begin(), s.end());
  return {name, PLCircleMap::create(SimplicialComplex::from_simplices(simplices), std::move(angles))};
}

}  // namespace

MapFixture mapping_torus_fixture(Monodromy kind, int degree) {
  switch (kind) {
    case Monodromy::kIdentity: {
      Graph c = cycle_graph(3);
      return layered_torus("torus", {c, c, c, c}, {identity_link(3), identity_link(3), identity_link(3), identity_link(3)});
    }
    case Monodromy::kReflection: {
      Graph c = cycle_graph(3);
      Link flip{false, {0, 2, 1}};
      return layered_torus("klein", {c, c, c, c}, {identity_link(3), identity_link(3), identity_link(3), flip});
    }
    case Monodromy::kDegree: {
      if (degree < 1) throw InputError("degree must be positive");
      Graph big = cycle_graph(3 * degree), small = cycle_graph(3);
      Link wrap{false, {}}, collapse{true, {}};
      for (int i = 0; i < 3 * degree; ++i) {
        wrap.image.push_back(i % 3);
        collapse.image.push_back(i / degree);
      }
      return layered_torus("degree" + std::to_string(degree), {big, small, big, big},
                           {wrap, collapse, identity_link(3 * degree), identity_link(3 * degree)});
    }
    case Monodromy::kShear: {
      // wedge of loops a = (0 1 2) and b = (0 3 4); the subdivided copy has b = (0 3 4 5 6 7)
      Graph wedge{5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}};
      Graph fine{8, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}}};
      Link shear{true, {0, 1, 2, 3, 4, 0, 1, 2}};
      Link collapse{false, {0, 1, 2, 3, 4, 0, 0, 0}};
      return layered_torus("shear", {wedge, fine, wedge, wedge}, {shear, collapse, identity_link(5), identity_link(5)});
    }
  }
  throw InputError("unknown monodromy");
}

MapFixture winding_triangle() {
  return {"winding_triangle", PLCircleMap::create(build_complex({{0, 1}, {1, 2}, {0, 2}}),
                                                  {Scalar(0), Scalar(1, 3), Scalar(2, 3)})};
}

MapFixture two_winding_triangles() {
  return {"two_winding_triangles",
          PLCircleMap::create(build_complex({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}),
                              {Scalar(0), Scalar(1, 3), Scalar(2, 3), Scalar(1, 6), Scalar(1, 2), Scalar(5, 6)})};
}

MapFixture sphere_over_arc() {
  std::vector<std::vector<int>> tris;
  for (int i = 0; i < 4; ++i) {
    int a = 1 + i, b = 1 + (i + 1) % 4;
    tris.push_back({0, a, b});
    tris.push_back({5, a, b});
  }
  std::vector<Scalar> angles{Scalar(1, 10), Scalar(1, 5), Scalar(1, 5), Scalar(1, 5), Scalar(1, 5), Scalar(3, 10)};
  return {"sphere_over_arc", PLCircleMap::create(build_complex(tris), angles)};
}

MapFixture random_map_fixture(std::uint64_t seed, const RandomOptions& opt) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = uniform(opt.min_vertices, opt.max_vertices);
  std::vector<Scalar> angles;
  for (int v = 0; v < n; ++v) {
    Scalar a(uniform(0, opt.denominator - 1), opt.denominator);
    a.canonicalize();
    angles.push_back(a);
  }
  auto arc = [&](int u, int v) { return shortest_arc(angles[static_cast<std::size_t>(u)], angles[static_cast<std::size_t>(v)]); };
  auto flat = [&](const Simplex& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        for (std::size_t c = b + 1; c < s.size(); ++c)
          if (arc(s[a], s[b]) + arc(s[b], s[c]) - arc(s[a], s[c]) != 0) return false;
    return true;
  };

  std::vector<Simplex> chosen;
  SimplicialComplex current;
  const int attempts = uniform(n, 3 * n);
  for (int t = 0; t < attempts; ++t) {
    int size = uniform(2, std::min(opt.max_dim + 1, n));
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v;
    std::shuffle(verts.begin(), verts.end(), rng);
    Simplex s(verts.begin(), verts.begin() + size);
    std::sort(s.begin(), s.end());
    if (!flat(s)) continue;
    chosen.push_back(s);
    SimplicialComplex next = SimplicialComplex::from_simplices(chosen);
    if (next.size() + static_cast<std::size_t>(n) > opt.max_simplices) {
      chosen.pop_back();
      continue;
    }
    current = std::move(next);
  }
  for (int v = 0; v < n; ++v) chosen.push_back({v});
  current = SimplicialComplex::from_simplices(chosen);

  // extra turns on edges that bound no triangle
  std::set<std::pair<int, int>> in_triangle;
  if (current.dimension() >= 2)
    for (const auto& tri : current.simplices(2)) {
      in_triangle.insert({tri[0], tri[1]});
      in_triangle.insert({tri[1], tri[2]});
      in_triangle.insert({tri[0], tri[2]});
    }
  std::map<std::pair<int, int>, Scalar> lifts;
  if (current.dimension() >= 1)
    for (const auto& e : current.simplices(1)) {
      if (in_triangle.count({e[0], e[1]})) continue;
      int w = uniform(-opt.max_winding, opt.max_winding);
      if (uniform(0, 2) != 0) w = 0;
      if (w != 0) lifts[{e[0], e[1]}] = arc(e[0], e[1]) + w;
    }
  return {"random" + std::to_string(seed), PLCircleMap::create(std::move(current), std::move(angles), lifts)};
}

std::map<int, CyclicQuiverRep> figure2_representations(Field field) {
  const std::size_t m = 6;
  auto cell = [&](long lambda, std::size_t size) {
    return synthesize_model(GeneralizedJordanBlock{Polynomial::linear(field, Scalar(lambda)), size}, m);
  };
  CyclicQuiverRep one = synthesize_model(CircleBarCode{6, 1, 1, false, true}, m, field);
  one = one.direct_sum(synthesize_model(CircleBarCode{2, 3, 0, true, true}, m, field));
  one = one.direct_sum(synthesize_model(CircleBarCode{4, 5, 0, false, false}, m, field));
  one = one.direct_sum(cell(3, 1)).direct_sum(cell(1, 2));
  return {{0, cell(1, 1)}, {1, one}};
}

}  // namespace circpers
