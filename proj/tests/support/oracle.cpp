#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace oracle {

using circpers::Field;
using circpers::FieldMatrix;

namespace {

Scalar reduce(const Scalar& x, unsigned long p) {
  if (p == 0) return x;
  mpz_class num = x.get_num() % p, den = x.get_den() % p;
  if (num < 0) num += p;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
  mpz_class v = num * inv % p;
  return Scalar(v);
}

Scalar floor_of(const Scalar& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Scalar(q);
}

std::vector<std::vector<Scalar>> boundary(const std::vector<std::vector<int>>& low,
                                          const std::vector<std::vector<int>>& high) {
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < low.size(); ++i) index[low[i]] = i;
  std::vector<std::vector<Scalar>> rows(low.size(), std::vector<Scalar>(high.size()));
  for (std::size_t j = 0; j < high.size(); ++j)
    for (std::size_t drop = 0; drop < high[j].size(); ++drop) {
      std::vector<int> face = high[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      rows[index.at(face)][j] = drop % 2 == 0 ? 1 : -1;
    }
  return rows;
}

}  // namespace

std::size_t rank(std::vector<std::vector<Scalar>> rows, unsigned long p) {
  if (rows.empty()) return 0;
  for (auto& row : rows)
    for (auto& x : row) x = reduce(x, p);
  const std::size_t nc = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Scalar factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < nc; ++k) rows[i][k] = reduce(rows[i][k] - factor * rows[r][k], p);
    }
    ++r;
  }
  return r;
}

std::size_t betti(const std::vector<std::vector<int>>& generators, int r, unsigned long p) {
  std::set<std::vector<int>> all;
  for (auto g : generators) {
    std::sort(g.begin(), g.end());
    const std::size_t n = g.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> face;
      for (std::size_t b = 0; b < n; ++b)
        if (mask >> b & 1) face.push_back(g[b]);
      all.insert(face);
    }
  }
  std::vector<std::vector<std::vector<int>>> by_dim;
  for (const auto& s : all) {
    if (by_dim.size() < s.size()) by_dim.resize(s.size());
    by_dim[s.size() - 1].push_back(s);
  }
  auto cells = [&](int d) -> const std::vector<std::vector<int>>& {
    static const std::vector<std::vector<int>> none;
    return d >= 0 && static_cast<std::size_t>(d) < by_dim.size() ? by_dim[static_cast<std::size_t>(d)] : none;
  };
  auto boundary_rank = [&](int d) -> std::size_t {
    if (d <= 0 || cells(d).empty() || cells(d - 1).empty()) return 0;
    return rank(boundary(cells(d - 1), cells(d)), p);
  };
  return cells(r).size() - boundary_rank(r) - boundary_rank(r + 1);
}

std::size_t betti(const circpers::SimplicialComplex& k, int r, unsigned long p) {
  return betti(k.maximal_simplices(), r, p);
}

std::size_t fiber_betti(const circpers::PLCircleMap& map, const Scalar& theta, int r, unsigned long p) {
  // vertices: crossings (u, v, value in the frame of u) with u < v
  std::map<std::tuple<int, int, Scalar>, int> crossing;
  auto id_of = [&](int u, int v, const Scalar& value) {
    auto key = std::make_tuple(u, v, value);
    auto it = crossing.find(key);
    if (it != crossing.end()) return it->second;
    int id = static_cast<int>(crossing.size());
    crossing.emplace(key, id);
    return id;
  };
  std::vector<std::vector<int>> generators;
  for (const auto& s : map.complex().maximal_simplices()) {
    if (s.size() < 2) continue;
    std::vector<Scalar> val;
    for (int v : s) val.push_back(map.angle(s[0]) + map.lift(s[0], v));
    Scalar lo = *std::min_element(val.begin(), val.end()), hi = *std::max_element(val.begin(), val.end());
    Scalar th = theta - floor_of(theta);
    for (Scalar c = floor_of(lo) + th - 1; c < hi; c += 1) {
      if (c <= lo) continue;
      std::vector<std::size_t> below, above;
      for (std::size_t i = 0; i < s.size(); ++i) (val[i] < c ? below : above).push_back(i);
      // staircase triangulation of below x above: monotone lattice paths
      const std::size_t a = below.size(), b = above.size(), steps = a + b - 2;
      for (std::size_t mask = 0; mask < (std::size_t{1} << steps); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != a - 1) continue;
        std::vector<int> simplex;
        std::size_t x = 0, y = 0;
        for (std::size_t t = 0;; ++t) {
          int u = s[below[x]], v = s[above[y]];
          Scalar at_u = c - val[below[x]] + map.angle(u);
          Scalar at_v = c - val[above[y]] + map.angle(v);
          simplex.push_back(u < v ? id_of(u, v, at_u) : id_of(v, u, at_v));
          if (t == steps) break;
          if (mask >> t & 1) ++x;
          else ++y;
        }
        generators.push_back(simplex);
      }
    }
  }
  if (generators.empty()) return 0;
  return betti(generators, r, p);
}

std::vector<std::size_t> interval_table(std::size_t i, std::size_t j, std::size_t k, bool lc, bool rc, std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t l = 1; l <= m; ++l) {
    std::size_t n, d;
    if (i <= j) {
      n = (i + 1 <= l && l <= j) ? k + 1 : k;
      if (lc && rc) d = (i <= l && l <= j) ? k + 1 : k;
      else if (!lc && rc) d = (i + 1 <= l && l <= j) ? k + 1 : k;
      else if (lc && !rc) d = (i <= l && l + 1 <= j) ? k + 1 : k;
      else d = (i + 1 <= l && l + 1 <= j) ? k + 1 : k;
    } else {
      n = (j + 1 <= l && l <= i) ? k : k + 1;
      if (lc && rc) d = (j + 1 <= l && l + 1 <= i) ? k : k + 1;
      else if (!lc && rc) d = (j + 1 <= l && l <= i) ? k : k + 1;
      else if (lc && !rc) d = (j <= l && l + 1 <= i) ? k : k + 1;
      else d = (j <= l && l <= i) ? k : k + 1;
    }
    out.push_back(n);
    out.push_back(d);
  }
  return out;
}

std::vector<std::size_t> spiral_dimensions(const circpers::CircleBarCode& bar, std::size_t m) {
  // in units of 1/(2m) turn: s_l = 2l, t_l = 2l - 1
  const long a = 2 * static_cast<long>(bar.i), b = 2 * static_cast<long>(bar.j + bar.k * m);
  const long turn = 2 * static_cast<long>(m);
  auto inside = [&](long x) {
    return (x > a || (x == a && bar.left_closed)) && (x < b || (x == b && bar.right_closed));
  };
  std::vector<std::size_t> out;
  for (long l = 1; l <= static_cast<long>(m); ++l) {
    std::size_t n = 0, d = 0;
    for (long q = -1; 2 * l + q * turn <= b + turn; ++q) {
      if (inside(2 * l - 1 + q * turn)) ++n;
      if (inside(2 * l + q * turn)) ++d;
    }
    out.push_back(n);
    out.push_back(d);
  }
  return out;
}

std::pair<std::size_t, std::size_t> interval_dk_dck(bool lc, bool rc) {
  if (lc && rc) return {0, 1};
  if (!lc && !rc) return {1, 0};
  return {0, 0};
}

std::pair<std::size_t, std::size_t> jordan_dk_dck(bool unipotent) { return unipotent ? std::pair{1, 1} : std::pair{0, 0}; }

namespace {

FieldMatrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-2, 2);
  for (;;) {
    FieldMatrix a(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a.set(r, c, f.canon(Scalar(entry(rng))));
    if (auto inv = circpers::inverse(a)) return a;
  }
}

}  // namespace

circpers::CyclicQuiverRep scramble(const circpers::CyclicQuiverRep& rep, std::mt19937_64& rng) {
  const Field& f = rep.field;
  const std::size_t m = rep.m;
  std::vector<FieldMatrix> pn, pd;
  for (std::size_t i = 0; i < m; ++i) {
    pn.push_back(random_invertible(f, rep.n[i], rng));
    pd.push_back(random_invertible(f, rep.d[i], rng));
  }
  circpers::CyclicQuiverRep out = rep;
  for (std::size_t i = 0; i < m; ++i) {
    out.alpha[i] = pd[i] * rep.alpha[i] * *circpers::inverse(pn[i]);
    out.beta[i] = pd[i] * rep.beta[i] * *circpers::inverse(pn[(i + 1) % m]);
  }
  return out;
}

circpers::CircleBarCode random_bar(std::size_t m, std::size_t max_k, std::mt19937_64& rng) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  for (;;) {
    circpers::CircleBarCode bar;
    bar.i = pick(1, m);
    bar.j = pick(1, m);
    bar.k = pick(0, max_k);
    bar.left_closed = pick(0, 1) == 1;
    bar.right_closed = pick(0, 1) == 1;
    if (bar.valid(m)) return bar;
  }
}

}  // namespace oracle
