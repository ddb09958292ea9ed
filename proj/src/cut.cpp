#include <algorithm>
#include <set>
#include <tuple>

#include "circpers/complex.hpp"

namespace circpers {

namespace {

struct CutPoint {
  Scalar value;  // lifted value in the frame of the simplex being cut
  int id;        // derived vertex id
  bool crossing;
  Vector bary;
};

bool pulls_before(const CutPoint& a, const CutPoint& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.crossing != b.crossing) return !a.crossing;
  return a.id < b.id;
}

std::size_t affine_dim(const std::vector<const CutPoint*>& pts) {
  if (pts.empty()) return 0;
  const Field q = Field::rationals();
  const std::size_t width = pts[0]->bary.size();
  FieldMatrix diffs(q, pts.size() - 1, width);
  for (std::size_t r = 1; r < pts.size(); ++r)
    for (std::size_t c = 0; c < width; ++c) diffs.set(r - 1, c, pts[r]->bary[c] - pts[0]->bary[c]);
  return rank(diffs);
}

/// A supporting hyperplane: bary[coord] == 0, or value == level.
struct Hyperplane {
  bool on_value;
  std::size_t coord;
  Scalar level;
  bool contains(const CutPoint& p) const { return on_value ? p.value == level : sgn(p.bary[coord]) == 0; }
};

/// Pulling triangulation of the convex hull of pts (all in convex position),
/// which has affine dimension k. pts must be sorted by pulls_before.
void pull(const std::vector<const CutPoint*>& pts, std::size_t k, const std::vector<Hyperplane>& planes,
          std::vector<std::vector<int>>& out) {
  if (pts.size() == k + 1) {
    std::vector<int> s;
    for (const auto* p : pts) s.push_back(p->id);
    out.push_back(std::move(s));
    return;
  }
  const CutPoint* apex = pts[0];
  std::set<std::vector<int>> seen;
  for (const auto& h : planes) {
    if (h.contains(*apex)) continue;
    std::vector<const CutPoint*> facet;
    for (const auto* p : pts)
      if (h.contains(*p)) facet.push_back(p);
    if (facet.size() < k) continue;
    std::vector<int> ids;
    for (const auto* p : facet) ids.push_back(p->id);
    if (!seen.insert(ids).second) continue;
    if (affine_dim(facet) != k - 1) continue;
    std::vector<std::vector<int>> sub;
    pull(facet, k - 1, planes, sub);
    for (auto& s : sub) {
      s.insert(s.begin(), apex->id);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

bool CutComplex::is_level(const Scalar& t) const {
  return std::binary_search(levels.begin(), levels.end(), mod_one(t));
}

Simplex CutComplex::carrier(const Simplex& derived_simplex) const {
  std::set<int> support;
  for (int v : derived_simplex) {
    const auto& [a, b] = origin.at(static_cast<std::size_t>(v));
    support.insert(a);
    support.insert(b);
  }
  return Simplex(support.begin(), support.end());
}

CutComplex cut_at_levels(const PLCircleMap& map, const std::vector<Scalar>& levels) {
  const SimplicialComplex& k = map.complex();
  CutComplex cut;
  std::set<Scalar> level_set;
  for (const auto& l : levels) level_set.insert(mod_one(l));
  cut.levels.assign(level_set.begin(), level_set.end());
  for (int v : k.vertices()) {
    if (level_set.count(map.angle(v))) {
      throw InputError("cut level " + map.angle(v).get_str() + " coincides with the angle of vertex " + std::to_string(v));
    }
  }

  const std::size_t n = map.angles().size();
  cut.original_vertex_count = n;
  std::vector<Scalar> angles = map.angles();
  cut.origin.resize(n);
  for (std::size_t v = 0; v < n; ++v) cut.origin[v] = {static_cast<int>(v), static_cast<int>(v)};

  auto crossings_between = [&](const Scalar& lo, const Scalar& hi) {
    // values c with lo < c < hi and c mod 1 a level
    std::vector<Scalar> out;
    if (lo >= hi) return out;
    Scalar base = floor_of(lo);
    for (Scalar shift = base; shift <= hi; shift += 1)
      for (const auto& l : cut.levels) {
        Scalar c = shift + l;
        if (c > lo && c < hi) out.push_back(c);
      }
    std::sort(out.begin(), out.end());
    return out;
  };

  // crossing vertices, keyed by (a, b, value in the frame F(a) = angle(a))
  std::map<std::tuple<int, int, Scalar>, int> crossing_id;
  for (const auto& e : k.simplices(1)) {
    Scalar from = map.angle(e[0]);
    Scalar to = from + map.lift(e[0], e[1]);
    for (const auto& c : crossings_between(std::min(from, to), std::max(from, to))) {
      int id = static_cast<int>(angles.size());
      crossing_id.emplace(std::make_tuple(e[0], e[1], c), id);
      angles.push_back(mod_one(c));
      cut.origin.emplace_back(e[0], e[1]);
    }
  }

  std::vector<Simplex> pieces;
  std::map<std::pair<int, int>, Scalar> lifts;
  for (const auto& sigma : k.maximal_simplices()) {
    const std::size_t d = sigma.size() - 1;
    std::vector<Scalar> val = map.frame_values(sigma);
    std::vector<CutPoint> pts;
    for (std::size_t i = 0; i <= d; ++i) {
      Vector b(d + 1);
      b[i] = 1;
      pts.push_back({val[i], sigma[i], false, std::move(b)});
    }
    std::set<Scalar> cuts;
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = i + 1; j <= d; ++j) {
        for (const auto& c : crossings_between(std::min(val[i], val[j]), std::max(val[i], val[j]))) {
          Scalar local = c - val[i] + map.angle(sigma[i]);
          auto it = crossing_id.find({sigma[i], sigma[j], local});
          if (it == crossing_id.end()) throw InternalError("crossing missing from edge table");
          Vector b(d + 1);
          Scalar t = (c - val[i]) / (val[j] - val[i]);
          b[i] = 1 - t;
          b[j] = t;
          pts.push_back({c, it->second, true, std::move(b)});
          cuts.insert(c);
        }
      }
    }
    std::sort(pts.begin(), pts.end(), pulls_before);

    std::vector<std::optional<Scalar>> bounds{std::nullopt};
    for (const auto& c : cuts) bounds.emplace_back(c);
    bounds.emplace_back(std::nullopt);
    for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
      const auto& lo = bounds[s];
      const auto& hi = bounds[s + 1];
      std::vector<const CutPoint*> slab;
      for (const auto& p : pts) {
        bool above = !lo || (p.crossing ? p.value >= *lo : p.value > *lo);
        bool below = !hi || (p.crossing ? p.value <= *hi : p.value < *hi);
        if (p.crossing && !((lo && p.value == *lo) || (hi && p.value == *hi))) continue;
        if (above && below) slab.push_back(&p);
      }
      if (slab.empty()) continue;
      std::vector<Hyperplane> planes;
      for (std::size_t x = 0; x <= d; ++x) planes.push_back({false, x, Scalar(0)});
      if (lo) planes.push_back({true, 0, *lo});
      if (hi) planes.push_back({true, 0, *hi});
      std::size_t dim = affine_dim(slab);
      std::vector<std::vector<int>> tops;
      pull(slab, dim, planes, tops);
      for (auto& top : tops) {
        for (std::size_t a = 0; a < top.size(); ++a) {
          for (std::size_t b = a + 1; b < top.size(); ++b) {
            const CutPoint* pa = nullptr;
            const CutPoint* pb = nullptr;
            for (const auto* p : slab) {
              if (p->id == top[a]) pa = p;
              if (p->id == top[b]) pb = p;
            }
            int u = std::min(pa->id, pb->id), w = std::max(pa->id, pb->id);
            Scalar l = (u == pa->id) ? Scalar(pb->value - pa->value) : Scalar(pa->value - pb->value);
            auto [it, fresh] = lifts.emplace(std::make_pair(u, w), l);
            if (!fresh && it->second != l) throw InternalError("derived edge lifts disagree between simplices");
          }
        }
        pieces.push_back(std::move(top));
      }
    }
  }

  SimplicialComplex derived = SimplicialComplex::from_simplices(pieces);
  cut.derived = PLCircleMap::create(std::move(derived), std::move(angles), lifts);
  return cut;
}

}  // namespace circpers
