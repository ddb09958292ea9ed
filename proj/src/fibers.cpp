#include "circpers/fibers.hpp"

#include <algorithm>
#include <set>

namespace circpers {

Simplex Subcomplex::source(const Simplex& local) const {
  Simplex out;
  for (int v : local) out.push_back(keys.at(static_cast<std::size_t>(v)).vertex);
  return out;
}

Subcomplex window_subcomplex(const PLCircleMap& derived, const Scalar& lo, const Scalar& hi) {
  Subcomplex sub;
  sub.lo = lo;
  sub.hi = hi;
  sub.kind = lo == hi ? Subcomplex::Kind::kLevel : Subcomplex::Kind::kWindow;
  const SimplicialComplex& k = derived.complex();
  std::vector<std::vector<VertexKey>> copies;
  std::set<VertexKey> all_keys;
  for (int d = 0; d <= k.dimension(); ++d) {
    for (const auto& s : k.simplices(d)) {
      std::vector<Scalar> val = derived.frame_values(s);
      auto [mn, mx] = std::minmax_element(val.begin(), val.end());
      Scalar first = ceil_of(*mx - hi), last = floor_of(*mn - lo);
      for (Scalar n = first; n <= last; n += 1) {
        std::vector<VertexKey> keys;
        for (std::size_t i = 0; i < s.size(); ++i) {
          keys.push_back({s[i], val[i] - n});
          all_keys.insert(keys.back());
        }
        copies.push_back(std::move(keys));
      }
    }
  }
  sub.keys.assign(all_keys.begin(), all_keys.end());
  for (std::size_t i = 0; i < sub.keys.size(); ++i) sub.lookup.emplace(sub.keys[i], static_cast<int>(i));
  std::vector<Simplex> local;
  local.reserve(copies.size());
  for (const auto& keys : copies) {
    Simplex s;
    for (const auto& key : keys) s.push_back(sub.lookup.at(key));
    local.push_back(std::move(s));
  }
  sub.complex = SimplicialComplex::from_simplices(local);
  return sub;
}

Subcomplex level_subcomplex(const CutComplex& cut, const Scalar& t) {
  if (!cut.is_level(t)) throw InputError("angle " + t.get_str() + " is not a cut level");
  Subcomplex sub = window_subcomplex(cut.derived, t, t);
  sub.kind = Subcomplex::Kind::kLevel;
  return sub;
}

Subcomplex interval_subcomplex(const CutComplex& cut, const CriticalStructure& crit, std::size_t i) {
  const std::size_t m = crit.m();
  if (i < 1 || i > m) throw InputError("interval index " + std::to_string(i) + " out of range 1.." + std::to_string(m));
  Scalar lo = crit.t[i - 1];
  Scalar hi = i < m ? crit.t[i] : crit.t[0] + 1;
  if (!cut.is_level(lo) || !cut.is_level(hi)) throw InputError("interval ends are not cut levels");
  Subcomplex sub = window_subcomplex(cut.derived, lo, hi);
  sub.kind = Subcomplex::Kind::kInterval;
  return sub;
}

// ---------------------------------------------------------------------------

HomologyBasis::HomologyBasis(const SimplicialComplex& k, int r, Field field)
    : r_(r), field_(field), classes_(field) {
  std::vector<SparseVector> cycles;
  if (r == 0) {
    for (std::size_t j = 0; j < k.count(0); ++j) cycles.push_back(SparseVector::unit(j));
  } else {
    Reducer columns(field);
    for (std::size_t j = 0; j < k.count(r); ++j) {
      SparseVector relation;
      if (!columns.insert(k.boundary(r, j, field), SparseVector::unit(j), &relation)) cycles.push_back(std::move(relation));
    }
  }
  for (std::size_t j = 0; j < k.count(r + 1); ++j) classes_.insert(k.boundary(r + 1, j, field));
  for (auto& z : cycles) {
    if (classes_.insert(z, SparseVector::unit(reps_.size()))) reps_.push_back(std::move(z));
  }
}

Vector HomologyBasis::coordinates(const SparseVector& cycle) const {
  Reducer::Result res = classes_.reduce(cycle);
  if (!res.remainder.empty()) throw InternalError("chain is not a cycle of the complex");
  return res.tag.to_dense(rank());
}

FieldMatrix induced_map(const Subcomplex& small, const HomologyBasis& small_basis, const Subcomplex& big,
                        const HomologyBasis& big_basis, const Scalar& shift) {
  const int r = small_basis.degree();
  const Field& f = small_basis.field();
  FieldMatrix out(f, big_basis.rank(), small_basis.rank());
  const auto& small_simplices = small.complex.simplices(r);
  for (std::size_t c = 0; c < small_basis.rank(); ++c) {
    std::vector<std::pair<std::size_t, Scalar>> terms;
    for (const auto& e : small_basis.representatives()[c].entries()) {
      Simplex image;
      for (int v : small_simplices[e.index]) {
        VertexKey key = small.keys[static_cast<std::size_t>(v)];
        key.level += shift;
        auto it = big.lookup.find(key);
        if (it == big.lookup.end()) throw InputError("inclusion violated: vertex missing from the larger subcomplex");
        image.push_back(it->second);
      }
      std::sort(image.begin(), image.end());
      auto idx = big.complex.find(image);
      if (!idx) throw InputError("inclusion violated: simplex missing from the larger subcomplex");
      terms.emplace_back(*idx, e.value);
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector chain;
    for (const auto& [i, v] : terms) chain.push_back(i, v);
    out.set_column(c, big_basis.coordinates(chain));
  }
  return out;
}

std::size_t betti(const SimplicialComplex& k, int r, Field field) { return HomologyBasis(k, r, field).rank(); }

// ---------------------------------------------------------------------------

FiberMinor fiber_minor(const PLCircleMap& map, const Scalar& theta) {
  const SimplicialComplex& k = map.complex();
  const Scalar th = mod_one(theta);
  std::vector<int> at_theta;
  for (int v : k.vertices())
    if (map.angle(v) == th) at_theta.push_back(v);
  if (at_theta.size() > 1) throw InputError("two or more vertices lie at the fiber angle");

  struct Cell {
    Simplex simplex;  // empty for the vertex cell
    Scalar value;     // crossing value in the simplex frame
    int dim;
  };
  std::vector<Cell> cells;
  if (!at_theta.empty()) cells.push_back({Simplex{}, Scalar(0), 0});
  for (const auto& s : k.ordered()) {
    if (s.size() < 2) continue;
    std::vector<Scalar> val = map.frame_values(s);
    auto [mn, mx] = std::minmax_element(val.begin(), val.end());
    for (Scalar c = floor_of(*mn) + th; c < *mx; c += 1)
      if (c > *mn) cells.push_back({s, c, static_cast<int>(s.size()) - 2});
  }

  FiberMinor out;
  const Field z2 = Field::prime(2);
  out.incidence.matrix = FieldMatrix(z2, cells.size(), cells.size());
  for (const auto& c : cells) {
    out.incidence.order.push_back(c.simplex);
    out.cell_dims.push_back(c.dim);
  }
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const Cell& big = cells[j];
    if (big.simplex.empty()) continue;
    std::vector<Scalar> val = map.frame_values(big.simplex);
    if (!at_theta.empty() && big.simplex.size() == 3) {
      for (std::size_t p = 0; p < 3; ++p)
        if (big.simplex[p] == at_theta[0] && val[p] == big.value) out.incidence.matrix.set(0, j, 1);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Cell& small = cells[i];
      if (small.simplex.size() + 1 != big.simplex.size()) continue;
      if (!std::includes(big.simplex.begin(), big.simplex.end(), small.simplex.begin(), small.simplex.end())) continue;
      // express the small crossing in the big frame
      std::size_t pos = static_cast<std::size_t>(
          std::find(big.simplex.begin(), big.simplex.end(), small.simplex[0]) - big.simplex.begin());
      Scalar shifted = small.value - map.angle(small.simplex[0]) + val[pos];
      if (shifted == big.value) out.incidence.matrix.set(i, j, 1);
    }
  }
  return out;
}

std::size_t fiber_minor_betti(const FiberMinor& minor, int r) {
  auto cells_of = [&](int d) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < minor.cell_dims.size(); ++i)
      if (minor.cell_dims[i] == d) idx.push_back(i);
    return idx;
  };
  auto boundary_rank = [&](int d) -> std::size_t {
    if (d <= 0) return 0;
    auto rows = cells_of(d - 1), cols = cells_of(d);
    if (rows.empty() || cols.empty()) return 0;
    FieldMatrix b(minor.incidence.matrix.field(), rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) b.set(i, j, minor.incidence.matrix(rows[i], cols[j]));
    return rank(b);
  };
  return cells_of(r).size() - boundary_rank(r) - boundary_rank(r + 1);
}

}  // namespace circpers
