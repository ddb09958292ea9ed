#include "circpers/complex.hpp"

#include <algorithm>
#include <set>

namespace circpers {

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices) {
  std::vector<std::set<Simplex>> layers;
  for (Simplex s : simplices) {
    if (s.empty()) throw InputError("empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("simplex with a repeated vertex");
    if (s.front() < 0) throw InputError("negative vertex index");
    std::size_t d = s.size() - 1;
    if (layers.size() <= d) layers.resize(d + 1);
    if (!layers[d].insert(s).second) continue;
  }
  // close under faces, top down
  for (std::size_t d = layers.size(); d-- > 1;) {
    for (const auto& s : layers[d]) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        layers[d - 1].insert(std::move(face));
      }
    }
  }
  SimplicialComplex k;
  for (auto& layer : layers) {
    k.by_dim_.emplace_back(layer.begin(), layer.end());
    auto& idx = k.index_.emplace_back();
    for (std::size_t i = 0; i < k.by_dim_.back().size(); ++i) idx.emplace(k.by_dim_.back()[i], i);
  }
  return k;
}

std::size_t SimplicialComplex::count(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return by_dim_[static_cast<std::size_t>(dim)].size();
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& layer : by_dim_) n += layer.size();
  return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> kNone;
  if (dim < 0 || dim > dimension()) return kNone;
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  if (s.empty() || s.size() > by_dim_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> v;
  for (const auto& s : simplices(0)) v.push_back(s[0]);
  return v;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    std::set<Simplex> covered;
    for (const auto& s : simplices(d + 1)) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        covered.insert(std::move(face));
      }
    }
    for (const auto& s : simplices(d))
      if (!covered.count(s)) out.push_back(s);
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::ordered() const {
  std::vector<Simplex> out;
  for (const auto& layer : by_dim_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::size_t SimplicialComplex::global_index(int dim, std::size_t local) const {
  std::size_t offset = 0;
  for (int d = 0; d < dim; ++d) offset += count(d);
  return offset + local;
}

SparseVector SimplicialComplex::boundary(int dim, std::size_t local, const Field& f) const {
  SparseVector out;
  if (dim == 0) return out;
  const Simplex& s = simplices(dim)[local];
  std::vector<std::pair<std::size_t, Scalar>> terms;
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    Simplex face;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != drop) face.push_back(s[i]);
    auto idx = find(face);
    if (!idx) throw InternalError("complex is not closed under faces");
    terms.emplace_back(*idx, f.from_int(drop % 2 == 0 ? 1 : -1));
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [i, v] : terms) out.push_back(i, v);
  return out;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(count(d));
  return chi;
}

SimplicialComplex build_complex(const std::vector<std::vector<int>>& maximal_simplices) {
  if (maximal_simplices.empty()) throw InputError("complex has no simplices");
  SimplicialComplex k = SimplicialComplex::from_simplices(maximal_simplices);
  std::vector<int> v = k.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != static_cast<int>(i)) throw InputError("vertex ids must be dense from 0 (missing " + std::to_string(i) + ")");
  return k;
}

IncidenceMatrix incidence_matrix(const SimplicialComplex& k, bool signed_entries, Field field) {
  IncidenceMatrix out;
  out.order = k.ordered();
  out.matrix = FieldMatrix(field, out.order.size(), out.order.size());
  for (int d = 1; d <= k.dimension(); ++d) {
    for (std::size_t j = 0; j < k.count(d); ++j) {
      std::size_t col = k.global_index(d, j);
      const SparseVector b = k.boundary(d, j, field);
      for (const auto& e : b.entries()) {
        std::size_t row = k.global_index(d - 1, e.index);
        out.matrix.set(row, col, signed_entries ? e.value : Scalar(1));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Scalar floor_of(const Scalar& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return Scalar(q);
}

Scalar ceil_of(const Scalar& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return Scalar(q);
}

Scalar mod_one(const Scalar& x) { return x - floor_of(x); }

Scalar shortest_arc(const Scalar& from, const Scalar& to) {
  Scalar d = mod_one(to - from);
  if (d > Scalar(1, 2)) d -= 1;
  return d;
}

PLCircleMap PLCircleMap::create(SimplicialComplex complex, std::vector<Scalar> angles,
                                 const std::map<std::pair<int, int>, Scalar>& explicit_lifts,
                                 std::vector<std::string>* warnings) {
  PLCircleMap map;
  for (int v : complex.vertices()) {
    if (static_cast<std::size_t>(v) >= angles.size()) throw InputError("vertex " + std::to_string(v) + " has no angle");
  }
  for (auto& a : angles) a = mod_one(a);
  for (const auto& e : complex.simplices(1)) {
    map.lifts_[{e[0], e[1]}] = shortest_arc(angles[static_cast<std::size_t>(e[0])], angles[static_cast<std::size_t>(e[1])]);
  }
  for (const auto& [uv, value] : explicit_lifts) {
    auto [u, v] = uv;
    if (u == v) throw InputError("edge lift on a loop at vertex " + std::to_string(u));
    Simplex e{std::min(u, v), std::max(u, v)};
    if (!complex.contains(e)) {
      throw InputError("edge lift given for non-edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    Scalar l = u < v ? value : Scalar(-value);
    Scalar diff = l - (angles[static_cast<std::size_t>(e[1])] - angles[static_cast<std::size_t>(e[0])]);
    if (diff.get_den() != 1) {
      throw InputError("edge lift on (" + std::to_string(u) + "," + std::to_string(v) +
                       ") is inconsistent with the vertex angles mod 1");
    }
    map.lifts_[{e[0], e[1]}] = l;
  }
  map.complex_ = std::move(complex);
  map.angles_ = std::move(angles);
  for (const auto& t : map.complex_.simplices(2)) {
    Scalar sum = map.lift(t[0], t[1]) + map.lift(t[1], t[2]) + map.lift(t[2], t[0]);
    if (sgn(sum) != 0) {
      throw InputError("lifts around triangle (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                       std::to_string(t[2]) + ") sum to " + sum.get_str() + ", not 0");
    }
  }
  if (warnings && !map.generic()) warnings->push_back("two vertices share an angle (map is not generic)");
  return map;
}

Scalar PLCircleMap::lift(int u, int v) const {
  if (u == v) return Scalar(0);
  auto it = lifts_.find({std::min(u, v), std::max(u, v)});
  if (it == lifts_.end()) throw InternalError("no edge between " + std::to_string(u) + " and " + std::to_string(v));
  return u < v ? it->second : Scalar(-it->second);
}

std::vector<Scalar> PLCircleMap::frame_values(const Simplex& s) const {
  std::vector<Scalar> out;
  out.reserve(s.size());
  const Scalar& base = angle(s[0]);
  for (int v : s) out.push_back(base + lift(s[0], v));
  return out;
}

bool PLCircleMap::generic() const {
  std::set<Scalar> seen;
  for (int v : complex_.vertices())
    if (!seen.insert(angle(v)).second) return false;
  return true;
}

CriticalStructure critical_structure(const PLCircleMap& map) {
  std::set<Scalar> values;
  for (int v : map.complex().vertices()) {
    Scalar a = map.angle(v);
    values.insert(sgn(a) == 0 ? Scalar(1) : a);
  }
  CriticalStructure c;
  c.s.assign(values.begin(), values.end());
  if (c.s.empty()) throw InputError("map has no vertices");
  c.t.push_back(c.s[0] / 2);
  for (std::size_t i = 1; i < c.s.size(); ++i) c.t.push_back((c.s[i - 1] + c.s[i]) / 2);
  return c;
}

}  // namespace circpers
