#include "circpers/covering.hpp"

#include <algorithm>

namespace circpers {

TruncationEstimate estimate_truncation(const PLCircleMap& map, const CutComplex& cut, const Scalar& theta, int r,
                                       Field field) {
  TruncationEstimate est;
  Subcomplex level = level_subcomplex(cut, theta);
  est.d = betti(level.complex, r, field);
  est.k = est.d + 2;
  est.level_z2 = betti(level.complex, r, Field::prime(2));
  std::size_t at_theta = 0;
  for (int v : map.complex().vertices())
    if (map.angle(v) == mod_one(theta)) ++at_theta;
  if (at_theta <= 1) est.minor_z2 = fiber_minor_betti(fiber_minor(map, theta), r);
  return est;
}

Block Dissection::block_of(const Simplex& s) const {
  auto has = [&](const std::vector<Simplex>& v) { return std::binary_search(v.begin(), v.end(), s); };
  if (has(level)) return Block::kLevel;
  if (has(lower_collar)) return Block::kLowerCollar;
  if (has(upper_collar)) return Block::kUpperCollar;
  return Block::kTop;
}

Dissection dissect(const CutComplex& cut, const Scalar& theta) {
  if (!cut.is_level(theta)) throw InputError("angle " + theta.get_str() + " is not a cut level");
  const PLCircleMap& f = cut.derived;
  const SimplicialComplex& k = f.complex();
  const Scalar th = mod_one(theta);
  Dissection out;
  std::map<Simplex, Block> collar;
  for (const auto& s : k.ordered()) {
    std::vector<Scalar> val = f.frame_values(s);
    std::optional<Scalar> base;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (f.angle(s[i]) == th && (!base || val[i] < *base)) base = val[i];
    if (!base) continue;
    out.level.push_back(s);
    // proper faces without a vertex at theta lie on one side of the level
    const std::size_t n = s.size();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      Simplex face;
      Scalar top = 0;
      bool first = true, touches = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask & (1u << i))) continue;
        face.push_back(s[i]);
        if (f.angle(s[i]) == th) touches = true;
        if (first || val[i] > top) top = val[i];
        first = false;
      }
      if (touches) continue;
      collar.emplace(face, top < *base ? Block::kLowerCollar : Block::kUpperCollar);
    }
  }
  for (const auto& [face, b] : collar) (b == Block::kLowerCollar ? out.lower_collar : out.upper_collar).push_back(face);
  for (const auto& s : k.ordered()) {
    if (collar.count(s)) continue;
    bool touches = std::any_of(s.begin(), s.end(), [&](int v) { return f.angle(v) == th; });
    if (!touches) out.top.push_back(s);
  }
  std::sort(out.top.begin(), out.top.end());
  std::sort(out.level.begin(), out.level.end());
  std::sort(out.lower_collar.begin(), out.lower_collar.end());
  std::sort(out.upper_collar.begin(), out.upper_collar.end());
  return out;
}

// ---------------------------------------------------------------------------

TruncatedCovering::TruncatedCovering(const CutComplex& cut, const CriticalStructure& crit, std::size_t k)
    : derived_(cut.derived), crit_(crit), theta_(crit.t.at(0)), k_(k) {
  if (k == 0) throw InputError("truncation needs k >= 1");
  for (const auto& t : crit.t)
    if (!cut.is_level(t)) throw InputError("regular angle " + t.get_str() + " is not a cut level");
  space_ = window_subcomplex(derived_, theta_, theta_ + Scalar(static_cast<long>(k)));
  dissection_ = dissect(cut, theta_);
}

Scalar TruncatedCovering::regular(std::size_t j) const {
  if (j > pieces()) throw InputError("regular index out of range");
  const std::size_t m = crit_.m();
  return crit_.t[j % m] + Scalar(static_cast<long>(j / m));
}

Scalar TruncatedCovering::critical(std::size_t j) const {
  if (j < 1 || j > pieces()) throw InputError("critical index out of range");
  const std::size_t m = crit_.m();
  return crit_.s[(j - 1) % m] + Scalar(static_cast<long>((j - 1) / m));
}

Subcomplex TruncatedCovering::window(std::size_t a, std::size_t b) const {
  if (a > b) throw InputError("window with decreasing ends");
  return window_subcomplex(derived_, regular(a), regular(b));
}

std::pair<Block, long> TruncatedCovering::provenance(const Simplex& local) const {
  Simplex src = space_.source(local);
  std::sort(src.begin(), src.end());
  Scalar lo = space_.keys.at(static_cast<std::size_t>(local[0])).level;
  for (int v : local) lo = std::min(lo, space_.keys.at(static_cast<std::size_t>(v)).level);
  return {dissection_.block_of(src), floor_of(lo - theta_).get_num().get_si()};
}

long TruncatedCovering::stage(const Simplex& local) const {
  Scalar hi = space_.keys.at(static_cast<std::size_t>(local[0])).level;
  for (int v : local) hi = std::max(hi, space_.keys.at(static_cast<std::size_t>(v)).level);
  return ceil_of(hi - theta_).get_num().get_si();
}

std::vector<Simplex> TruncatedCovering::filtration_order() const {
  std::vector<std::pair<long, Simplex>> tagged;
  for (const auto& s : space_.complex.ordered()) tagged.emplace_back(stage(s), s);
  std::stable_sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.size() < b.second.size();
  });
  std::vector<Simplex> out;
  for (auto& [st, s] : tagged) out.push_back(std::move(s));
  return out;
}

LinearQuiverRep covering_representation(const TruncatedCovering& cov, int r, Field field) {
  const std::size_t n = cov.pieces();
  LinearQuiverRep rep;
  rep.field = field;
  rep.m = n;
  std::vector<Subcomplex> levels;
  std::vector<HomologyBasis> level_bases;
  for (std::size_t j = 0; j <= n; ++j) {
    levels.push_back(cov.window(j, j));
    level_bases.emplace_back(levels.back().complex, r, field);
    rep.n.push_back(level_bases.back().rank());
  }
  for (std::size_t j = 1; j <= n; ++j) {
    Subcomplex piece = cov.window(j - 1, j);
    HomologyBasis basis(piece.complex, r, field);
    rep.d.push_back(basis.rank());
    rep.alpha.push_back(induced_map(levels[j - 1], level_bases[j - 1], piece, basis));
    rep.beta.push_back(induced_map(levels[j], level_bases[j], piece, basis));
  }
  return rep;
}

std::vector<CircleBarCode> extract_circle_bars(const std::vector<LinearBar>& bars, std::size_t m, std::size_t k) {
  std::vector<CircleBarCode> out;
  for (const auto& b : bars) {
    if (b.touches_left || b.start <= m || b.start > 2 * m) continue;
    if (b.touches_right || b.end > k * m) {
      throw InternalError("bar " + b.to_string() + " reaches the end of a truncation with k = " + std::to_string(k));
    }
    CircleBarCode c;
    c.i = b.start - m;
    std::size_t right = b.end - m;
    c.j = (right - 1) % m + 1;
    c.k = (right - 1) / m;
    c.left_closed = b.left_closed;
    c.right_closed = b.right_closed;
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace circpers
