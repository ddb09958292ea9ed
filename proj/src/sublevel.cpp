#include "circpers/sublevel.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace circpers {

namespace {

struct Stage {
  Subcomplex sub;
  HomologyBasis basis;
  Stage(Subcomplex s, int r, Field field) : sub(std::move(s)), basis(sub.complex, r, field) {}
};

FieldMatrix map_between(const Stage& a, const Stage& b) { return induced_map(a.sub, a.basis, b.sub, b.basis); }

/// mu(a, b) over a chain of stages.
std::map<std::pair<std::size_t, std::size_t>, std::size_t> mu_table(const std::vector<const Stage*>& st,
                                                                    bool from_start_only) {
  const std::size_t n = st.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  auto rk = [&](long a, std::size_t b) -> long {
    if (a < 0) return 0;
    auto key = std::make_pair(static_cast<std::size_t>(a), b);
    auto it = memo.find(key);
    if (it != memo.end()) return static_cast<long>(it->second);
    std::size_t v = key.first == b ? st[b]->basis.rank() : rank(map_between(*st[key.first], *st[b]));
    memo.emplace(key, v);
    return static_cast<long>(v);
  };
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> mu;
  const std::size_t rows = from_start_only ? std::min<std::size_t>(n, 1) : n;
  for (std::size_t a = 0; a < rows; ++a) {
    const long al = static_cast<long>(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      long v = rk(al, b - 1) - rk(al, b) - rk(al - 1, b - 1) + rk(al - 1, b);
      if (v < 0) throw InternalError("negative persistence count");
      if (v > 0) mu[{a, b}] = static_cast<std::size_t>(v);
    }
    if (n > 0) {
      long v = rk(al, n - 1) - rk(al - 1, n - 1);
      if (v < 0) throw InternalError("negative persistence count");
      if (v > 0) mu[{a, n}] = static_cast<std::size_t>(v);
    }
  }
  return mu;
}

/// omega over two chains of stages sharing stage 0.
std::map<std::pair<std::size_t, std::size_t>, std::size_t> omega_table(const std::vector<const Stage*>& minus,
                                                                       const std::vector<const Stage*>& plus) {
  const Stage& a = *minus.at(0);
  const std::size_t dim = a.basis.rank();
  const Field& f = a.basis.field();
  auto kernels = [&](const std::vector<const Stage*>& side) {
    std::vector<FieldMatrix> out{FieldMatrix(f, dim, 0)};
    for (std::size_t s = 1; s < side.size(); ++s) out.push_back(kernel_basis(map_between(a, *side[s])));
    out.push_back(FieldMatrix::identity(f, dim));
    return out;
  };
  std::vector<FieldMatrix> km = kernels(minus), kp = kernels(plus);
  auto d = [&](std::size_t s, std::size_t t) -> long {
    return static_cast<long>(intersection_dim(km[s], kp[t]));
  };
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> omega;
  for (std::size_t s = 1; s < km.size(); ++s) {
    for (std::size_t t = 1; t < kp.size(); ++t) {
      long v = d(s, t) - d(s - 1, t) - d(s, t - 1) + d(s - 1, t - 1);
      if (v < 0) throw InternalError("negative simultaneous count");
      if (v > 0) omega[{s, t}] = static_cast<std::size_t>(v);
    }
  }
  return omega;
}

std::vector<Stage> build_stages(const NestedSequence& seq, int r, Field field) {
  std::vector<Stage> out;
  out.reserve(seq.stages.size());
  for (const auto& s : seq.stages) out.emplace_back(s, r, field);
  return out;
}

std::vector<const Stage*> pointers(const std::vector<Stage>& v) {
  std::vector<const Stage*> out;
  for (const auto& s : v) out.push_back(&s);
  return out;
}

}  // namespace

NestedSequence sublevel_sequence(const SimplicialComplex& k, const std::vector<Scalar>& values) {
  std::set<Scalar> distinct(values.begin(), values.end());
  NestedSequence seq;
  for (const auto& level : distinct) {
    auto ok = [&](int v) { return values.at(static_cast<std::size_t>(v)) <= level; };
    Subcomplex sub;
    sub.kind = Subcomplex::Kind::kWindow;
    sub.lo = *distinct.begin();
    sub.hi = level;
    for (int v : k.vertices())
      if (ok(v)) sub.keys.push_back({v, Scalar(0)});
    for (std::size_t i = 0; i < sub.keys.size(); ++i) sub.lookup.emplace(sub.keys[i], static_cast<int>(i));
    std::vector<Simplex> local;
    for (const auto& s : k.ordered()) {
      if (!std::all_of(s.begin(), s.end(), ok)) continue;
      Simplex t;
      for (int v : s) t.push_back(sub.lookup.at({v, Scalar(0)}));
      local.push_back(std::move(t));
    }
    sub.complex = SimplicialComplex::from_simplices(local);
    seq.stages.push_back(std::move(sub));
    seq.values.push_back(level);
  }
  return seq;
}

std::size_t PersistenceCounts::at(std::size_t birth, std::size_t death) const {
  auto it = mu.find({birth, death});
  return it == mu.end() ? 0 : it->second;
}

PersistenceCounts persistence_counts(const NestedSequence& seq, int r, Field field, bool from_start_only) {
  std::vector<Stage> st = build_stages(seq, r, field);
  PersistenceCounts out;
  out.values = seq.values;
  out.mu = mu_table(pointers(st), from_start_only);
  return out;
}

PersistenceCounts sublevel_mu(const SimplicialComplex& k, const std::vector<Scalar>& values, int r, Field field) {
  return persistence_counts(sublevel_sequence(k, values), r, field);
}

std::size_t SimultaneousCounts::at(std::size_t s, std::size_t t) const {
  auto it = omega.find({s, t});
  return it == omega.end() ? 0 : it->second;
}

SimultaneousCounts simultaneous_omega(const NestedSequence& minus, const NestedSequence& plus, int r, Field field) {
  if (minus.stages.empty() || plus.stages.empty()) throw InputError("simultaneous persistence needs two non-empty sequences");
  if (minus.stages[0].keys != plus.stages[0].keys || !(minus.stages[0].complex == plus.stages[0].complex))
    throw InputError("the two sequences do not start at the same subcomplex");
  std::vector<Stage> sm = build_stages(minus, r, field), sp = build_stages(plus, r, field);
  SimultaneousCounts out;
  out.minus_values = minus.values;
  out.plus_values = plus.values;
  out.omega = omega_table(pointers(sm), pointers(sp));
  return out;
}

// ---------------------------------------------------------------------------

LevelTables covering_tables(const TruncatedCovering& cov, int r, Field field, std::size_t first_row,
                            std::size_t last_row) {
  const std::size_t n = cov.pieces();
  LevelTables t;
  t.pieces = n;
  t.first_row = first_row;
  t.last_row = last_row;
  std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<Stage>> cache;
  auto win = [&](std::size_t a, std::size_t b) -> const Stage* {
    auto& slot = cache[{a, b}];
    if (!slot) slot = std::make_unique<Stage>(cov.window(a, b), r, field);
    return slot.get();
  };
  const std::size_t lo = std::max<std::size_t>(1, first_row > 0 ? first_row - 1 : 0);
  const std::size_t hi = std::min(n, last_row);

  for (std::size_t i = lo; i <= hi; ++i) {
    // upward from A_i = Y[R_{i-1}, R_i]
    std::vector<const Stage*> up;
    for (std::size_t j = i; j <= n; ++j) up.push_back(win(i - 1, j));
    for (const auto& [key, v] : mu_table(up, true))
      if (key.second < up.size()) t.meets_open_right[{i, i + key.second}] = static_cast<long>(v);
    for (std::size_t j = i; j <= n; ++j) {
      const Stage* w = up[j - i];
      FieldMatrix from_i = map_between(*up[0], *w);
      FieldMatrix from_j = map_between(*win(j - 1, j), *w);
      std::size_t both = intersection_dim(from_i, from_j);
      if (both > 0) t.meets_both[{i, j}] = static_cast<long>(both);
    }
  }
  for (std::size_t j = lo + 1; j <= n; ++j) {
    // downward from A_j; only the rows lo..hi are read back
    const Stage* base = win(j - 1, j);
    auto rk = [&](std::size_t a) -> long {
      const Stage* w = win(a - 1, j);
      return static_cast<long>(w == base ? base->basis.rank() : rank(map_between(*base, *w)));
    };
    const std::size_t top = std::min(hi, j - 1);
    if (top < lo) continue;
    std::vector<long> ranks;
    for (std::size_t a = lo; a <= top + 1; ++a) ranks.push_back(rk(a));
    for (std::size_t a = lo; a <= top; ++a) {
      long v = ranks[a + 1 - lo] - ranks[a - lo];
      if (v < 0) throw InternalError("negative persistence count");
      if (v > 0) t.open_left_meets[{a, j}] = v;
    }
  }
  for (std::size_t a = lo; a <= std::min(hi, n - 1); ++a) {
    // around the level R_a, just above c_a
    std::vector<const Stage*> minus{win(a, a), win(a - 1, a)};
    std::vector<const Stage*> plus;
    for (std::size_t b = a; b <= n; ++b) plus.push_back(win(a, b));
    for (const auto& [key, v] : omega_table(minus, plus))
      if (key.first == 1 && key.second < plus.size()) t.open_open[{a, a + key.second}] = static_cast<long>(v);
  }
  return t;
}

namespace {

long lookup(const std::map<std::pair<std::size_t, std::size_t>, long>& m, std::size_t i, std::size_t j) {
  auto it = m.find({i, j});
  return it == m.end() ? 0 : it->second;
}

}  // namespace

LevelBarCounts level_bar_counts(const LevelTables& t) {
  LevelBarCounts out;
  const std::size_t n = t.pieces;
  // bars meeting c_a with closed right end c_j
  auto meets_closed_right = [&](std::size_t a, std::size_t j) {
    return lookup(t.meets_both, a, j) - lookup(t.meets_both, a, j + 1) - lookup(t.meets_open_right, a, j + 1);
  };
  // bars (c_a, c_j]
  auto open_closed = [&](std::size_t a, std::size_t j) {
    return lookup(t.open_left_meets, a, j) - lookup(t.open_left_meets, a, j + 1) - lookup(t.open_open, a, j + 1);
  };
  auto put = [&](std::size_t i, std::size_t j, bool lc, bool rc, long v) {
    if (v != 0) out.counts[{i, j, lc, rc}] = v;
  };
  for (std::size_t i = std::max<std::size_t>(1, t.first_row); i <= std::min(n, t.last_row); ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      put(i, j, true, true, meets_closed_right(i, j) - meets_closed_right(i - 1, j) - open_closed(i - 1, j));
      if (j == i) continue;
      put(i, j, true, false,
          lookup(t.meets_open_right, i, j) - lookup(t.meets_open_right, i - 1, j) - lookup(t.open_open, i - 1, j));
      put(i, j, false, true, open_closed(i, j));
      put(i, j, false, false, lookup(t.open_open, i, j));
    }
  }
  return out;
}

std::vector<LinearBar> LevelBarCounts::bars() const {
  std::vector<LinearBar> out;
  for (const auto& [key, v] : counts) {
    auto [i, j, lc, rc] = key;
    if (v < 0) throw InternalError("negative level bar count at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (long c = 0; c < v; ++c) {
      LinearBar b;
      b.start = i;
      b.end = j;
      b.left_closed = lc;
      b.right_closed = rc;
      out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinearBar> bars_in_rows(const std::vector<LinearBar>& bars, std::size_t first, std::size_t last) {
  std::vector<LinearBar> out;
  for (LinearBar b : bars) {
    if (b.touches_left || b.start < first || b.start > last) continue;
    if (b.touches_right) {
      b.touches_right = false;
      b.right_closed = true;
    }
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace circpers
