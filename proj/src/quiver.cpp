#include "circpers/quiver.hpp"

#include <algorithm>
#include <map>

#include "circpers/fibers.hpp"

namespace circpers {

namespace {

FieldMatrix block_diagonal(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.put_block(0, 0, a);
  out.put_block(a.rows(), a.cols(), b);
  return out;
}

void check_shape(const FieldMatrix& mat, std::size_t rows, std::size_t cols, const std::string& what) {
  if (mat.rows() != rows || mat.cols() != cols) {
    throw InputError(what + " has shape " + std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) +
                     ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

// A zigzag on positions 1..P: even positions q receive fwd[q] from q-1 and
// bwd[q] from q+1 (wrapping to 1 when cyclic).
struct Zigzag {
  Field field = Field::rationals();
  bool cyclic = true;
  std::size_t P = 0;
  std::vector<std::size_t> dim;  // indexed by position, dim[0] unused
  std::vector<FieldMatrix> fwd, bwd;

  std::size_t wrap(std::size_t q) const { return cyclic ? (q - 1) % P + 1 : q; }
  std::size_t right(std::size_t q) const { return wrap(q + 1); }
  std::size_t left(std::size_t q) const { return cyclic ? wrap(q + P - 1) : q - 1; }
  bool has_right(std::size_t q) const { return cyclic || q < P; }
  bool has_left(std::size_t q) const { return cyclic || q > 1; }
  std::size_t total() const {
    std::size_t t = 0;
    for (std::size_t q = 1; q <= P; ++q) t += dim[q];
    return t;
  }
};

Zigzag from_cyclic(const CyclicQuiverRep& rep) {
  rep.validate();
  Zigzag z;
  z.field = rep.field;
  z.cyclic = true;
  z.P = 2 * rep.m;
  z.dim.assign(z.P + 1, 0);
  z.fwd.resize(z.P + 1);
  z.bwd.resize(z.P + 1);
  for (std::size_t i = 1; i <= rep.m; ++i) {
    z.dim[2 * i - 1] = rep.n[i - 1];
    z.dim[2 * i] = rep.d[i - 1];
    z.fwd[2 * i] = rep.alpha[i - 1];
    z.bwd[2 * i] = rep.beta[i - 1];
  }
  return z;
}

CyclicQuiverRep to_cyclic(const Zigzag& z) {
  CyclicQuiverRep rep = CyclicQuiverRep::zero(z.field, z.P / 2);
  for (std::size_t i = 1; i <= rep.m; ++i) {
    rep.n[i - 1] = z.dim[2 * i - 1];
    rep.d[i - 1] = z.dim[2 * i];
    rep.alpha[i - 1] = z.fwd[2 * i];
    rep.beta[i - 1] = z.bwd[2 * i];
  }
  return rep;
}

Zigzag from_linear(const LinearQuiverRep& rep) {
  rep.validate();
  Zigzag z;
  z.field = rep.field;
  z.cyclic = false;
  z.P = 2 * rep.m + 1;
  z.dim.assign(z.P + 1, 0);
  z.fwd.resize(z.P + 1);
  z.bwd.resize(z.P + 1);
  for (std::size_t i = 1; i <= rep.m + 1; ++i) z.dim[2 * i - 1] = rep.n[i - 1];
  for (std::size_t i = 1; i <= rep.m; ++i) {
    z.dim[2 * i] = rep.d[i - 1];
    z.fwd[2 * i] = rep.alpha[i - 1];
    z.bwd[2 * i] = rep.beta[i - 1];
  }
  return z;
}

bool in_span(const FieldMatrix& span, const Vector& v, PivotOrder order) {
  return solve_membership(span, v, order).has_value();
}

bool is_zero_vec(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

void verify_chain(const Zigzag& z, const ChainWitness& c, PivotOrder order) {
  const std::size_t l = c.length();
  auto pos = [&](std::size_t j) { return z.wrap(c.p + j); };
  for (std::size_t j = 0; j + 1 < l; ++j) {
    std::size_t q = pos(j), q2 = pos(j + 1);
    bool ok = (q % 2 == 1) ? z.fwd[q2].apply(c.h[j]) == c.h[j + 1] : z.bwd[q].apply(c.h[j + 1]) == c.h[j];
    if (!ok) throw InternalError("chain violates P1 at position " + std::to_string(q));
  }
  std::size_t p = c.p;
  if (p % 2 == 1) {
    if (z.has_left(p) && !is_zero_vec(z.bwd[z.left(p)].apply(c.h[0]))) throw InternalError("chain violates P2 (odd start)");
  } else if (in_span(z.fwd[p], c.h[0], order)) {
    throw InternalError("chain violates P2 (even start)");
  }
  std::size_t e = pos(l - 1);
  if (e % 2 == 1) {
    if (z.has_right(e) && !is_zero_vec(z.fwd[z.right(e)].apply(c.h[l - 1]))) throw InternalError("chain violates P3 (odd end)");
  } else if (in_span(z.bwd[e], c.h[l - 1], order)) {
    throw InternalError("chain violates P3 (even end)");
  }
  for (std::size_t q = 1; q <= z.P; ++q) {
    std::vector<Vector> at;
    for (std::size_t j = 0; j < l; ++j)
      if (pos(j) == q) at.push_back(c.h[j]);
    if (at.empty()) continue;
    FieldMatrix mat(z.field, z.dim[q], at.size());
    for (std::size_t k = 0; k < at.size(); ++k) mat.set_column(k, at[k]);
    if (rank(mat) != at.size()) throw InternalError("chain violates P4 at position " + std::to_string(q));
  }
}

/// Pairs (x, h) with x at a fixed start position and h at the current one,
/// linked by a path obeying P1; columns span the relation.
struct Relation {
  FieldMatrix x, h;
};

Relation start_relation(const Zigzag& z, std::size_t p) {
  FieldMatrix id = FieldMatrix::identity(z.field, z.dim[p]);
  return {id, id};
}

Relation compress(const FieldMatrix& x, const FieldMatrix& h, PivotOrder order) {
  FieldMatrix both = column_space(x.vconcat(h), order);
  return {both.block(0, 0, x.rows(), both.cols()), both.block(x.rows(), 0, h.rows(), both.cols())};
}

/// Moves the relation from position q to the next position.
Relation step(const Zigzag& z, const Relation& rel, std::size_t q, PivotOrder order) {
  const std::size_t next = z.right(q);
  if (q % 2 == 1) return compress(rel.x, z.fwd[next] * rel.h, order);
  const FieldMatrix& beta = z.bwd[q];
  FieldMatrix k = kernel_basis(rel.h.hconcat(beta.scaled(-1)), order);
  FieldMatrix coef = k.block(0, 0, rel.h.cols(), k.cols());
  return compress(rel.x * coef, k.block(rel.h.cols(), 0, z.dim[next], k.cols()), order);
}

/// Starts x of pairs whose end lies in span(target).
FieldMatrix preimage(const Relation& rel, const FieldMatrix& target, PivotOrder order) {
  FieldMatrix k = kernel_basis(rel.h.hconcat(target.scaled(-1)), order);
  return column_space(rel.x * k.block(0, 0, rel.x.cols(), k.cols()), order);
}

/// Ends h of pairs whose start lies in span(source).
FieldMatrix image(const Relation& rel, const FieldMatrix& source, PivotOrder order) {
  FieldMatrix k = kernel_basis(rel.x.hconcat(source.scaled(-1)), order);
  return column_space(rel.h * k.block(0, 0, rel.h.cols(), k.cols()), order);
}

FieldMatrix span_sum(const FieldMatrix& a, const FieldMatrix& b, PivotOrder order) {
  return column_space(a.hconcat(b), order);
}

FieldMatrix zero_span(const Zigzag& z, std::size_t q) { return FieldMatrix(z.field, z.dim[q], 0); }

struct EndSpaces {
  FieldMatrix plus, minus;
};

/// Left end at p: start vectors of summands whose interval begins exactly at p.
EndSpaces left_end(const Zigzag& z, std::size_t p, PivotOrder order) {
  if (p % 2 == 0) return {FieldMatrix::identity(z.field, z.dim[p]), column_space(z.fwd[p], order)};
  if (!z.has_left(p)) return {FieldMatrix::identity(z.field, z.dim[p]), zero_span(z, p)};
  return {kernel_basis(z.bwd[z.left(p)], order), zero_span(z, p)};
}

/// Right end at e, symmetric to left_end.
EndSpaces right_end(const Zigzag& z, std::size_t e, PivotOrder order) {
  if (e % 2 == 0) return {FieldMatrix::identity(z.field, z.dim[e]), column_space(z.bwd[e], order)};
  if (!z.has_right(e)) return {FieldMatrix::identity(z.field, z.dim[e]), zero_span(z, e)};
  return {kernel_basis(z.fwd[z.right(e)], order), zero_span(z, e)};
}

/// Multiplicity of the interval summand occupying positions p .. p+l-1
/// (wrapping when cyclic), read at its start:
/// dim (L+ & R+) / ((L- & R+) + (L+ & R-)).
struct IntervalCount {
  std::size_t count = 0;
  FieldMatrix top, bad;  // L+ & R+ and the subspace dividing it
};

IntervalCount interval_count(const Zigzag& z, const EndSpaces& left, const Relation& rel, std::size_t e,
                             PivotOrder order) {
  EndSpaces right = right_end(z, e, order);
  FieldMatrix rplus = preimage(rel, right.plus, order), rminus = preimage(rel, right.minus, order);
  IntervalCount out;
  out.top = intersection_basis(left.plus, rplus);
  out.bad = span_sum(intersection_basis(left.minus, rplus), intersection_basis(left.plus, rminus), order);
  out.count = out.top.cols() - rank(out.bad);
  return out;
}

/// Multiplicities of every interval summand, keyed by (start, length).
std::map<std::pair<std::size_t, std::size_t>, std::size_t> interval_multiplicities(const Zigzag& z, PivotOrder order) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  const std::size_t bound = z.total();
  for (std::size_t p = 1; p <= z.P; ++p) {
    if (z.dim[p] == 0) continue;
    EndSpaces left = left_end(z, p, order);
    if (rank(left.plus) == rank(left.minus)) continue;
    Relation rel = start_relation(z, p);
    for (std::size_t l = 1; l <= bound; ++l) {
      const std::size_t e = z.wrap(p + l - 1);
      IntervalCount c = interval_count(z, left, rel, e, order);
      if (c.count > 0) out[{p, l}] = c.count;
      FieldMatrix reach = column_space(rel.x, order);
      if (intersection_dim(left.plus, reach) == intersection_dim(left.minus, reach)) break;
      if (!z.has_right(e)) break;
      rel = step(z, rel, e, order);
    }
  }
  return out;
}

/// Automorphism induced by one turn of the relation on its regular
/// subquotient at position 1.
FieldMatrix regular_monodromy(const Zigzag& z, PivotOrder order) {
  const Field& f = z.field;
  const std::size_t n = z.dim[1];
  Relation turn = start_relation(z, 1);
  for (std::size_t q = 1; q <= z.P; ++q) turn = step(z, turn, q, order);
  auto stabilize = [&](FieldMatrix s, bool forward) {
    for (;;) {
      FieldMatrix next = forward ? image(turn, s, order) : preimage(turn, s, order);
      if (rank(next) == rank(s) && rank(span_sum(next, s, order)) == rank(s)) return s;
      s = next;
    }
  };
  FieldMatrix whole = FieldMatrix::identity(f, n), none(f, n, 0);
  FieldMatrix extend_right = stabilize(whole, false), extend_left = stabilize(whole, true);
  FieldMatrix dies = stabilize(none, false), born = stabilize(none, true);
  FieldMatrix reg = intersection_basis(extend_right, extend_left);
  FieldMatrix low = span_sum(intersection_basis(reg, dies), intersection_basis(reg, born), order);
  FieldMatrix basis = low;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < reg.cols(); ++c) {
    if (in_span(basis, reg.column(c), order)) continue;
    basis = basis.hconcat(reg.block(0, c, n, 1));
    free_cols.push_back(c);
  }
  const std::size_t lo = low.cols(), k = free_cols.size();
  FieldMatrix t(f, k, k);
  // pairs (x, y) of the turn with y extendable to the right forever
  FieldMatrix sys = turn.x.hconcat(FieldMatrix(f, n, extend_right.cols()))
                        .vconcat(turn.h.hconcat(extend_right.scaled(-1)));
  for (std::size_t j = 0; j < k; ++j) {
    Vector rhs = reg.column(free_cols[j]);
    rhs.resize(2 * n);
    auto w = solve_membership(sys, rhs, order);
    if (!w) throw InternalError("regular part is not carried around the cycle");
    Vector coef(w->begin(), w->begin() + static_cast<std::ptrdiff_t>(turn.x.cols()));
    auto y = solve_membership(basis, turn.h.apply(coef), order);
    if (!y) throw InternalError("regular part is not invariant");
    for (std::size_t i = 0; i < k; ++i) t.set(i, j, (*y)[lo + i]);
  }
  return t;
}

/// A chain of length l from p spanning a summand of that interval, when one exists.
std::optional<ChainWitness> chain_at(const Zigzag& z, std::size_t p, std::size_t l, PivotOrder order) {
  if (z.dim[p] == 0) return std::nullopt;
  EndSpaces left = left_end(z, p, order);
  std::vector<Relation> rels{start_relation(z, p)};
  for (std::size_t j = 1; j < l; ++j) {
    std::size_t q = z.wrap(p + j - 1);
    if (!z.has_right(q)) return std::nullopt;
    rels.push_back(step(z, rels.back(), q, order));
  }
  const std::size_t e = z.wrap(p + l - 1);
  IntervalCount c = interval_count(z, left, rels.back(), e, order);
  if (c.count == 0) return std::nullopt;
  std::optional<Vector> x;
  for (std::size_t k = 0; k < c.top.cols() && !x; ++k)
    if (!in_span(c.bad, c.top.column(k), order)) x = c.top.column(k);
  if (!x) throw InternalError("interval count without a representative");
  // an end for x inside R+
  const Relation& last = rels.back();
  FieldMatrix plus = right_end(z, e, order).plus;
  FieldMatrix sys = last.x.hconcat(FieldMatrix(z.field, last.x.rows(), plus.cols()))
                        .vconcat(last.h.hconcat(plus.scaled(-1)));
  Vector rhs = *x;
  rhs.resize(last.x.rows() + last.h.rows());
  auto w = solve_membership(sys, rhs, order);
  if (!w) throw InternalError("chain end reconstruction failed");
  Vector coef(w->begin(), w->begin() + static_cast<std::ptrdiff_t>(last.x.cols()));
  ChainWitness chain;
  chain.p = p;
  chain.h.resize(l);
  chain.h[l - 1] = last.h.apply(coef);
  for (std::size_t t = l - 1; t-- > 0;) {
    const std::size_t q = z.wrap(p + t);
    const Relation& r = rels[t];
    if (q % 2 == 0) {
      chain.h[t] = z.bwd[q].apply(chain.h[t + 1]);
      continue;
    }
    FieldMatrix s = r.x.vconcat(z.fwd[z.right(q)] * r.h);
    Vector b = *x;
    b.insert(b.end(), chain.h[t + 1].begin(), chain.h[t + 1].end());
    auto cf = solve_membership(s, b, order);
    if (!cf) throw InternalError("chain reconstruction failed");
    chain.h[t] = r.h.apply(*cf);
  }
  if (chain.h[0] != *x) throw InternalError("chain reconstruction lost its start");
  return chain;
}

/// Splits the span of a chain off through a retraction onto it; the
/// remainder is the kernel of the retraction.
Zigzag split_off(const Zigzag& z, const ChainWitness& c, PivotOrder order) {
  const Field& f = z.field;
  // chain elements per position, with their chain index
  std::vector<std::vector<std::size_t>> at(z.P + 1);
  std::vector<std::size_t> slot(c.length());
  for (std::size_t j = 0; j < c.length(); ++j) {
    std::size_t q = z.wrap(c.p + j);
    slot[j] = at[q].size();
    at[q].push_back(j);
  }
  // unknowns: entries of Pi_q (|at[q]| x dim[q]), row-major, stacked by q
  std::vector<std::size_t> offset(z.P + 2, 0);
  for (std::size_t q = 1; q <= z.P; ++q) offset[q + 1] = offset[q] + at[q].size() * z.dim[q];
  const std::size_t unknowns = offset[z.P + 1];
  auto var = [&](std::size_t q, std::size_t row, std::size_t col) { return offset[q] + row * z.dim[q] + col; };
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  auto new_row = [&]() -> std::vector<Scalar>& {
    rows.emplace_back(unknowns, Scalar(0));
    rhs.emplace_back(0);
    return rows.back();
  };
  // Pi_q h_j = e_slot
  for (std::size_t q = 1; q <= z.P; ++q)
    for (std::size_t a = 0; a < at[q].size(); ++a)
      for (std::size_t s = 0; s < at[q].size(); ++s) {
        auto& row = new_row();
        const Vector& h = c.h[at[q][a]];
        for (std::size_t col = 0; col < z.dim[q]; ++col) row[var(q, s, col)] = h[col];
        rhs.back() = s == a ? 1 : 0;
      }
  // Pi_tgt g = g_S Pi_src for every arrow g
  auto arrow = [&](const FieldMatrix& g, std::size_t src, std::size_t tgt) {
    FieldMatrix chain_tgt(f, z.dim[tgt], at[tgt].size());
    for (std::size_t a = 0; a < at[tgt].size(); ++a) chain_tgt.set_column(a, c.h[at[tgt][a]]);
    FieldMatrix gs(f, at[tgt].size(), at[src].size());
    for (std::size_t a = 0; a < at[src].size(); ++a) {
      auto coords = solve_membership(chain_tgt, g.apply(c.h[at[src][a]]), order);
      if (!coords) throw InputError("chain does not span a subrepresentation");
      gs.set_column(a, *coords);
    }
    for (std::size_t s = 0; s < at[tgt].size(); ++s)
      for (std::size_t col = 0; col < z.dim[src]; ++col) {
        auto& row = new_row();
        for (std::size_t k = 0; k < z.dim[tgt]; ++k) row[var(tgt, s, k)] = f.add(row[var(tgt, s, k)], g(k, col));
        for (std::size_t b = 0; b < at[src].size(); ++b)
          row[var(src, b, col)] = f.add(row[var(src, b, col)], f.neg(gs(s, b)));
      }
  };
  for (std::size_t q = 2; q <= z.P; q += 2) {
    arrow(z.fwd[q], z.left(q), q);
    if (z.has_right(q)) arrow(z.bwd[q], z.right(q), q);
  }
  FieldMatrix sys = rows.empty() ? FieldMatrix(f, 0, unknowns) : FieldMatrix::from_rows(f, rows);
  auto sol = solve_membership(sys, rhs, order);
  if (!sol) throw InputError("chain does not span a direct summand");
  std::vector<FieldMatrix> comp(z.P + 1);
  for (std::size_t q = 1; q <= z.P; ++q) {
    FieldMatrix pi(f, at[q].size(), z.dim[q]);
    for (std::size_t s = 0; s < at[q].size(); ++s)
      for (std::size_t col = 0; col < z.dim[q]; ++col) pi.set(s, col, (*sol)[var(q, s, col)]);
    comp[q] = kernel_basis(pi, order);
  }
  Zigzag out = z;
  for (std::size_t q = 1; q <= z.P; ++q) out.dim[q] = comp[q].cols();
  auto restrict = [&](const FieldMatrix& g, std::size_t src, std::size_t tgt) {
    FieldMatrix img = g * comp[src];
    FieldMatrix r(f, comp[tgt].cols(), comp[src].cols());
    for (std::size_t a = 0; a < img.cols(); ++a) {
      auto coords = solve_membership(comp[tgt], img.column(a), order);
      if (!coords) throw InternalError("complement is not a subrepresentation");
      r.set_column(a, *coords);
    }
    return r;
  };
  for (std::size_t q = 2; q <= z.P; q += 2) {
    out.fwd[q] = restrict(z.fwd[q], z.left(q), q);
    if (z.has_right(q)) out.bwd[q] = restrict(z.bwd[q], z.right(q), q);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

CyclicQuiverRep CyclicQuiverRep::zero(Field field, std::size_t m) {
  CyclicQuiverRep rep;
  rep.field = field;
  rep.m = m;
  rep.n.assign(m, 0);
  rep.d.assign(m, 0);
  rep.alpha.assign(m, FieldMatrix(field, 0, 0));
  rep.beta.assign(m, FieldMatrix(field, 0, 0));
  return rep;
}

void CyclicQuiverRep::validate() const {
  if (m == 0) throw InputError("representation needs m >= 1");
  if (n.size() != m || d.size() != m || alpha.size() != m || beta.size() != m)
    throw InputError("representation arrays do not have m entries");
  for (std::size_t i = 0; i < m; ++i) {
    check_shape(alpha[i], d[i], n[i], "alpha_" + std::to_string(i + 1));
    check_shape(beta[i], d[i], n[(i + 1) % m], "beta_" + std::to_string(i + 1));
    if (alpha[i].field() != field || beta[i].field() != field) throw InputError("matrix over the wrong field");
  }
}

std::size_t CyclicQuiverRep::total_dim() const {
  std::size_t t = 0;
  for (std::size_t i = 0; i < m; ++i) t += n[i] + d[i];
  return t;
}

CyclicQuiverRep CyclicQuiverRep::direct_sum(const CyclicQuiverRep& o) const {
  if (o.m != m || o.field != field) throw InputError("direct sum of incompatible representations");
  CyclicQuiverRep out = zero(field, m);
  for (std::size_t i = 0; i < m; ++i) {
    out.n[i] = n[i] + o.n[i];
    out.d[i] = d[i] + o.d[i];
    out.alpha[i] = block_diagonal(alpha[i], o.alpha[i]);
    out.beta[i] = block_diagonal(beta[i], o.beta[i]);
  }
  return out;
}

std::vector<std::size_t> CyclicQuiverRep::dimension_vector() const {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < m; ++i) {
    v.push_back(n[i]);
    v.push_back(d[i]);
  }
  return v;
}

void LinearQuiverRep::validate() const {
  if (n.size() != m + 1 || d.size() != m || alpha.size() != m || beta.size() != m)
    throw InputError("linear representation arrays have the wrong length");
  for (std::size_t i = 0; i < m; ++i) {
    check_shape(alpha[i], d[i], n[i], "alpha_" + std::to_string(i + 1));
    check_shape(beta[i], d[i], n[i + 1], "beta_" + std::to_string(i + 1));
  }
}

std::size_t LinearQuiverRep::total_dim() const {
  std::size_t t = 0;
  for (auto v : n) t += v;
  for (auto v : d) t += v;
  return t;
}

bool CircleBarCode::valid(std::size_t m) const {
  if (i < 1 || i > m || j < 1 || j > m) return false;
  if (k == 0) return i < j || (i == j && left_closed && right_closed);
  return true;
}

std::string CircleBarCode::to_string() const {
  std::string out = left_closed ? "[" : "(";
  out += "s" + std::to_string(i) + ",s" + std::to_string(j);
  if (k > 0) out += "+" + std::to_string(k);
  out += right_closed ? "]" : ")";
  return out;
}

std::string LinearBar::to_string() const {
  std::string out = touches_left ? "<" : (left_closed ? "[" : "(");
  out += "c" + std::to_string(start) + ",c" + std::to_string(end);
  out += touches_right ? ">" : (right_closed ? "]" : ")");
  return out;
}

CircleBarCode bar_of_chain(std::size_t p, std::size_t l, std::size_t m) {
  CircleBarCode bar;
  std::size_t e = p + l - 1;
  std::size_t left = p % 2 == 0 ? p / 2 : (p - 1) / 2;
  std::size_t right = e % 2 == 0 ? e / 2 : (e + 1) / 2;
  bar.left_closed = p % 2 == 0;
  bar.right_closed = e % 2 == 0;
  if (left == 0) {
    left += m;
    right += m;
  }
  bar.i = left;
  bar.j = (right - 1) % m + 1;
  bar.k = (right - 1) / m - (left - 1) / m;
  return bar;
}

namespace {

LinearBar linear_bar_of_chain(const Zigzag& z, std::size_t p, std::size_t l) {
  LinearBar bar;
  std::size_t e = p + l - 1;
  const std::size_t m = (z.P - 1) / 2;
  if (p == 1) {
    bar.touches_left = true;
    bar.start = 1;
  } else {
    bar.start = p % 2 == 0 ? p / 2 : (p - 1) / 2;
    bar.left_closed = p % 2 == 0;
  }
  if (e == z.P) {
    bar.touches_right = true;
    bar.end = m;
  } else {
    bar.end = e % 2 == 0 ? e / 2 : (e + 1) / 2;
    bar.right_closed = e % 2 == 0;
  }
  return bar;
}

/// Start position and length of the chain realizing a bar.
std::pair<std::size_t, std::size_t> chain_of_bar(const CircleBarCode& bar, std::size_t m) {
  if (!bar.valid(m)) throw InputError("invalid bar " + bar.to_string() + " for m = " + std::to_string(m));
  std::size_t right = bar.j + bar.k * m;
  std::size_t p = bar.left_closed ? 2 * bar.i : 2 * bar.i + 1;
  if (p > 2 * m) {
    p -= 2 * m;
    right -= m;
  }
  std::size_t e = bar.right_closed ? 2 * right : 2 * right - 1;
  if (e < p) throw InputError("bar " + bar.to_string() + " is empty");
  return {p, e - p + 1};
}

}  // namespace

std::optional<ChainWitness> find_chain(const CyclicQuiverRep& rep, std::size_t p, std::size_t l,
                                       const DecomposeOptions& opt) {
  Zigzag z = from_cyclic(rep);
  if (p < 1 || p > z.P || l == 0) throw InputError("chain start or length out of range");
  auto c = chain_at(z, p, l, opt.order);
  if (c) verify_chain(z, *c, opt.order);
  return c;
}

std::pair<CircleBarCode, CyclicQuiverRep> split_chain(const CyclicQuiverRep& rep, const ChainWitness& chain) {
  Zigzag z = from_cyclic(rep);
  verify_chain(z, chain, PivotOrder::kLowestFirst);
  CircleBarCode bar = bar_of_chain(chain.p, chain.length(), rep.m);
  Zigzag rest = split_off(z, chain, PivotOrder::kLowestFirst);
  return {bar, to_cyclic(rest)};
}

FieldMatrix monodromy(const CyclicQuiverRep& rep, std::size_t i) {
  rep.validate();
  const std::size_t m = rep.m;
  if (i < 1 || i > m) throw InputError("monodromy base index out of range");
  FieldMatrix t = FieldMatrix::identity(rep.field, rep.n[i % m]);
  for (std::size_t step = 1; step <= m; ++step) {
    std::size_t a = (i + step - 1) % m;  // 0-based index of alpha_{i+step}
    auto binv = inverse(rep.beta[a]);
    if (!binv || rep.alpha[a].rows() != rep.alpha[a].cols() || rank(rep.alpha[a]) != rep.alpha[a].rows())
      throw InputError("monodromy needs every alpha and beta to be invertible");
    t = *binv * rep.alpha[a] * t;
  }
  return t;
}

Decomposition decompose(const CyclicQuiverRep& rep, const DecomposeOptions& opt) {
  Zigzag z = from_cyclic(rep);
  Decomposition out;
  std::size_t used = 0;
  for (const auto& [key, count] : interval_multiplicities(z, opt.order)) {
    out.bars.insert(out.bars.end(), count, bar_of_chain(key.first, key.second, rep.m));
    used += count * key.second;
  }
  if (used < z.total()) out.jordan = jordan_decomposition(regular_monodromy(z, opt.order));
  for (const auto& cell : out.jordan) used += cell.size * static_cast<std::size_t>(cell.factor.degree()) * z.P;
  if (used != z.total()) {
    throw InternalError("decomposition accounts for " + std::to_string(used) + " of " + std::to_string(z.total()) +
                        " dimensions");
  }
  std::sort(out.bars.begin(), out.bars.end());
  return out;
}

std::vector<LinearBar> decompose_linear(const LinearQuiverRep& rep, const DecomposeOptions& opt) {
  Zigzag z = from_linear(rep);
  std::vector<LinearBar> out;
  std::size_t used = 0;
  for (const auto& [key, count] : interval_multiplicities(z, opt.order)) {
    out.insert(out.end(), count, linear_bar_of_chain(z, key.first, key.second));
    used += count * key.second;
  }
  if (used != z.total()) {
    throw InternalError("linear decomposition accounts for " + std::to_string(used) + " of " +
                        std::to_string(z.total()) + " dimensions");
  }
  std::sort(out.begin(), out.end());
  return out;
}

CyclicQuiverRep synthesize_model(const CircleBarCode& bar, std::size_t m, Field field) {
  auto [p, l] = chain_of_bar(bar, m);
  const std::size_t P = 2 * m;
  // one basis vector per chain position; record (position, local index)
  std::vector<std::size_t> dims(P + 1, 0);
  std::vector<std::pair<std::size_t, std::size_t>> slot;
  for (std::size_t j = 0; j < l; ++j) {
    std::size_t q = (p + j - 1) % P + 1;
    slot.emplace_back(q, dims[q]++);
  }
  CyclicQuiverRep rep = CyclicQuiverRep::zero(field, m);
  for (std::size_t i = 1; i <= m; ++i) {
    rep.n[i - 1] = dims[2 * i - 1];
    rep.d[i - 1] = dims[2 * i];
    rep.alpha[i - 1] = FieldMatrix(field, dims[2 * i], dims[2 * i - 1]);
    rep.beta[i - 1] = FieldMatrix(field, dims[2 * i], dims[(2 * i) % P + 1]);
  }
  for (std::size_t j = 0; j + 1 < l; ++j) {
    auto [q, a] = slot[j];
    auto [q2, b] = slot[j + 1];
    if (q % 2 == 1) {
      rep.alpha[q2 / 2 - 1].set(b, a, 1);
    } else {
      rep.beta[q / 2 - 1].set(a, b, 1);
    }
  }
  return rep;
}

CyclicQuiverRep synthesize_model(const GeneralizedJordanBlock& cell, std::size_t m) {
  if (m == 0) throw InputError("model needs m >= 1");
  const Field& f = cell.factor.field();
  if (sgn(cell.factor.coeff(0)) == 0) throw InputError("Jordan cell with eigenvalue 0");
  FieldMatrix j = jordan_block_matrix(cell);
  CyclicQuiverRep rep = CyclicQuiverRep::zero(f, m);
  for (std::size_t i = 0; i < m; ++i) {
    rep.n[i] = rep.d[i] = j.rows();
    rep.alpha[i] = i == 0 ? j : FieldMatrix::identity(f, j.rows());
    rep.beta[i] = FieldMatrix::identity(f, j.rows());
  }
  return rep;
}

std::vector<std::size_t> ap1_dimensions(const CircleBarCode& bar, std::size_t m) {
  if (!bar.valid(m)) throw InputError("invalid bar " + bar.to_string());
  const std::size_t i = bar.i, j = bar.j;
  const bool lc = bar.left_closed, rc = bar.right_closed;
  std::vector<std::size_t> out;
  if (i <= j) {
    const std::size_t k = bar.k;
    for (std::size_t l = 1; l <= m; ++l) {
      bool n_in = i + 1 <= l && l <= j;
      std::size_t d_lo = lc ? i : i + 1;
      std::size_t d_hi = rc ? j : j - 1;
      bool d_in = d_lo <= l && l <= d_hi;
      out.push_back(n_in ? k + 1 : k);
      out.push_back(d_in ? k + 1 : k);
    }
  } else {
    // the table for i > j counts full turns after the first partial one
    const std::size_t k = bar.k - 1;
    for (std::size_t l = 1; l <= m; ++l) {
      bool n_out = j + 1 <= l && l <= i;
      std::size_t d_lo = rc ? j + 1 : j;
      std::size_t d_hi = lc ? i - 1 : i;
      bool d_out = d_lo <= l && l <= d_hi;
      out.push_back(n_out ? k : k + 1);
      out.push_back(d_out ? k : k + 1);
    }
  }
  return out;
}

CyclicQuiverRep build_representation(const CutComplex& cut, const CriticalStructure& crit, int r, Field field) {
  const std::size_t m = crit.m();
  CyclicQuiverRep rep = CyclicQuiverRep::zero(field, m);
  std::vector<Subcomplex> levels;
  std::vector<HomologyBasis> level_bases;
  for (std::size_t i = 0; i < m; ++i) {
    levels.push_back(level_subcomplex(cut, crit.t[i]));
    level_bases.emplace_back(levels.back().complex, r, field);
    rep.n[i] = level_bases.back().rank();
  }
  for (std::size_t i = 0; i < m; ++i) {
    Subcomplex piece = interval_subcomplex(cut, crit, i + 1);
    HomologyBasis basis(piece.complex, r, field);
    rep.d[i] = basis.rank();
    rep.alpha[i] = induced_map(levels[i], level_bases[i], piece, basis);
    std::size_t next = (i + 1) % m;
    rep.beta[i] = induced_map(levels[next], level_bases[next], piece, basis, Scalar(next == 0 ? 1 : 0));
  }
  return rep;
}

}  // namespace circpers
