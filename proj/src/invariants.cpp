#include "circpers/invariants.hpp"

#include <cmath>
#include <numbers>

namespace circpers {

const Decomposition& InvariantsReport::at(int r) const {
  static const Decomposition empty;
  auto it = dims.find(r);
  return it == dims.end() ? empty : it->second;
}

bool InvariantsReport::checks_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::size_t n_theta(const CircleBarCode& bar, const std::vector<Scalar>& s, const Scalar& theta) {
  const Scalar lo = bar.start(s), hi = bar.end(s);
  std::size_t count = 0;
  for (Scalar x = mod_one(theta); x <= hi; x += 1) {
    bool above = bar.left_closed ? x >= lo : x > lo;
    bool below = bar.right_closed ? x <= hi : x < hi;
    if (above && below) ++count;
  }
  return count;
}

std::size_t n_cell(const GeneralizedJordanBlock& cell) {
  return cell.size * static_cast<std::size_t>(cell.factor.degree());
}

std::size_t betti_fiber(const InvariantsReport& report, int r, const Scalar& theta) {
  const Decomposition& d = report.at(r);
  std::size_t total = 0;
  for (const auto& b : d.bars) total += n_theta(b, report.critical, theta);
  for (const auto& c : d.jordan) total += n_cell(c);
  return total;
}

std::size_t betti_total(const InvariantsReport& report, int r) {
  std::size_t total = 0;
  for (const auto& b : report.at(r).bars)
    if (b.left_closed && b.right_closed) ++total;
  for (const auto& c : report.at(r).jordan)
    if (c.is_unipotent()) ++total;
  if (r > 0) {
    for (const auto& b : report.at(r - 1).bars)
      if (!b.left_closed && !b.right_closed) ++total;
    for (const auto& c : report.at(r - 1).jordan)
      if (c.is_unipotent()) ++total;
  }
  return total;
}

FieldMatrix block_matrix(const CyclicQuiverRep& rep) {
  rep.validate();
  const std::size_t m = rep.m;
  std::vector<std::size_t> row_at(m + 1, 0), col_at(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    row_at[i + 1] = row_at[i] + rep.d[i];
    col_at[i + 1] = col_at[i] + rep.n[i];
  }
  FieldMatrix out(rep.field, row_at[m], col_at[m]);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t next = (i + 1) % m;
    for (std::size_t a = 0; a < rep.d[i]; ++a) {
      for (std::size_t b = 0; b < rep.n[i]; ++b)
        out.set(row_at[i] + a, col_at[i] + b, rep.alpha[i](a, b));
      for (std::size_t b = 0; b < rep.n[next]; ++b) {
        Scalar cur = out(row_at[i] + a, col_at[next] + b);
        out.set(row_at[i] + a, col_at[next] + b, rep.field.sub(cur, rep.beta[i](a, b)));
      }
    }
  }
  return out;
}

std::size_t dk(const CyclicQuiverRep& rep) {
  FieldMatrix mat = block_matrix(rep);
  return mat.cols() - rank(mat);
}

std::size_t dck(const CyclicQuiverRep& rep) {
  FieldMatrix mat = block_matrix(rep);
  return mat.rows() - rank(mat);
}

std::vector<EqfRow> verify_eqf(const std::map<int, CyclicQuiverRep>& reps, const std::map<int, std::size_t>& direct_betti) {
  std::vector<EqfRow> out;
  for (const auto& [r, direct] : direct_betti) {
    EqfRow row;
    row.r = r;
    row.direct = direct;
    if (auto it = reps.find(r); it != reps.end()) row.coker = dck(it->second);
    if (auto it = reps.find(r - 1); it != reps.end()) row.ker_below = dk(it->second);
    out.push_back(row);
  }
  return out;
}

Scalar spiral_radius(const Scalar& start, const Scalar& end, const Scalar& angle) {
  Scalar span = end - start;
  return angle / span + (end - 2 * start) / span + 1;
}

std::vector<std::pair<double, double>> spiral_points(const CircleBarCode& bar, const std::vector<Scalar>& s,
                                                     std::size_t samples_per_turn) {
  const Scalar lo = bar.start(s), hi = bar.end(s);
  auto point = [](double radius, double turns) {
    double a = 2 * std::numbers::pi * turns;
    return std::make_pair(radius * std::cos(a), radius * std::sin(a));
  };
  std::vector<std::pair<double, double>> out;
  if (lo == hi) {
    out.push_back(point(2.0, lo.get_d()));
    return out;
  }
  Scalar span = hi - lo;
  std::size_t steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span.get_d() * static_cast<double>(samples_per_turn))));
  for (std::size_t i = 0; i <= steps; ++i) {
    Scalar frac(static_cast<long>(i), static_cast<long>(steps));
    frac.canonicalize();
    Scalar a = lo + span * frac;
    out.push_back(point(spiral_radius(lo, hi, a).get_d(), a.get_d()));
  }
  return out;
}

}  // namespace circpers
