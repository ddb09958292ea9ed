// Representations of the cyclic quiver G_2m and of its linear (open) version,
// their decomposition by chain splitting, monodromy and model representations.

#ifndef CIRCPERS_QUIVER_HPP
#define CIRCPERS_QUIVER_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "circpers/complex.hpp"
#include "circpers/field.hpp"
#include "circpers/polynomial.hpp"

namespace circpers {

/// Positions x_1 .. x_2m; alpha_i : x_{2i-1} -> x_{2i}, beta_i : x_{2i+1} -> x_{2i}
/// with x_{2m+1} = x_1. Vectors are 0-based: alpha[i-1] is alpha_i.
struct CyclicQuiverRep {
  Field field = Field::rationals();
  std::size_t m = 0;
  std::vector<std::size_t> n, d;
  std::vector<FieldMatrix> alpha, beta;

  static CyclicQuiverRep zero(Field field, std::size_t m);
  /// Throws InputError on shape mismatches.
  void validate() const;
  std::size_t total_dim() const;
  CyclicQuiverRep direct_sum(const CyclicQuiverRep& o) const;
  std::vector<std::size_t> dimension_vector() const;  // n_1, d_1, ..., n_m, d_m
};

/// Positions x_1 .. x_{2m+1}, no wrap: alpha_i : x_{2i-1} -> x_{2i},
/// beta_i : x_{2i+1} -> x_{2i}.
struct LinearQuiverRep {
  Field field = Field::rationals();
  std::size_t m = 0;
  std::vector<std::size_t> n;  // m + 1 entries
  std::vector<std::size_t> d;  // m entries
  std::vector<FieldMatrix> alpha, beta;

  void validate() const;
  std::size_t total_dim() const;
};

/// Interval {s_i, s_j + k turns}. Indices are 1-based critical indices.
struct CircleBarCode {
  std::size_t i = 1, j = 1, k = 0;
  bool left_closed = true, right_closed = true;

  /// Endpoint angles as fractions of a turn.
  Scalar start(const std::vector<Scalar>& s) const { return s.at(i - 1); }
  Scalar end(const std::vector<Scalar>& s) const { return s.at(j - 1) + Scalar(static_cast<long>(k)); }
  bool valid(std::size_t m) const;
  /// e.g. "(s6,s1+1]"
  std::string to_string() const;
  auto key() const { return std::tuple(i, j, k, left_closed, right_closed); }
  bool operator==(const CircleBarCode& o) const { return key() == o.key(); }
  bool operator<(const CircleBarCode& o) const { return key() < o.key(); }
};

/// Bar of a linear representation: closure flags refer to the critical
/// positions c_start, c_end (1-based even-vertex indices). A bar that reaches
/// x_1 or x_{2m+1} is marked as touching that boundary and is recorded as
/// closed at c_1 or c_m.
struct LinearBar {
  std::size_t start = 1, end = 1;
  bool left_closed = true, right_closed = true;
  bool touches_left = false, touches_right = false;

  auto key() const { return std::tuple(start, end, left_closed, right_closed, touches_left, touches_right); }
  bool operator==(const LinearBar& o) const { return key() == o.key(); }
  bool operator<(const LinearBar& o) const { return key() < o.key(); }
  std::string to_string() const;
};

struct ChainWitness {
  /// 1-based start position (1..2m cyclic, 1..2m+1 linear)
  std::size_t p = 1;
  std::vector<Vector> h;  // h_p, ..., h_{p+l-1}
  std::size_t length() const { return h.size(); }
};

struct Decomposition {
  std::vector<CircleBarCode> bars;
  std::vector<GeneralizedJordanBlock> jordan;
  bool operator==(const Decomposition& o) const { return bars == o.bars && jordan == o.jordan; }
};

/// Pivot preference for every kernel, image and preimage choice made while
/// decomposing; results must not depend on it.
struct DecomposeOptions {
  PivotOrder order = PivotOrder::kLowestFirst;
};

/// rho_r: V_{x_{2i-1}} = H_r(X_{t_i}), V_{x_{2i}} = H_r(X_{[t_i, t_{i+1}]}), maps
/// induced by inclusion. The cut must contain every t_i.
CyclicQuiverRep build_representation(const CutComplex& cut, const CriticalStructure& crit, int r, Field field);

/// Chain of length exactly l from start position p, if one exists.
std::optional<ChainWitness> find_chain(const CyclicQuiverRep& rep, std::size_t p, std::size_t l,
                                       const DecomposeOptions& opt = {});
/// Splits off the summand spanned by the chain; returns its bar and the remainder.
std::pair<CircleBarCode, CyclicQuiverRep> split_chain(const CyclicQuiverRep& rep, const ChainWitness& chain);
/// T_i = beta_i^-1 alpha_i beta_{i-1}^-1 alpha_{i-1} ... acting on x_{2i+1}.
FieldMatrix monodromy(const CyclicQuiverRep& rep, std::size_t i);

Decomposition decompose(const CyclicQuiverRep& rep, const DecomposeOptions& opt = {});
std::vector<LinearBar> decompose_linear(const LinearQuiverRep& rep, const DecomposeOptions& opt = {});

/// The bar produced by an l-chain starting at position p (cyclic, m critical angles).
CircleBarCode bar_of_chain(std::size_t p, std::size_t l, std::size_t m);
CyclicQuiverRep synthesize_model(const CircleBarCode& bar, std::size_t m, Field field);
/// rho^J: alpha_1 is the (generalized) Jordan block, all other maps the identity.
CyclicQuiverRep synthesize_model(const GeneralizedJordanBlock& cell, std::size_t m);

/// The dimension vector (n_1, d_1, ..., n_m, d_m) given by the closed-form interval table
/// for rho^I(interval, k) with its own index convention (k counts full
/// turns the spiral makes, see README).
std::vector<std::size_t> ap1_dimensions(const CircleBarCode& bar, std::size_t m);

}  // namespace circpers

#endif  // CIRCPERS_QUIVER_HPP
