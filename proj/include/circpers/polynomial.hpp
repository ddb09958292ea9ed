// Univariate polynomials over a Field, characteristic polynomials, irreducible
// factorization and generalized Jordan decomposition.

#ifndef CIRCPERS_POLYNOMIAL_HPP
#define CIRCPERS_POLYNOMIAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "circpers/field.hpp"

namespace circpers {

class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(field) {}
  /// Coefficients from the constant term upwards.
  Polynomial(Field field, const std::vector<Scalar>& coeffs);
  static Polynomial x(Field field);
  static Polynomial constant(Field field, const Scalar& c);
  /// x - lambda
  static Polynomial linear(Field field, const Scalar& lambda);

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Polynomial monic() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& s) const;
  /// Quotient and remainder; throws on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
  Polynomial derivative() const;
  Scalar evaluate(const Scalar& at) const;
  FieldMatrix evaluate(const FieldMatrix& m) const;

  bool operator==(const Polynomial& o) const { return field_ == o.field_ && c_ == o.c_; }
  /// Orders by degree, then coefficients from the top down.
  bool operator<(const Polynomial& o) const;

  /// "x^2+1", "x-3", "x-1/3".
  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

Polynomial gcd(Polynomial a, Polynomial b);

/// det(xI - M), monic of degree n.
Polynomial char_poly(const FieldMatrix& m);

/// Distinct monic irreducible factors, sorted.
std::vector<Polynomial> irreducible_factors(const Polynomial& f);

struct GeneralizedJordanBlock {
  Polynomial factor;
  std::size_t size = 0;

  bool split() const { return factor.degree() == 1; }
  /// Root of a degree-one factor.
  Scalar eigenvalue() const { return factor.field().neg(factor.coeff(0)); }
  bool is_unipotent() const { return split() && eigenvalue() == 1; }
  bool operator==(const GeneralizedJordanBlock& o) const { return factor == o.factor && size == o.size; }
  bool operator<(const GeneralizedJordanBlock& o) const {
    if (!(factor == o.factor)) return factor < o.factor;
    return size < o.size;
  }
};

/// Similarity invariants of an invertible square matrix, one entry per
/// generalized Jordan block, sorted.
std::vector<GeneralizedJordanBlock> jordan_decomposition(const FieldMatrix& m);

/// Companion-style block realizing one generalized Jordan block: for a
/// degree-one factor this is the usual upper-triangular Jordan matrix.
FieldMatrix jordan_block_matrix(const GeneralizedJordanBlock& block);

}  // namespace circpers

#endif  // CIRCPERS_POLYNOMIAL_HPP
