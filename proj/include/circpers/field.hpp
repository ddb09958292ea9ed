// Exact coefficient fields (Z/p and the rationals) and dense matrices over them.

#ifndef CIRCPERS_FIELD_HPP
#define CIRCPERS_FIELD_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace circpers {

/// Exact scalar. Over Z/p the value is always an integer in [0, p).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Malformed user input (files, field specs, maps that violate their invariants).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A consistency check inside the library failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Pivot preference used by every elimination routine. The default picks the
/// lowest-index pivot; the reversed order exists so callers can check that
/// results do not depend on basis choices.
enum class PivotOrder { kLowestFirst, kHighestFirst };

class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(unsigned long p);
  /// "q" or "zp:<prime>".
  static Field parse(std::string_view spec);

  bool is_rationals() const { return p_ == 0; }
  unsigned long characteristic() const { return p_; }
  std::string spec() const;

  /// Maps an arbitrary rational into the field (throws if the denominator
  /// vanishes mod p).
  Scalar canon(const Scalar& x) const;
  Scalar from_int(long v) const { return canon(Scalar(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  /// a - c*b, the elimination workhorse.
  Scalar sub_mul(const Scalar& a, const Scalar& c, const Scalar& b) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;
};

bool is_prime(unsigned long n);

/// Canonical "p/q" rendering (denominator always present).
std::string fraction_string(const Scalar& x);
/// Parses "p", "p/q" or "-p/q".
Scalar parse_fraction(std::string_view text);

class FieldMatrix {
 public:
  FieldMatrix() : field_(Field::rationals()) {}
  FieldMatrix(Field field, std::size_t rows, std::size_t cols);

  static FieldMatrix identity(Field field, std::size_t n);
  static FieldMatrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows);
  static FieldMatrix from_ints(Field field, const std::vector<std::vector<long>>& rows);
  static FieldMatrix column_vector(Field field, const Vector& v);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores the canonical image of value.
  void set(std::size_t r, std::size_t c, const Scalar& value);

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  FieldMatrix transpose() const;
  FieldMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void put_block(std::size_t r0, std::size_t c0, const FieldMatrix& b);
  FieldMatrix hconcat(const FieldMatrix& right) const;
  FieldMatrix vconcat(const FieldMatrix& below) const;
  FieldMatrix select_columns(const std::vector<std::size_t>& cols) const;

  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix scaled(const Scalar& c) const;
  Vector apply(const Vector& v) const;

  bool is_zero() const;
  bool operator==(const FieldMatrix& o) const;
  bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form together with the row transform E (E * M = R).
struct Echelon {
  FieldMatrix reduced;
  FieldMatrix transform;
  std::vector<std::size_t> pivot_cols;  // pivot column of row r, r < rank
  std::size_t rank() const { return pivot_cols.size(); }
};

Echelon row_echelon(const FieldMatrix& m, PivotOrder order = PivotOrder::kLowestFirst);

std::size_t rank(const FieldMatrix& m, PivotOrder order = PivotOrder::kLowestFirst);
/// Columns form a basis of the null space.
FieldMatrix kernel_basis(const FieldMatrix& m, PivotOrder order = PivotOrder::kLowestFirst);
/// Some x with m*x = b (free variables zero), or nothing.
std::optional<Vector> solve_membership(const FieldMatrix& m, const Vector& b,
                                       PivotOrder order = PivotOrder::kLowestFirst);
/// A linear right inverse on the image: m * section(m) * y = y for y in im m.
FieldMatrix section(const FieldMatrix& m, PivotOrder order = PivotOrder::kLowestFirst);
std::optional<FieldMatrix> inverse(const FieldMatrix& m);
/// Columns form a basis of the column space (a subset of the input columns).
FieldMatrix column_space(const FieldMatrix& m, PivotOrder order = PivotOrder::kLowestFirst);
/// dim(span(a) ∩ span(b)) for column spans in a common space.
std::size_t intersection_dim(const FieldMatrix& a, const FieldMatrix& b);
/// Basis (columns) of span(a) ∩ span(b).
FieldMatrix intersection_basis(const FieldMatrix& a, const FieldMatrix& b);
bool in_column_span(const FieldMatrix& m, const Vector& v);

}  // namespace circpers

#endif  // CIRCPERS_FIELD_HPP
