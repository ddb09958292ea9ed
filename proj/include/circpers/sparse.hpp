// Sparse chain vectors and an incremental column reducer (pivot = largest index).

#ifndef CIRCPERS_SPARSE_HPP
#define CIRCPERS_SPARSE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "circpers/field.hpp"

namespace circpers {

struct SparseEntry {
  std::size_t index;
  Scalar value;
};

/// Entries sorted by index, no explicit zeros.
class SparseVector {
 public:
  SparseVector() = default;
  static SparseVector unit(std::size_t index);
  static SparseVector from_dense(const Field& f, const Vector& v);

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<SparseEntry>& entries() const { return entries_; }
  /// Largest index carrying a nonzero; requires !empty().
  std::size_t pivot() const { return entries_.back().index; }
  const Scalar& pivot_value() const { return entries_.back().value; }
  Scalar at(std::size_t index) const;

  /// Appends an entry; indices must arrive in increasing order.
  void push_back(std::size_t index, const Scalar& value);
  /// this += c * other
  void axpy(const Field& f, const Scalar& c, const SparseVector& other);
  void scale(const Field& f, const Scalar& c);
  Vector to_dense(std::size_t length) const;

  bool operator==(const SparseVector& o) const;

 private:
  std::vector<SparseEntry> entries_;
};

/// Gaussian column elimination with an optional companion ("tag") vector per
/// column, used to remember which combination of inputs a column represents.
class Reducer {
 public:
  explicit Reducer(Field field) : field_(field) {}

  struct Result {
    SparseVector remainder;
    /// input = sum of coefficient * stored column + remainder, written in tag coordinates
    SparseVector tag;
  };

  /// Reduces v as far as the stored columns allow.
  Result reduce(SparseVector v) const;
  /// Reduces v (carrying the tag along) and stores the remainder if it is
  /// nonzero; returns true when a new pivot was added. When v reduces to
  /// zero the accumulated tag (a relation among inputs) goes to *relation.
  bool insert(SparseVector v, SparseVector tag = {}, SparseVector* relation = nullptr);

  std::size_t rank() const { return columns_.size(); }
  bool has_pivot(std::size_t row) const { return by_pivot_.count(row) > 0; }
  const Field& field() const { return field_; }

 private:
  struct Column {
    SparseVector vec;
    SparseVector tag;
  };
  Field field_;
  std::vector<Column> columns_;
  std::unordered_map<std::size_t, std::size_t> by_pivot_;
};

}  // namespace circpers

#endif  // CIRCPERS_SPARSE_HPP
