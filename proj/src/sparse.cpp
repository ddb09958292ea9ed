#include "circpers/sparse.hpp"

namespace circpers {

SparseVector SparseVector::unit(std::size_t index) {
  SparseVector v;
  v.entries_.push_back({index, Scalar(1)});
  return v;
}

SparseVector SparseVector::from_dense(const Field& f, const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Scalar c = f.canon(v[i]);
    if (sgn(c) != 0) s.entries_.push_back({i, c});
  }
  return s;
}

Scalar SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return Scalar(0);
}

void SparseVector::push_back(std::size_t index, const Scalar& value) {
  if (!entries_.empty() && entries_.back().index >= index) throw InternalError("SparseVector::push_back out of order");
  if (sgn(value) != 0) entries_.push_back({index, value});
}

void SparseVector::axpy(const Field& f, const Scalar& c, const SparseVector& other) {
  if (sgn(c) == 0 || other.entries_.empty()) return;
  std::vector<SparseEntry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin(), ae = entries_.end();
  auto b = other.entries_.begin(), be = other.entries_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->index < b->index)) {
      out.push_back(std::move(*a++));
    } else if (a == ae || b->index < a->index) {
      out.push_back({b->index, f.mul(c, b->value)});
      ++b;
    } else {
      Scalar v = f.add(a->value, f.mul(c, b->value));
      if (sgn(v) != 0) out.push_back({a->index, std::move(v)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVector::scale(const Field& f, const Scalar& c) {
  if (sgn(c) == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.value = f.mul(c, e.value);
}

Vector SparseVector::to_dense(std::size_t length) const {
  Vector v(length);
  for (const auto& e : entries_) {
    if (e.index >= length) throw InternalError("SparseVector::to_dense index out of range");
    v[e.index] = e.value;
  }
  return v;
}

bool SparseVector::operator==(const SparseVector& o) const {
  if (entries_.size() != o.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].index != o.entries_[i].index || entries_[i].value != o.entries_[i].value) return false;
  return true;
}

Reducer::Result Reducer::reduce(SparseVector v) const {
  Result r;
  while (!v.empty()) {
    auto it = by_pivot_.find(v.pivot());
    if (it == by_pivot_.end()) break;
    const Column& col = columns_[it->second];
    Scalar c = field_.div(v.pivot_value(), col.vec.pivot_value());
    v.axpy(field_, field_.neg(c), col.vec);
    r.tag.axpy(field_, c, col.tag);
  }
  r.remainder = std::move(v);
  return r;
}

bool Reducer::insert(SparseVector v, SparseVector tag, SparseVector* relation) {
  while (!v.empty()) {
    auto it = by_pivot_.find(v.pivot());
    if (it == by_pivot_.end()) break;
    const Column& col = columns_[it->second];
    Scalar c = field_.neg(field_.div(v.pivot_value(), col.vec.pivot_value()));
    v.axpy(field_, c, col.vec);
    tag.axpy(field_, c, col.tag);
  }
  if (v.empty()) {
    if (relation) *relation = std::move(tag);
    return false;
  }
  by_pivot_[v.pivot()] = columns_.size();
  columns_.push_back({std::move(v), std::move(tag)});
  return true;
}

}  // namespace circpers
