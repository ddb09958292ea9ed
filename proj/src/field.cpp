#include "circpers/field.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace circpers {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(unsigned long p) {
  if (!is_prime(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
  // products of two residues must fit in unsigned __int128 arithmetic below
  if (p > 0xFFFFFFFFul) throw InputError("field modulus too large");
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.rfind("zp:", 0) == 0) {
    std::string_view digits = spec.substr(3);
    unsigned long p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw InputError("bad field spec '" + std::string(spec) + "'");
    }
    return prime(p);
  }
  throw InputError("bad field spec '" + std::string(spec) + "' (expected q or zp:<prime>)");
}

std::string Field::spec() const { return p_ == 0 ? "q" : "zp:" + std::to_string(p_); }

namespace {

unsigned long residue(const mpz_class& z, unsigned long p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

unsigned long pow_mod(unsigned long a, unsigned long e, unsigned long p) {
  unsigned __int128 result = 1, base = a % p;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<unsigned long>(result);
}

}  // namespace

Scalar Field::canon(const Scalar& x) const {
  if (p_ == 0) return x;
  unsigned long num = residue(x.get_num(), p_);
  unsigned long den = residue(x.get_den(), p_);
  if (den == 0) throw InputError("value " + x.get_str() + " is undefined mod " + std::to_string(p_));
  if (den == 1) return Scalar(num);
  unsigned __int128 v = static_cast<unsigned __int128>(num) * pow_mod(den, p_ - 2, p_) % p_;
  return Scalar(static_cast<unsigned long>(v));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  unsigned long s = a.get_num().get_ui() + b.get_num().get_ui();
  if (s >= p_) s -= p_;
  return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  unsigned long x = a.get_num().get_ui(), y = b.get_num().get_ui();
  return Scalar(x >= y ? x - y : x + p_ - y);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  unsigned __int128 v = static_cast<unsigned __int128>(a.get_num().get_ui()) * b.get_num().get_ui();
  return Scalar(static_cast<unsigned long>(v % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  unsigned long x = a.get_num().get_ui();
  return Scalar(x == 0 ? 0ul : p_ - x);
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw InternalError("division by zero in field " + spec());
  if (p_ == 0) return 1 / a;
  return Scalar(pow_mod(a.get_num().get_ui(), p_ - 2, p_));
}

Scalar Field::sub_mul(const Scalar& a, const Scalar& c, const Scalar& b) const {
  if (p_ == 0) return a - c * b;
  return sub(a, mul(c, b));
}

std::string fraction_string(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Scalar parse_fraction(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty number");
  Scalar q;
  if (q.set_str(s, 10) != 0) throw InputError("bad number '" + s + "'");
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

FieldMatrix FieldMatrix::identity(Field field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  FieldMatrix m(field, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FieldMatrix FieldMatrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> q;
  for (const auto& row : rows) q.emplace_back(row.begin(), row.end());
  return from_rows(field, q);
}

FieldMatrix FieldMatrix::column_vector(Field field, const Vector& v) {
  FieldMatrix m(field, v.size(), 1);
  for (std::size_t r = 0; r < v.size(); ++r) m.set(r, 0, v[r]);
  return m;
}

void FieldMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  data_[r * cols_ + c] = field_.canon(value);
}

Vector FieldMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector FieldMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void FieldMatrix::set_column(std::size_t c, const Vector& v) {
  for (std::size_t r = 0; r < rows_; ++r) set(r, c, v[r]);
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

FieldMatrix FieldMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InternalError("block out of range");
  FieldMatrix b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b.data_[r * nc + c] = (*this)(r0 + r, c0 + c);
  return b;
}

void FieldMatrix::put_block(std::size_t r0, std::size_t c0, const FieldMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw InternalError("put_block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) data_[(r0 + r) * cols_ + c0 + c] = b(r, c);
}

FieldMatrix FieldMatrix::hconcat(const FieldMatrix& right) const {
  if (rows_ != right.rows_) throw InternalError("hconcat row mismatch");
  FieldMatrix m(field_, rows_, cols_ + right.cols_);
  m.put_block(0, 0, *this);
  m.put_block(0, cols_, right);
  return m;
}

FieldMatrix FieldMatrix::vconcat(const FieldMatrix& below) const {
  if (cols_ != below.cols_) throw InternalError("vconcat column mismatch");
  FieldMatrix m(field_, rows_ + below.rows_, cols_);
  m.put_block(0, 0, *this);
  m.put_block(rows_, 0, below);
  return m;
}

FieldMatrix FieldMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  FieldMatrix m(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r) m.data_[r * cols.size() + j] = (*this)(r, cols[j]);
  return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_) throw InternalError("matrix product shape mismatch");
  FieldMatrix m(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (sgn(b) == 0) continue;
        Scalar& t = m.data_[i * o.cols_ + j];
        t = field_.add(t, field_.mul(a, b));
      }
    }
  }
  return m;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix sum shape mismatch");
  FieldMatrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = field_.add(data_[i], o.data_[i]);
  return m;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix difference shape mismatch");
  FieldMatrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = field_.sub(data_[i], o.data_[i]);
  return m;
}

FieldMatrix FieldMatrix::scaled(const Scalar& c) const {
  FieldMatrix m(field_, rows_, cols_);
  Scalar cc = field_.canon(c);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = field_.mul(cc, data_[i]);
  return m;
}

Vector FieldMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InternalError("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] = field_.add(out[r], field_.mul((*this)(r, c), v[c]));
  return out;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string FieldMatrix::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "," : "") << "(";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
    os << ")";
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

Echelon row_echelon(const FieldMatrix& m, PivotOrder order) {
  const Field& f = m.field();
  const std::size_t nr = m.rows(), nc = m.cols();
  FieldMatrix a = m;
  FieldMatrix e = FieldMatrix::identity(f, nr);
  Echelon out;

  std::vector<std::size_t> col_order(nc);
  std::iota(col_order.begin(), col_order.end(), 0);
  if (order == PivotOrder::kHighestFirst) std::reverse(col_order.begin(), col_order.end());

  auto swap_rows = [](FieldMatrix& x, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < x.cols(); ++c) {
      Scalar t = x(i, c);
      x.set(i, c, x(j, c));
      x.set(j, c, t);
    }
  };

  std::size_t row = 0;
  for (std::size_t col : col_order) {
    if (row == nr) break;
    std::size_t piv = nr;
    for (std::size_t r = row; r < nr; ++r) {
      if (sgn(a(r, col)) != 0) {
        piv = r;
        break;
      }
    }
    if (piv == nr) continue;
    swap_rows(a, row, piv);
    swap_rows(e, row, piv);
    Scalar inv = f.inv(a(row, col));
    for (std::size_t c = 0; c < nc; ++c) a.set(row, c, f.mul(inv, a(row, c)));
    for (std::size_t c = 0; c < nr; ++c) e.set(row, c, f.mul(inv, e(row, c)));
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == row) continue;
      Scalar factor = a(r, col);
      if (sgn(factor) == 0) continue;
      for (std::size_t c = 0; c < nc; ++c)
        if (sgn(a(row, c)) != 0) a.set(r, c, f.sub_mul(a(r, c), factor, a(row, c)));
      for (std::size_t c = 0; c < nr; ++c)
        if (sgn(e(row, c)) != 0) e.set(r, c, f.sub_mul(e(r, c), factor, e(row, c)));
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  out.transform = std::move(e);
  return out;
}

std::size_t rank(const FieldMatrix& m, PivotOrder order) {
  if (m.empty()) return 0;
  // rank needs no transform; eliminate on a copy directly
  const Field& f = m.field();
  FieldMatrix a = m;
  std::size_t nr = a.rows(), nc = a.cols(), row = 0;
  std::vector<Scalar> tmp;
  for (std::size_t k = 0; k < nc && row < nr; ++k) {
    std::size_t col = order == PivotOrder::kLowestFirst ? k : nc - 1 - k;
    std::size_t piv = nr;
    for (std::size_t r = row; r < nr; ++r)
      if (sgn(a(r, col)) != 0) {
        piv = r;
        break;
      }
    if (piv == nr) continue;
    if (piv != row)
      for (std::size_t c = 0; c < nc; ++c) {
        Scalar t = a(row, c);
        a.set(row, c, a(piv, c));
        a.set(piv, c, t);
      }
    Scalar inv = f.inv(a(row, col));
    for (std::size_t r = row + 1; r < nr; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      Scalar factor = f.mul(a(r, col), inv);
      for (std::size_t c = 0; c < nc; ++c)
        if (sgn(a(row, c)) != 0) a.set(r, c, f.sub_mul(a(r, c), factor, a(row, c)));
    }
    ++row;
  }
  return row;
}

FieldMatrix kernel_basis(const FieldMatrix& m, PivotOrder order) {
  const Field& f = m.field();
  const std::size_t nc = m.cols();
  if (m.rows() == 0) return FieldMatrix::identity(f, nc);
  Echelon ech = row_echelon(m, order);
  std::vector<bool> is_pivot(nc, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < nc; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  if (order == PivotOrder::kHighestFirst) std::reverse(free_cols.begin(), free_cols.end());
  FieldMatrix basis(f, nc, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis.set(fc, k, 1);
    for (std::size_t r = 0; r < ech.rank(); ++r) basis.set(ech.pivot_cols[r], k, f.neg(ech.reduced(r, fc)));
  }
  return basis;
}

std::optional<Vector> solve_membership(const FieldMatrix& m, const Vector& b, PivotOrder order) {
  if (b.size() != m.rows()) throw InternalError("solve_membership: right-hand side length mismatch");
  const Field& f = m.field();
  Vector bb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) bb[i] = f.canon(b[i]);
  if (m.rows() == 0) return Vector(m.cols());
  Echelon ech = row_echelon(m, order);
  Vector eb = ech.transform.apply(bb);
  for (std::size_t r = ech.rank(); r < eb.size(); ++r)
    if (sgn(eb[r]) != 0) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < ech.rank(); ++r) x[ech.pivot_cols[r]] = eb[r];
  return x;
}

FieldMatrix section(const FieldMatrix& m, PivotOrder order) {
  const Field& f = m.field();
  FieldMatrix s(f, m.cols(), m.rows());
  if (m.rows() == 0 || m.cols() == 0) return s;
  Echelon ech = row_echelon(m, order);
  for (std::size_t r = 0; r < ech.rank(); ++r)
    for (std::size_t c = 0; c < m.rows(); ++c) s.set(ech.pivot_cols[r], c, ech.transform(r, c));
  return s;
}

std::optional<FieldMatrix> inverse(const FieldMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return m;
  Echelon ech = row_echelon(m);
  if (ech.rank() != m.rows()) return std::nullopt;
  return ech.transform;
}

FieldMatrix column_space(const FieldMatrix& m, PivotOrder order) {
  if (m.rows() == 0 || m.cols() == 0) return FieldMatrix(m.field(), m.rows(), 0);
  Echelon ech = row_echelon(m, order);
  std::vector<std::size_t> cols = ech.pivot_cols;
  std::sort(cols.begin(), cols.end());
  return m.select_columns(cols);
}

std::size_t intersection_dim(const FieldMatrix& a, const FieldMatrix& b) {
  return rank(a) + rank(b) - rank(a.hconcat(b));
}

FieldMatrix intersection_basis(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix ab = column_space(a);
  FieldMatrix bb = column_space(b);
  // [A | -B] (x, y) = 0  =>  A x lies in both spans
  FieldMatrix k = kernel_basis(ab.hconcat(bb.scaled(-1)));
  FieldMatrix coeff = k.block(0, 0, ab.cols(), k.cols());
  return column_space(ab * coeff);
}

bool in_column_span(const FieldMatrix& m, const Vector& v) {
  return solve_membership(m, v).has_value();
}

}  // namespace circpers
