#include "circpers/polynomial.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace circpers {

Polynomial::Polynomial(Field field, const std::vector<Scalar>& coeffs) : field_(field) {
  c_.reserve(coeffs.size());
  for (const auto& v : coeffs) c_.push_back(field_.canon(v));
  trim();
}

Polynomial Polynomial::x(Field field) { return Polynomial(field, {Scalar(0), Scalar(1)}); }

Polynomial Polynomial::constant(Field field, const Scalar& c) { return Polynomial(field, {c}); }

Polynomial Polynomial::linear(Field field, const Scalar& lambda) {
  return Polynomial(field, {field.neg(field.canon(lambda)), Scalar(1)});
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_.inv(c_.back()));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = field_.add(coeff(i), o.coeff(i));
  r.trim();
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = field_.sub(coeff(i), o.coeff(i));
  r.trim();
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(field_);
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = field_.add(r.c_[i + j], field_.mul(c_[i], o.c_[j]));
  }
  r.trim();
  return r;
}

Polynomial Polynomial::scaled(const Scalar& s) const {
  Polynomial r(field_);
  Scalar cs = field_.canon(s);
  for (const auto& v : c_) r.c_.push_back(field_.mul(cs, v));
  r.trim();
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw InternalError("polynomial division by zero");
  Polynomial q(field_), rem = *this;
  if (degree() < d.degree()) return {q, rem};
  q.c_.assign(static_cast<std::size_t>(degree() - d.degree() + 1), Scalar(0));
  Scalar inv_lead = field_.inv(d.leading());
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
    Scalar factor = field_.mul(rem.leading(), inv_lead);
    q.c_[shift] = factor;
    for (std::size_t i = 0; i < d.c_.size(); ++i)
      rem.c_[shift + i] = field_.sub_mul(rem.c_[shift + i], factor, d.c_[i]);
    rem.trim();
  }
  q.trim();
  return {q, rem};
}

Polynomial Polynomial::derivative() const {
  Polynomial r(field_);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(field_.mul(field_.from_int(static_cast<long>(i)), c_[i]));
  r.trim();
  return r;
}

Scalar Polynomial::evaluate(const Scalar& at) const {
  Scalar v(0), a = field_.canon(at);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = field_.add(field_.mul(v, a), *it);
  return v;
}

FieldMatrix Polynomial::evaluate(const FieldMatrix& m) const {
  if (m.rows() != m.cols()) throw InternalError("polynomial evaluation needs a square matrix");
  std::size_t n = m.rows();
  FieldMatrix acc(m.field(), n, n);
  FieldMatrix id = FieldMatrix::identity(m.field(), n);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + id.scaled(*it);
  return acc;
}

bool Polynomial::operator<(const Polynomial& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  auto coeff_text = [](const Scalar& v) { return v.get_str(); };
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Scalar& v = c_[i];
    if (sgn(v) == 0) continue;
    bool negative = sgn(v) < 0;
    Scalar mag = negative ? Scalar(-v) : v;
    // over Z/p a linear factor reads better as x - lambda
    if (!field_.is_rationals() && i == 0 && degree() == 1 && c_[1] == 1) {
      negative = true;
      mag = field_.neg(v);
    }
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (i == 0) {
      out += coeff_text(mag);
    } else {
      if (mag != 1) out += coeff_text(mag) + "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------------------

Polynomial char_poly(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("characteristic polynomial of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  FieldMatrix h = m;

  auto row_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < n; ++c) {
      Scalar t = h(a, c);
      h.set(a, c, h(b, c));
      h.set(b, c, t);
    }
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < n; ++r) {
      Scalar t = h(r, a);
      h.set(r, a, h(r, b));
      h.set(r, b, t);
    }
  };

  // similarity reduction to upper Hessenberg form
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c + 1; i < n; ++i)
      if (sgn(h(i, c)) != 0) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != c + 1) {
      row_swap(piv, c + 1);
      col_swap(piv, c + 1);
    }
    Scalar inv = f.inv(h(c + 1, c));
    for (std::size_t j = c + 2; j < n; ++j) {
      if (sgn(h(j, c)) == 0) continue;
      Scalar u = f.mul(h(j, c), inv);
      for (std::size_t k = 0; k < n; ++k) h.set(j, k, f.sub_mul(h(j, k), u, h(c + 1, k)));
      for (std::size_t k = 0; k < n; ++k) h.set(k, c + 1, f.add(h(k, c + 1), f.mul(u, h(k, j))));
    }
  }

  std::vector<Polynomial> p;
  p.push_back(Polynomial::constant(f, 1));
  Polynomial x = Polynomial::x(f);
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial next = (x - Polynomial::constant(f, h(k - 1, k - 1))) * p[k - 1];
    Scalar prod(1);
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = f.mul(prod, h(i + 1, i));
      Scalar coef = f.mul(h(i, k - 1), prod);
      if (sgn(coef) != 0) next = next - p[i].scaled(coef);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

// ---------------------------------------------------------------------------
// Factorization over Z/p

namespace {

Polynomial powmod(Polynomial base, const mpz_class& e, const Polynomial& mod) {
  const Field& f = mod.field();
  Polynomial result = Polynomial::constant(f, 1) % mod;
  base = base % mod;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % mod;
  }
  return result;
}

/// g with g(x)^p = f for f whose derivative vanishes over Z/p.
Polynomial pth_root(const Polynomial& f) {
  unsigned long p = f.field().characteristic();
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return Polynomial(f.field(), c);
}

void equal_degree_split(const Polynomial& h, int d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  if (h.degree() == d) {
    out.push_back(h.monic());
    return;
  }
  const Field& f = h.field();
  unsigned long p = f.characteristic();
  std::uniform_int_distribution<unsigned long> coin(0, p - 1);
  for (;;) {
    std::vector<Scalar> c(static_cast<std::size_t>(h.degree()));
    for (auto& v : c) v = Scalar(coin(rng));
    Polynomial a(f, c);
    if (a.degree() < 1) continue;
    Polynomial b(f);
    if (p == 2) {
      Polynomial term = a % h;
      b = term;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % h;
        b = b + term;
      }
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = powmod(a, e, h) - Polynomial::constant(f, 1);
    }
    Polynomial g = gcd(h, b);
    if (g.degree() > 0 && g.degree() < h.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(h / g, d, rng, out);
      return;
    }
  }
}

/// Irreducible factors of a monic squarefree polynomial over Z/p.
void factor_squarefree_mod_p(Polynomial f, std::vector<Polynomial>& out) {
  const Field& fld = f.field();
  std::mt19937_64 rng(0x5eedc1cull);
  Polynomial x = Polynomial::x(fld);
  Polynomial w = x;
  mpz_class p(fld.characteristic());
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    w = powmod(w, p, f);
    Polynomial g = gcd(f, w - x);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      f = f / g;
      w = w % f;
    }
  }
  if (f.degree() > 0) out.push_back(f.monic());
}

void distinct_factors_mod_p(const Polynomial& f, std::vector<Polynomial>& out) {
  if (f.degree() < 1) return;
  Polynomial df = f.derivative();
  if (df.is_zero()) {
    distinct_factors_mod_p(pth_root(f), out);
    return;
  }
  Polynomial g = gcd(f, df);
  factor_squarefree_mod_p((f / g).monic(), out);
  distinct_factors_mod_p(g, out);
}

// ---------------------------------------------------------------------------
// Factorization over Q (Kronecker's method, pruned by a modular degree pattern)

using ZPoly = std::vector<mpz_class>;

ZPoly primitive_integer(const Polynomial& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z;
  mpz_class g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_class v = c.get_num() * (l / c.get_den());
    z.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 0)
    for (auto& v : z) v /= g;
  return z;
}

mpz_class eval_z(const ZPoly& f, long a) {
  mpz_class v = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * a + *it;
  return v;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> primes;
  for (unsigned long d = 2; d < 100000 && mpz_class(d) * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
        n /= d;
        ++e;
      }
      primes.emplace_back(mpz_class(d), e);
    }
  }
  // a leftover cofactor is treated as prime
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : primes) {
    std::size_t sz = divs.size();
    mpz_class pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= q;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

/// Monic factor of degree e of the squarefree rational f, if one exists.
std::optional<Polynomial> kronecker_factor(const Polynomial& f, int e) {
  const Field& q = f.field();
  ZPoly z = primitive_integer(f);
  std::vector<long> pts;
  std::vector<std::vector<mpz_class>> values;
  for (long k = 0; static_cast<int>(pts.size()) <= e; ++k) {
    long a = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
    mpz_class v = eval_z(z, a);
    if (v == 0) return Polynomial::linear(q, Scalar(a));
    std::vector<mpz_class> d = positive_divisors(v);
    std::vector<mpz_class> signed_d;
    for (const auto& x : d) {
      signed_d.push_back(x);
      signed_d.push_back(-x);
    }
    pts.push_back(a);
    values.push_back(std::move(signed_d));
  }
  std::size_t budget = 2000000;
  std::vector<std::size_t> idx(pts.size(), 0);
  for (;;) {
    if (budget-- == 0) return std::nullopt;
    // Lagrange interpolation through (pts[i], values[i][idx[i]])
    Polynomial g(q);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Polynomial basis = Polynomial::constant(q, Scalar(values[i][idx[i]]));
      Scalar denom(1);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (j == i) continue;
        basis = basis * Polynomial::linear(q, Scalar(pts[j]));
        denom *= Scalar(pts[i] - pts[j]);
      }
      g = g + basis.scaled(1 / denom);
    }
    if (g.degree() == e && g.leading() > 0) {
      bool integral = std::all_of(g.coeffs().begin(), g.coeffs().end(),
                                  [](const Scalar& c) { return c.get_den() == 1; });
      if (integral && (f % g).is_zero()) return g.monic();
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == values[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) return std::nullopt;
  }
}

/// Degrees that a rational factor of f may have, read off a modular factorization.
std::set<int> admissible_degrees(const Polynomial& f) {
  std::set<int> all;
  for (int e = 1; e <= f.degree(); ++e) all.insert(e);
  ZPoly z = primitive_integer(f);
  for (unsigned long p = 3; p < 500; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(z.back().get_mpz_t(), p)) continue;
    Field fp = Field::prime(p);
    std::vector<Scalar> c;
    for (const auto& v : z) c.push_back(fp.canon(Scalar(v)));
    Polynomial fm(fp, c);
    if (gcd(fm, fm.derivative()).degree() != 0) continue;
    std::vector<Polynomial> parts;
    factor_squarefree_mod_p(fm.monic(), parts);
    std::set<int> sums{0};
    for (const auto& part : parts) {
      std::set<int> next = sums;
      for (int s : sums) next.insert(s + part.degree());
      sums = std::move(next);
    }
    sums.erase(0);
    return sums;
  }
  return all;
}

void factor_squarefree_rational(const Polynomial& f, std::vector<Polynomial>& out) {
  if (f.degree() < 1) return;
  if (f.degree() == 1) {
    out.push_back(f.monic());
    return;
  }
  std::set<int> degrees = admissible_degrees(f);
  for (int e = 1; 2 * e <= f.degree(); ++e) {
    if (!degrees.count(e)) continue;
    if (auto g = kronecker_factor(f, e)) {
      out.push_back(*g);
      factor_squarefree_rational(f / *g, out);
      return;
    }
  }
  out.push_back(f.monic());
}

}  // namespace

std::vector<Polynomial> irreducible_factors(const Polynomial& f) {
  std::vector<Polynomial> out;
  if (f.degree() < 1) return out;
  if (f.field().is_rationals()) {
    Polynomial g = gcd(f, f.derivative());
    factor_squarefree_rational((f / g).monic(), out);
  } else {
    distinct_factors_mod_p(f.monic(), out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GeneralizedJordanBlock> jordan_decomposition(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("Jordan decomposition of a non-square matrix");
  const std::size_t n = m.rows();
  if (rank(m) != n) throw InputError("Jordan decomposition requires an invertible matrix");
  std::vector<GeneralizedJordanBlock> blocks;
  for (const auto& g : irreducible_factors(char_poly(m))) {
    std::size_t deg = static_cast<std::size_t>(g.degree());
    FieldMatrix a = g.evaluate(m);
    FieldMatrix power = FieldMatrix::identity(m.field(), n);
    std::vector<std::size_t> ranks{n};
    for (;;) {
      power = power * a;
      std::size_t r = rank(power);
      if (r == ranks.back()) break;
      ranks.push_back(r);
    }
    // #blocks of size >= j is (ranks[j-1] - ranks[j]) / deg
    std::vector<std::size_t> at_least;
    for (std::size_t j = 1; j < ranks.size(); ++j) {
      if ((ranks[j - 1] - ranks[j]) % deg != 0) throw InternalError("rank drop not a multiple of factor degree");
      at_least.push_back((ranks[j - 1] - ranks[j]) / deg);
    }
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      std::size_t longer = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (std::size_t c = 0; c < at_least[j] - longer; ++c) blocks.push_back({g, j + 1});
    }
  }
  std::sort(blocks.begin(), blocks.end());
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size * static_cast<std::size_t>(b.factor.degree());
  if (total != n) throw InternalError("Jordan blocks do not fill the matrix");
  return blocks;
}

FieldMatrix jordan_block_matrix(const GeneralizedJordanBlock& block) {
  const Field& f = block.factor.field();
  if (block.split()) {
    FieldMatrix j(f, block.size, block.size);
    for (std::size_t i = 0; i < block.size; ++i) {
      j.set(i, i, block.eigenvalue());
      if (i + 1 < block.size) j.set(i, i + 1, 1);
    }
    return j;
  }
  // companion matrix of factor^size
  Polynomial g = Polynomial::constant(f, 1);
  for (std::size_t i = 0; i < block.size; ++i) g = g * block.factor;
  const std::size_t n = static_cast<std::size_t>(g.degree());
  FieldMatrix j(f, n, n);
  for (std::size_t i = 1; i < n; ++i) j.set(i, i - 1, 1);
  for (std::size_t i = 0; i < n; ++i) j.set(i, n - 1, f.neg(g.coeff(i)));
  return j;
}

}  // namespace circpers
