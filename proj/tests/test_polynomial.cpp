#include <algorithm>

#include "doctest.h"
#include "circpers/polynomial.hpp"

using namespace circpers;

namespace {

std::vector<std::pair<std::string, std::size_t>> cells(const FieldMatrix& m) {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& b : jordan_decomposition(m)) out.emplace_back(b.factor.to_string(), b.size);
  std::sort(out.begin(), out.end());
  return out;
}

using Cells = std::vector<std::pair<std::string, std::size_t>>;

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("printing and arithmetic") {
  Field q = Field::rationals();
  auto x = Polynomial::x(q);
  CHECK((x * x + Polynomial::constant(q, 1)).to_string() == "x^2+1");
  CHECK(Polynomial::linear(q, 3).to_string() == "x-3");
  CHECK(Polynomial::linear(q, Scalar(1, 3)).to_string() == "x-1/3");
  auto [quo, rem] = (x * x - Polynomial::constant(q, 1)).divmod(Polynomial::linear(q, 1));
  CHECK(quo == Polynomial::linear(q, -1));
  CHECK(rem.is_zero());
  CHECK(gcd(x * x - Polynomial::constant(q, 1), x * x - x) == Polynomial::linear(q, 1));
}

TEST_CASE("characteristic polynomials") {
  Field q = Field::rationals();
  auto x = Polynomial::x(q);
  auto xm1 = Polynomial::linear(q, 1);
  CHECK(char_poly(FieldMatrix::identity(q, 2)) == xm1 * xm1);
  CHECK(char_poly(FieldMatrix(q, 2, 2)) == x * x);
  auto m = FieldMatrix::from_ints(q, {{3, 0, 0}, {0, 1, 0}, {0, 3, 1}});
  CHECK(char_poly(m) == Polynomial::linear(q, 3) * xm1 * xm1);
}

TEST_CASE("irreducible factors") {
  Field q = Field::rationals();
  auto x = Polynomial::x(q);
  auto one = Polynomial::constant(q, 1);
  auto f = (x * x + one) * (x - Polynomial::constant(q, 2)) * (x * x - Polynomial::constant(q, 2));
  auto fs = irreducible_factors(f);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].to_string() == "x-2");
  CHECK(std::count_if(fs.begin(), fs.end(), [](const Polynomial& p) { return p.to_string() == "x^2-2"; }) == 1);
  Field z2 = Field::prime(2);
  auto y = Polynomial::x(z2);
  auto g = y * y + Polynomial::constant(z2, 1);  // (x+1)^2
  auto gs = irreducible_factors(g);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].to_string() == "x-1");
  CHECK(irreducible_factors(y * y + y + Polynomial::constant(z2, 1)).size() == 1);
}

TEST_CASE("jordan decomposition") {
  Field q = Field::rationals();
  CHECK(cells(FieldMatrix::from_ints(q, {{3, 0, 0}, {0, 1, 0}, {0, 3, 1}})) == Cells{{"x-1", 2}, {"x-3", 1}});
  CHECK(cells(FieldMatrix::identity(q, 3)) == Cells{{"x-1", 1}, {"x-1", 1}, {"x-1", 1}});
  CHECK(cells(FieldMatrix::from_ints(q, {{0, 1}, {-1, 0}})) == Cells{{"x^2+1", 1}});
  Field z5 = Field::prime(5);
  CHECK(cells(FieldMatrix::from_ints(z5, {{0, 1}, {-1, 0}})) == Cells{{"x-2", 1}, {"x-3", 1}});
  // two quarter-turn blocks coupled by the identity
  auto r = FieldMatrix::from_ints(q, {{0, -1, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  CHECK(cells(r) == Cells{{"x^2+1", 2}});
}

TEST_CASE("block matrices realize their cells") {
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    auto x = Polynomial::x(f);
    for (const auto& factor : {Polynomial::linear(f, 2), x * x + Polynomial::constant(f, 1)}) {
      for (std::size_t size : {1u, 2u, 3u}) {
        GeneralizedJordanBlock b{factor, size};
        auto got = jordan_decomposition(jordan_block_matrix(b));
        REQUIRE(got.size() == 1);
        CHECK(got[0] == b);
      }
    }
  }
}

}  // TEST_SUITE
