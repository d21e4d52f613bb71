#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "trisec/field.hpp"

using namespace trisec;

namespace {

template <typename E, typename Fn>
std::string thrown_message(Fn&& fn) {
  try {
    fn();
  } catch (const E& e) {
    return e.what();
  }
  return {};
}

bool small_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("default moduli and canonical indices") {
  const Field F7 = Field::build(7, 1);
  CHECK(F7.q() == 7);
  CHECK(F7.to_string() == "7,1,4,1");  // x - 3, 3 the least primitive root
  CHECK(F7.alpha() == 3);
  for (Elem c = 0; c < 7; ++c) CHECK(F7.scalar(c) == c);
  CHECK(F7.add(3, 5) == 1);
  CHECK(F7.mul(3, 5) == 1);
  CHECK(F7.neg(3) == 4);

  CHECK(Field::build(2, 3).to_string() == "2,3,1,1,0,1");
  CHECK(Field::build(11, 1).to_string() == "11,1,9,1");
  CHECK(Field::build(13, 1).to_string() == "13,1,11,1");

  const Field F9 = Field::build(3, 2);
  CHECK(F9.to_string() == "3,2,2,2,1");
  CHECK(F9.alpha() == 3);  // the residue of x
  // prime-subfield arithmetic stays on the digit indices
  CHECK(F9.add(1, 2) == 0);
  CHECK(F9.scalar(2) == 2);
  CHECK(F9.mul(2, 2) == 1);
}

TEST_CASE("supplied modulus diagnostics") {
  const Field alt = Field::build(3, 2, {2, 1, 1});  // x^2 + x + 2, primitive
  CHECK(alt.to_string() == "3,2,2,1,1");
  CHECK(alt.q() == 9);

  // x^2 + 2 = (x - 1)(x + 1) over F_3
  auto red = thrown_message<field_error>([] { Field::build(3, 2, {2, 0, 1}); });
  CHECK(red.find("reducible") != std::string::npos);

  // x^2 + 1 is irreducible over F_3 but x has order 4, not 8
  auto imp = thrown_message<field_error>([] { Field::build(3, 2, {1, 0, 1}); });
  CHECK(imp.find("not primitive") != std::string::npos);
  CHECK(imp != red);

  CHECK_THROWS_AS(Field::build(3, 2, {2, 1, 2}), field_error);     // not monic
  CHECK_THROWS_AS(Field::build(3, 2, {1, 1}), field_error);        // degree
  CHECK_THROWS_AS(Field::build(3, 2, {3, 1, 1}), field_error);     // coeff range
  CHECK(Field::build(2, 2, {1, 1, 1}).q() == 4);
}

TEST_CASE("construction limits") {
  CHECK_THROWS_AS(Field::build(6, 1), field_error);   // p not prime
  CHECK_THROWS_AS(Field::build(7, 0), field_error);   // m = 0
  CHECK_THROWS_AS(Field::build(2, 25), field_error);  // q over 2^24
}

TEST_CASE("multiplicative structure") {
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{7, 1},
                      {2, 3},
                      {3, 2},
                      {7, 2}}) {
    const Field F = Field::build(p, m);
    const std::uint32_t q1 = F.q() - 1;
    CHECK(F.pow(F.alpha(), q1) == F.one());
    for (std::uint32_t r = 2; r <= q1; ++r) {
      if (q1 % r != 0 || !small_prime(r)) continue;
      CHECK(F.pow(F.alpha(), q1 / r) != F.one());
    }
    // Wilson: the nonzero elements multiply to -1
    Elem prod = F.one();
    for (Elem a = 1; a < F.q(); ++a) prod = F.mul(prod, a);
    CHECK(prod == F.neg(F.one()));
    for (Elem a = 1; a < F.q(); ++a) {
      CHECK(F.mul(a, F.inv(a)) == F.one());
      CHECK(F.exp(F.log(a)) == a);
      CHECK(F.pow(a, -1) == F.inv(a));
    }
    for (std::uint32_t i = 0; i < q1; ++i) CHECK(F.log(F.exp(i)) == i);
  }

  const Field F7 = Field::build(7, 1);
  CHECK(F7.pow(0, 0) == 1);
  CHECK(F7.pow(0, 3) == 0);
  CHECK_THROWS_AS(F7.pow(0, -1), field_error);
  CHECK_THROWS_AS(F7.inv(0), field_error);
  CHECK_THROWS_AS(F7.log(0), field_error);
}

TEST_CASE("additive structure and frobenius") {
  const Field F = Field::build(3, 4);
  for (Elem a = 0; a < F.q(); ++a) {
    CHECK(F.add(a, F.neg(a)) == 0);
    CHECK(F.sub(a, a) == 0);
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<Elem> pick(0, F.q() - 1);
  for (int t = 0; t < 1000; ++t) {
    const Elem a = pick(rng), b = pick(rng);
    CHECK(F.pow(F.add(a, b), 3) == F.add(F.pow(a, 3), F.pow(b, 3)));
    CHECK(F.add(a, b) == F.add(b, a));
    CHECK(F.sub(F.add(a, b), b) == a);
  }
}

TEST_CASE("trace") {
  const Field F4 = Field::build(2, 2);
  CHECK(F4.trace(0) == 0);
  CHECK(F4.trace(1) == 0);
  CHECK(F4.trace(2) == 1);
  CHECK(F4.trace(3) == 1);

  const Field F9 = Field::build(3, 2);
  CHECK(F9.trace(1) == 2);  // trace of a scalar c is m*c
  CHECK(F9.trace(3) == 1);
  std::vector<int> counts(3, 0);
  for (Elem a = 0; a < 9; ++a) {
    ++counts[F9.trace(a)];
    for (Elem b = 0; b < 9; ++b)
      CHECK(F9.trace(F9.add(a, b)) == (F9.trace(a) + F9.trace(b)) % 3);
  }
  for (int c : counts) CHECK(c == 3);  // each value hit q/p times
}

TEST_CASE("squares and cyclotomic classes") {
  const Field F7 = Field::build(7, 1);
  for (Elem x : {1u, 2u, 4u}) CHECK(F7.is_square(x));
  for (Elem x : {3u, 5u, 6u}) CHECK(!F7.is_square(x));
  CHECK(F7.least_in_class(0, 2) == 1);
  CHECK(F7.least_in_class(1, 2) == 3);
  for (Elem x = 1; x < 7; ++x)
    CHECK(F7.cyclo_class(x, 2) == (F7.is_square(x) ? 0u : 1u));
  CHECK_THROWS_AS(F7.cyclo_class(0, 2), field_error);
  CHECK_THROWS_AS(F7.cyclo_class(1, 4), field_error);  // 4 does not divide 6

  const Field F8 = Field::build(2, 3);
  CHECK_THROWS_AS(F8.is_square(1), field_error);  // q - 1 odd
}

TEST_CASE("order-2 cyclotomic numbers match the closed form for odd q <= 1000") {
  for (std::uint32_t p = 3; p <= 997; p += 2) {
    if (!small_prime(p)) continue;
    for (std::uint32_t m = 1;; ++m) {
      std::uint64_t q = 1;
      for (std::uint32_t i = 0; i < m; ++i) q *= p;
      if (q > 1000) break;
      const Field F = Field::build(p, m);
      const std::uint64_t n00 = F.cyclotomic_number(0, 0);
      const std::uint64_t n01 = F.cyclotomic_number(0, 1);
      const std::uint64_t n10 = F.cyclotomic_number(1, 0);
      const std::uint64_t n11 = F.cyclotomic_number(1, 1);
      if (q % 4 == 1) {
        CHECK(n00 == (q - 5) / 4);
        CHECK(n01 == (q - 1) / 4);
        CHECK(n10 == (q - 1) / 4);
        CHECK(n11 == (q - 1) / 4);
      } else {
        CHECK(n00 == (q - 3) / 4);
        CHECK(n01 == (q + 1) / 4);
        CHECK(n10 == (q - 3) / 4);
        CHECK(n11 == (q - 3) / 4);
      }
    }
  }
  CHECK_THROWS_AS(Field::build(2, 3).cyclotomic_number(0, 0), field_error);
  CHECK_THROWS_AS(Field::build(7, 1).cyclotomic_number(2, 0), field_error);
}

TEST_CASE("serialization round trip") {
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 1},
                      {7, 1},
                      {2, 3},
                      {3, 2},
                      {5, 2},
                      {13, 1}}) {
    const Field F = Field::build(p, m);
    const Field G = Field::parse(F.to_string());
    CHECK(G.p() == F.p());
    CHECK(G.m() == F.m());
    CHECK(G.q() == F.q());
    CHECK(G.modulus() == F.modulus());
    CHECK(G.to_string() == F.to_string());
    for (Elem a = 1; a < std::min<Elem>(F.q(), 32); ++a)
      CHECK(G.mul(a, F.alpha()) == F.mul(a, F.alpha()));
  }
  CHECK_THROWS_AS(Field::parse("7,1,4"), field_error);
  CHECK_THROWS_AS(Field::parse("4,1,1,1"), field_error);
  CHECK_THROWS_AS(Field::parse("7,1,x,1"), field_error);
  CHECK_THROWS_AS(Field::parse(""), field_error);
}
