#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "trisec/field.hpp"
#include "trisec/kakeya.hpp"

using namespace trisec;

TEST_CASE("the plane of order two") {
  const Field F = Field::build(2, 1);
  const Plane P(F);
  CHECK(P.size() == 7);
  for (std::uint32_t line = 0; line < 7; ++line)
    CHECK(P.points_on(line).size() == 3);
  // every point pair spans exactly the one line both are on
  for (std::uint32_t a = 0; a < 7; ++a)
    for (std::uint32_t b = a + 1; b < 7; ++b) {
      const std::uint32_t l = P.line_through(a, b);
      CHECK(P.incident(a, l));
      CHECK(P.incident(b, l));
      CHECK(P.line_through(b, a) == l);
      for (std::uint32_t other = 0; other < 7; ++other) {
        if (other == l) continue;
        CHECK(!(P.incident(a, other) && P.incident(b, other)));
      }
    }
  CHECK_THROWS_AS(P.line_through(3, 3), field_error);
}

TEST_CASE("point indexing round trip") {
  const Field F = Field::build(3, 2);
  const Plane P(F);
  std::set<std::uint32_t> seen;
  for (Elem y = 0; y < 9; ++y)
    for (Elem z = 0; z < 9; ++z) seen.insert(P.point_index(1, y, z));
  for (Elem z = 0; z < 9; ++z) seen.insert(P.point_index(0, 1, z));
  seen.insert(P.point_index(0, 0, 1));
  CHECK(seen.size() == P.size());
  CHECK(*seen.rbegin() == P.size() - 1);
  for (std::uint32_t idx = 0; idx < P.size(); ++idx) {
    const auto [x, y, z] = P.coords(idx);
    CHECK(P.point_index(x, y, z) == idx);
  }
  // scaling a representative does not move the point
  CHECK(P.point_index(2, 4, 7) == P.point_index(1, F.mul(F.inv(2), 4),
                                                F.mul(F.inv(2), 7)));
  CHECK_THROWS_AS(P.point_index(0, 0, 0), field_error);
}

TEST_CASE("dual point sets and their line census") {
  const Field F4 = Field::build(2, 2);
  const Plane P4(F4);
  // x^2 with slope 0 closes to a hyperoval: every line meets in 0 or 2 points
  const auto oval = dk_set(P4, PolyFn::monomial(2), 0);
  CHECK(oval.size() == 6);
  const auto u = set_intersection_distribution(P4, oval);
  CHECK(u == std::map<std::uint64_t, std::uint64_t>{{0, 6}, {2, 15}});

  const Field F3 = Field::build(3, 1);
  const Plane P3(F3);
  // a single point: u_0 = q^2, u_1 = q + 1
  const auto single = set_intersection_distribution(P3, {0});
  CHECK(single == std::map<std::uint64_t, std::uint64_t>{{0, 9}, {1, 4}});
  // a full line: met once by everyone else, q + 1 times by itself
  const auto line = set_intersection_distribution(P3, P3.points_on(5));
  CHECK(line == std::map<std::uint64_t, std::uint64_t>{{1, 12}, {4, 1}});

  const Field F11 = Field::build(11, 1);
  const Plane P11(F11);
  const auto dk = dk_set(P11, PolyFn::monomial(3), 0);
  CHECK(dk.size() == 13);  // q + 2 points
  CHECK(set_intersection_distribution(P11, dk).at(0) == 40);
}

TEST_CASE("closed-form sizes against plane enumeration") {
  const Field F11 = Field::build(11, 1);
  const auto s0 = kakeya_size(F11, 0, 0);
  CHECK(s0.via_formula == 81);
  CHECK(s0.special);
  CHECK(s0.agree);
  CHECK(s0.via_dual == 81);

  const auto s1 = kakeya_size(F11, 0, 1);
  CHECK(s1.via_formula == 85);
  CHECK(!s1.special);
  CHECK(s1.agree);

  const Field F13 = Field::build(13, 1);
  const auto s13 = kakeya_size(F13, 0, 1);
  CHECK(s13.via_formula == 117);
  CHECK(s13.agree);
  CHECK(s13.u0_dual == 52);

  const Field F9 = Field::build(3, 2);
  for (const auto& row : cubic_kakeya_table(F9)) CHECK(row.agree);
}

TEST_CASE("size tables match the reference values") {
  const auto sizes = [](const Field& F) {
    std::set<std::uint64_t> out;
    for (const auto& r : cubic_kakeya_table(F)) out.insert(r.via_formula);
    return out;
  };
  using Set = std::set<std::uint64_t>;
  CHECK(sizes(Field::build(11, 1)) == Set{81, 85});
  CHECK(sizes(Field::build(13, 1)) == Set{117, 121});
  CHECK(sizes(Field::build(17, 1)) == Set{193, 199});
  CHECK(sizes(Field::build(19, 1)) == Set{247, 253});
  CHECK(sizes(Field::build(3, 2)) == Set{57, 63});
  CHECK(sizes(Field::build(3, 3)) == Set{495, 513});
}

TEST_CASE("special-branch predicate") {
  // q = 2 mod 3: the special pairs sit on b = -a^2/3
  const Field F11 = Field::build(11, 1);
  const Elem third = F11.inv(3);
  for (Elem a = 0; a < 11; ++a)
    for (Elem b = 0; b < 11; ++b) {
      const bool expect = b == F11.neg(F11.mul(third, F11.mul(a, a)));
      CHECK(kakeya_special_pair(F11, a, b) == expect);
    }

  // characteristic 3: a = 0 and b a nonzero square
  const Field F9 = Field::build(3, 2);
  for (Elem b = 1; b < 9; ++b)
    CHECK(kakeya_special_pair(F9, 0, b) == F9.is_square(b));
  CHECK(!kakeya_special_pair(F9, 0, 0));
  CHECK(!kakeya_special_pair(F9, 1, 4));

  // representatives reach both branches
  bool special = false, generic = false;
  for (auto [a, b] : kakeya_representatives(F9)) {
    (kakeya_special_pair(F9, a, b) ? special : generic) = true;
  }
  CHECK(special);
  CHECK(generic);
}

TEST_CASE("formula matches enumeration across a whole small field") {
  const Field F7 = Field::build(7, 1);
  for (Elem a = 0; a < 7; ++a)
    for (Elem b = 0; b < 7; ++b) {
      const auto s = kakeya_size(F7, a, b);
      CHECK(s.agree);
      CHECK(s.via_formula == s.via_dual);
      CHECK(s.via_formula == kakeya_size_formula(F7, a, b));
    }
}
