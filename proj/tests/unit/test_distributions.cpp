#include <cstdint>
#include <map>
#include <vector>

#include "doctest.h"
#include "trisec/distributions.hpp"
#include "trisec/field.hpp"

using namespace trisec;

namespace {

using Counts = std::map<std::uint64_t, std::uint64_t>;

}  // namespace

TEST_CASE("polynomial descriptors evaluate consistently") {
  const Field F = Field::build(7, 1);
  const PolyFn cube = PolyFn::monomial(3);
  const PolyFn same = PolyFn::dense({0, 0, 0, 1});
  for (Elem x = 0; x < 7; ++x) CHECK(cube.eval(F, x) == same.eval(F, x));
  CHECK(cube.describe() == "monomial:3");
  CHECK(PolyFn::cubic(4).describe() == "cubic:4");
  CHECK(same.describe() == "dense:0,0,0,1");
  CHECK(cube.value_table(F) == same.value_table(F));

  // x^9 = x on 7 elements only off zero; exponents fold with x^q = x
  CHECK(normalized_exponent(F, 9) == 3);
  CHECK(normalized_exponent(F, 6) == 6);
  CHECK(normalized_exponent(F, 12) == 6);
  CHECK_THROWS_AS(PolyFn::monomial(0), field_error);

  const PolyFn c = PolyFn::cubic(4);
  for (Elem x = 0; x < 7; ++x) {
    const Elem expect = F.sub(F.pow(x, 3), F.mul(4, F.mul(x, x)));
    CHECK(c.eval(F, x) == expect);
  }
}

TEST_CASE("multiplicity rows of the reference examples") {
  const Field F7 = Field::build(7, 1);
  CHECK(multiplicity_row(F7, PolyFn::monomial(3), 0).counts ==
        Counts{{0, 4}, {1, 1}, {3, 2}});

  const Field F9 = Field::build(3, 2);
  CHECK(multiplicity_row(F9, PolyFn::cubic(1), 0).counts ==
        Counts{{0, 3}, {1, 4}, {2, 1}, {3, 1}});

  // f = x: a single solution per c away from the slope 1
  CHECK(multiplicity_row(F7, PolyFn::monomial(1), 0).counts == Counts{{1, 7}});
  CHECK(multiplicity_row(F7, PolyFn::monomial(1), 1).counts ==
        Counts{{0, 6}, {7, 1}});

  const Field F13 = Field::build(13, 1);
  CHECK(multiplicity_row(F13, PolyFn::monomial(3), 0).counts ==
        Counts{{0, 8}, {1, 1}, {3, 4}});

  // row identities: sum M_i = q, sum i M_i = q
  for (Elem b = 0; b < 9; ++b) {
    const auto row = multiplicity_row(F9, PolyFn::monomial(5), b);
    std::uint64_t lines = 0, points = 0;
    for (auto [i, n] : row.counts) {
      lines += n;
      points += i * n;
    }
    CHECK(lines == 9);
    CHECK(points == 9);
  }
}

TEST_CASE("nonzero-solution variant") {
  const Field F7 = Field::build(7, 1);
  // f = x, b = 0: the zero solution moves one line from M_1 to M*_0
  CHECK(multiplicity_row_nonzero(F7, PolyFn::monomial(1), 0).counts ==
        Counts{{0, 1}, {1, 6}});
  CHECK(multiplicity_row_nonzero(F7, PolyFn::monomial(3), 0).counts ==
        Counts{{0, 5}, {3, 2}});

  const Field F5 = Field::build(5, 1);
  CHECK(multiplicity_row(F5, PolyFn::monomial(3), 0).counts == Counts{{1, 5}});
  CHECK(multiplicity_row_nonzero(F5, PolyFn::monomial(3), 0).counts ==
        Counts{{0, 1}, {1, 4}});
}

TEST_CASE("intersection distributions of the reference examples") {
  const Field F7 = Field::build(7, 1);
  const auto d7 = intersection_distribution(F7, PolyFn::monomial(3));
  CHECK(d7.counts == Counts{{0, 16}, {1, 22}, {2, 6}, {3, 5}});
  CHECK(d7.at(0) == 16);
  CHECK(d7.at(4) == 0);

  const Field F9 = Field::build(3, 2);
  CHECK(intersection_distribution(F9, PolyFn::monomial(3)).counts ==
        Counts{{0, 24}, {1, 45}, {3, 12}});
  CHECK(intersection_distribution(F9, PolyFn::cubic(1)).counts ==
        Counts{{0, 27}, {1, 36}, {2, 9}, {3, 9}});

  const Field F5 = Field::build(5, 1);
  CHECK(intersection_distribution(F5, PolyFn::monomial(2)).counts ==
        Counts{{0, 10}, {1, 5}, {2, 10}});

  const auto chk = check_basic_equations(F7, d7);
  CHECK(chk.pass);
  CHECK(chk.line_residual == 0);
  CHECK(chk.point_residual == 0);
  CHECK(chk.pair_residual == 0);

  IntersectionDistribution bad;
  bad.counts = {{0, 1}, {1, 48}};
  CHECK(!check_basic_equations(F7, bad).pass);
}

TEST_CASE("worker counts do not change the distribution") {
  const Field F = Field::build(3, 3);
  const auto one = intersection_distribution(F, PolyFn::monomial(11), 1);
  const auto four = intersection_distribution(F, PolyFn::monomial(11), 4);
  CHECK(one == four);
}

TEST_CASE("closed cubic forms agree with enumeration on small fields") {
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 3},
                      {3, 2},
                      {11, 1},
                      {13, 1}}) {
    const Field F = Field::build(p, m);
    for (Elem a = 0; a < F.q(); ++a) {
      const PolyFn f = PolyFn::cubic(a);
      CHECK(closed_form_cubic_intdist(F, a) == intersection_distribution(F, f));
      for (Elem b = 0; b < F.q(); ++b)
        CHECK(closed_form_cubic_muldist(F, a, b).counts ==
              multiplicity_row(F, f, b).counts);
    }
  }
  CHECK(closed_form_cubic_intdist(Field::build(3, 3), 0).counts ==
        Counts{{0, 234}, {1, 378}, {3, 117}});
}

TEST_CASE("related monomial closed forms") {
  const Field F9 = Field::build(3, 2);
  CHECK(related_monomial_covered(F9, 6));  // q - 3
  CHECK(closed_form_related_monomial(F9, 6).counts ==
        Counts{{0, 28}, {1, 33}, {2, 12}, {3, 8}});
  CHECK(closed_form_related_monomial(F9, 6) ==
        intersection_distribution(F9, PolyFn::monomial(6)));

  const Field F8 = Field::build(2, 3);
  CHECK(related_monomial_covered(F8, 5));  // q - 3, also (q + 1) / 3 truncated
  CHECK(closed_form_related_monomial(F8, 5).at(0) == 21);
  CHECK(closed_form_related_monomial(F8, 5) ==
        intersection_distribution(F8, PolyFn::monomial(5)));

  const Field F13 = Field::build(13, 1);
  CHECK(related_monomial_covered(F13, 10));
  const auto d10 = closed_form_related_monomial(F13, 10);
  CHECK(d10.counts == Counts{{0, 54}, {1, 81}, {2, 18}, {3, 12}, {4, 4}});
  CHECK(d10 == intersection_distribution(F13, PolyFn::monomial(10)));

  CHECK(!related_monomial_covered(F13, 7));
  CHECK_THROWS_AS(closed_form_related_monomial(F13, 7), field_error);
}

TEST_CASE("cubic normalization") {
  const Field F7 = Field::build(7, 1);
  const auto plain = normalize_cubic(F7, {0, 0, 0, 1});
  CHECK(plain.a == 0);
  CHECK(plain.scale == 1);

  // 2x^3 + 2x + 1 normalizes onto x^3 with slope map b -> (b - 2) / 2
  const auto n = normalize_cubic(F7, {1, 2, 0, 2});
  CHECK(n.a == 0);
  CHECK(n.scale == 2);
  CHECK(n.shift == 2);
  CHECK(n.map_b(F7, 2) == 0);
  const PolyFn f = PolyFn::dense({1, 2, 0, 2});
  CHECK(intersection_distribution(F7, f) == closed_form_cubic_intdist(F7, n.a));
  for (Elem b = 0; b < 7; ++b)
    CHECK(multiplicity_row(F7, f, b).counts ==
          closed_form_cubic_muldist(F7, n.a, n.map_b(F7, b)).counts);

  // x^3 - 5x^2
  CHECK(normalize_cubic(F7, {0, 0, 2, 1}).a == 5);

  CHECK_THROWS_AS(normalize_cubic(F7, {0, 0, 2, 0}), field_error);  // degree 2
  CHECK_THROWS_AS(normalize_cubic(F7, {0, 0, 2}), field_error);
}

TEST_CASE("permutation sets and v0 bounds") {
  const Field F7 = Field::build(7, 1);
  CHECK(permutation_set(F7, PolyFn::monomial(3)).empty());

  // x^3 over F_27: x^3 + cx permutes exactly when -c is not a square
  const Field F27 = Field::build(3, 3);
  const auto ns = permutation_set(F27, PolyFn::monomial(3));
  CHECK(ns.size() == 14);
  for (Elem c : ns) {
    if (c == 0) continue;
    CHECK(!F27.is_square(F27.neg(c)));
  }

  const auto b9 = check_v0_bounds(Field::build(3, 2), PolyFn::cubic(1));
  CHECK(b9.v0 == 27);
  CHECK(b9.lower == 27);
  CHECK(b9.upper == 54);
  CHECK(b9.nf_size == 0);
  CHECK(b9.within);
  CHECK(b9.lower_tight);
  CHECK(!b9.upper_tight);

  const auto b27 = check_v0_bounds(F27, PolyFn::monomial(3));
  CHECK(b27.v0 == 234);
  CHECK(b27.lower == 117);
  CHECK(b27.upper == 234);
  CHECK(b27.nf_size == 14);
  CHECK(b27.upper_tight);
  CHECK(!b27.lower_tight);

  const auto b8 = check_v0_bounds(Field::build(2, 3), PolyFn::monomial(3));
  CHECK(b8.v0 == 21);
  CHECK(b8.lower == 21);
  CHECK(b8.upper == 35);
  CHECK(b8.nf_size == 1);
  CHECK(b8.lower_tight);
}

TEST_CASE("nonhitting table") {
  const Field F9 = Field::build(3, 2);
  const auto t = monomial_nonhitting_table(F9);
  CHECK(t.q == 9);
  CHECK(t.entries.size() == 8);  // no coprime pair collapses below q = 11
  const auto find = [&](std::uint64_t d) -> const NonhittingEntry& {
    for (const auto& e : t.entries)
      for (auto x : e.ds)
        if (x == d) return e;
    FAIL("missing exponent");
    return t.entries.front();
  };
  CHECK(find(1).v0 == 8);
  CHECK(find(2).v0 == 36);
  CHECK(find(3).v0 == 24);
  CHECK(find(6).v0 == 28);

  const Field F11 = Field::build(11, 1);
  const auto t11 = monomial_nonhitting_table(F11);
  bool saw_pair = false;
  for (const auto& e : t11.entries) {
    if (e.ds == std::vector<std::uint64_t>{3, 7}) {
      saw_pair = true;
      CHECK(e.v0 == 40);
    }
    if (e.ds == std::vector<std::uint64_t>{5}) CHECK(e.v0 == 38);
  }
  CHECK(saw_pair);

  const Field F2 = Field::build(2, 1);
  const auto t2 = monomial_nonhitting_table(F2);
  REQUIRE(t2.entries.size() == 1);
  CHECK(t2.entries[0].ds == std::vector<std::uint64_t>{1});
  CHECK(t2.entries[0].v0 == 1);

  // workers change nothing
  CHECK(monomial_nonhitting_table(F11, 3).entries.size() == t11.entries.size());

  const Field F1024 = Field::build(2, 10);
  CHECK_THROWS_AS(monomial_nonhitting_table(F1024, 1, 512), budget_error);
}

TEST_CASE("inverse pairs share their multiplicity rows") {
  const Field F8 = Field::build(2, 3);
  const auto chk = inverse_distribution_check(F8, PolyFn::monomial(3));
  CHECK(chk.is_permutation);
  CHECK(chk.rows_match);

  const Field F7 = Field::build(7, 1);
  CHECK(!inverse_distribution_check(F7, PolyFn::monomial(3)).is_permutation);
}
