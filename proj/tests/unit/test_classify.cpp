#include <cstdint>
#include <utility>
#include <vector>

#include "doctest.h"
#include "trisec/classify.hpp"
#include "trisec/field.hpp"

using namespace trisec;

TEST_CASE("difference quotient fiber census") {
  const Field F9 = Field::build(3, 2);
  const auto p9 = gd_profile(F9, 3);
  CHECK(p9.d == 3);
  CHECK(p9.image_size == 4);
  CHECK(p9.max_fiber == 2);
  CHECK(p9.singletons.empty());
  CHECK(!p9.zero_in_image);
  // in characteristic 3 the 2-element fibers pair y with -y-1
  for (const auto& [z, ys] : p9.fibers) {
    REQUIRE(ys.size() == 2);
    const Elem mate = F9.sub(F9.neg(ys[0]), F9.one());
    CHECK(ys[1] == mate);
  }

  const Field F8 = Field::build(2, 3);
  const auto p8 = gd_profile(F8, 3);
  CHECK(p8.image_size == 4);
  CHECK(p8.max_fiber == 2);
  REQUIRE(p8.singletons.size() == 1);
  CHECK(p8.singletons[0] == std::pair<Elem, Elem>{0, 1});  // g_d(0) = 1

  // odd q away from characteristic 3: singletons (y, z) and (1/y, y^{1-d} z)
  const Field F7 = Field::build(7, 1);
  const auto p7 = gd_profile(F7, 3);
  REQUIRE(p7.singletons.size() == 2);
  const auto [y, z] = p7.singletons[0];
  CHECK(y == 3);
  CHECK(z == 6);
  CHECK(p7.singletons[1] ==
        std::pair<Elem, Elem>{F7.inv(y), F7.mul(F7.pow(y, -2), z)});

  // d = 1 collapses g_d to the constant 1
  const auto p1 = gd_profile(F7, 1);
  CHECK(p1.image_size == 1);
  CHECK(p1.max_fiber == 6);
  CHECK(p1.singletons.empty());
}

TEST_CASE("cubic-like filter verdicts") {
  CHECK(is_cubic_like(Field::build(7, 1), 3));
  CHECK(is_cubic_like(Field::build(3, 2), 3));
  CHECK(is_cubic_like(Field::build(3, 3), 11));
  CHECK(is_cubic_like(Field::build(2, 3), 5));
  CHECK(!is_cubic_like(Field::build(7, 1), 5));
  CHECK(!is_cubic_like(Field::build(7, 1), 2));
  CHECK(!is_cubic_like(Field::build(2, 3), 6));
  CHECK(!is_cubic_like(Field::build(3, 2), 5));

  // streaming and profile-driven paths agree
  const Field F27 = Field::build(3, 3);
  for (std::uint64_t d = 1; d < 27; ++d)
    CHECK(is_cubic_like(F27, d) == is_cubic_like(F27, gd_profile(F27, d)));
}

TEST_CASE("filter against the enumeration oracle") {
  const Field F9 = Field::build(3, 2);
  for (std::uint64_t d = 1; d < 9; ++d) {
    const auto chk = verify_cubic_like(F9, d);
    CHECK(chk.agree);
    CHECK(chk.filter == chk.oracle);
  }
}

TEST_CASE("full scans recover the known hit sets") {
  using Hits = std::vector<std::uint64_t>;
  CHECK(scan_all_d(Field::build(7, 1)).hits == Hits{3});
  CHECK(scan_all_d(Field::build(3, 2)).hits == Hits{3});

  const auto s8 = scan_all_d(Field::build(2, 3));
  CHECK(s8.hits == Hits{3, 5});
  CHECK(s8.confirmed);
  REQUIRE(s8.hit_distributions.size() == 2);
  CHECK(s8.hit_distributions[0].at(0) == 21);
  CHECK(s8.hit_distributions[1].at(0) == 21);

  ScanOptions fast;
  fast.confirm = false;
  const auto s27 = scan_all_d(Field::build(3, 3), fast);
  CHECK(s27.hits == Hits{3, 9, 11, 19});
  CHECK(!s27.confirmed);
  CHECK(s27.hit_distributions.empty());
}

TEST_CASE("known families") {
  using Hits = std::vector<std::uint64_t>;
  CHECK(known_families(Field::build(7, 1)) == Hits{3});
  CHECK(known_families(Field::build(2, 3)) == Hits{3, 5});
  CHECK(known_families(Field::build(3, 3)) == Hits{3, 9, 11, 19});
  CHECK(known_families(Field::build(3, 5)) ==
        Hits{3, 9, 27, 29, 49, 81, 163, 217});

  const auto cmp = compare_scan_to_families(scan_all_d(Field::build(3, 3)).hits,
                                            known_families(Field::build(3, 3)));
  CHECK(cmp.equal());

  const auto off = compare_scan_to_families({3, 5}, {3, 7});
  CHECK(!off.equal());
  CHECK(off.scan_only == Hits{5});
  CHECK(off.family_only == Hits{7});
}
