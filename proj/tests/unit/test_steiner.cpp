#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "trisec/field.hpp"
#include "trisec/steiner.hpp"

using namespace trisec;

namespace {

const Field& gf9() {
  static const Field F = Field::build(3, 2);
  return F;
}

const Field& gf27() {
  static const Field F = Field::build(3, 3);
  return F;
}

TripleSystem fano() {
  TripleSystem ts;
  ts.v = 7;
  ts.blocks = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
               {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  return ts;
}

}  // namespace

TEST_CASE("the cube system on nine points") {
  const auto ts = build_sts(gf9(), PolyFn::monomial(3));
  CHECK(ts.v == 9);
  CHECK(ts.blocks.size() == 12);
  CHECK(validate_sts(ts).pass);
  CHECK(is_affine(gf9(), ts));
  CHECK(pasch_count(ts) == 0);  // AG(2,3) is anti-Pasch
  CHECK(ts.blocks.front() == std::array<std::uint32_t, 3>{0, 1, 2});

  // blocks are invariant under adding a line to the polynomial
  const auto shifted = build_sts(gf9(), PolyFn::dense({2, 5, 0, 1}));
  CHECK(shifted.blocks == ts.blocks);
}

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS(build_sts(Field::build(7, 1), PolyFn::monomial(3)),
                  field_error);
  // x^5 has argument pairs without a unique collinear completion
  CHECK_THROWS_AS(build_sts(gf27(), PolyFn::monomial(5)), field_error);
}

TEST_CASE("validation failure modes") {
  auto ts = build_sts(gf9(), PolyFn::monomial(3));
  auto missing = ts;
  missing.blocks.pop_back();
  CHECK(!validate_sts(missing).pass);

  auto doubled = ts;
  doubled.blocks.push_back(doubled.blocks.front());
  CHECK(!validate_sts(doubled).pass);

  auto degenerate = ts;
  degenerate.blocks[0] = {1, 1, 2};
  CHECK(!validate_sts(degenerate).pass);
}

TEST_CASE("pasch count on a known positive case") {
  const auto f = fano();
  CHECK(validate_sts(f).pass);
  CHECK(pasch_count(f) == 7);
  const auto sig = cycle_signature(f);
  REQUIRE(sig.size() == 1);
  CHECK(sig.begin()->first == std::vector<std::uint32_t>{4});
  CHECK(sig.begin()->second == 21);
}

TEST_CASE("pasch count is a relabeling invariant") {
  const auto ts = build_sts(gf27(), PolyFn::monomial(11));
  std::vector<std::uint32_t> perm(27);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[13]);
  std::swap(perm[5], perm[22]);
  const auto moved = relabel(ts, perm);
  CHECK(validate_sts(moved).pass);
  CHECK(pasch_count(moved) == pasch_count(ts));
  CHECK(cycle_signature(moved) == cycle_signature(ts));
}

TEST_CASE("the three systems on 27 points") {
  const auto s3 = build_sts(gf27(), PolyFn::monomial(3));
  const auto s11 = build_sts(gf27(), PolyFn::monomial(11));
  const auto s19 = build_sts(gf27(), PolyFn::monomial(19));
  for (const auto* s : {&s3, &s11, &s19}) {
    CHECK(s->v == 27);
    CHECK(s->blocks.size() == 117);
    CHECK(validate_sts(*s).pass);
    CHECK(pasch_count(*s) == 0);  // all three are anti-Pasch
  }
  CHECK(is_affine(gf27(), s3));
  CHECK(!is_affine(gf27(), s11));

  // Pasch ties, the cycle signature separates
  const auto sig3 = cycle_signature(s3);
  REQUIRE(sig3.size() == 1);
  CHECK(sig3.at({6, 6, 6, 6}) == 351);

  const auto sig11 = cycle_signature(s11);
  REQUIRE(sig11.size() == 3);
  CHECK(sig11.at({6, 18}) == 117);
  CHECK(sig11.at({8, 16}) == 78);
  CHECK(sig11.at({24}) == 156);
  CHECK(cycle_signature(s19) == sig11);

  // each class has cycle lengths summing to v - 3 and classes cover all pairs
  std::uint64_t pairs = 0;
  for (const auto& [lens, n] : sig11) {
    CHECK(std::accumulate(lens.begin(), lens.end(), 0u) == 24);
    pairs += n;
  }
  CHECK(pairs == 351);
}

TEST_CASE("isomorphism decisions on 27 points") {
  const auto s3 = build_sts(gf27(), PolyFn::monomial(3));
  const auto s11 = build_sts(gf27(), PolyFn::monomial(11));
  const auto s19 = build_sts(gf27(), PolyFn::monomial(19));

  const auto refute = isomorphic(s3, s11);
  CHECK(refute.verdict == IsoResult::Verdict::kNonIsomorphic);
  CHECK(refute.nodes == 0);  // screened out before any search
  CHECK(refute.reason.find("cycle signature") != std::string::npos);

  const auto iso = isomorphic(s11, s19);
  REQUIRE(iso.verdict == IsoResult::Verdict::kIsomorphic);
  CHECK(iso.nodes == 54);
  REQUIRE(iso.witness.size() == 27);
  CHECK(relabel(s11, iso.witness).blocks == s19.blocks);

  // x -> f(x) itself maps the system of f onto the system of its inverse
  const auto table = PolyFn::monomial(11).value_table(gf27());
  const std::vector<std::uint32_t> perm(table.begin(), table.end());
  CHECK(relabel(s11, perm).blocks == s19.blocks);

  const auto starved = isomorphic(s11, s19, 1);
  CHECK(starved.verdict == IsoResult::Verdict::kUndecided);

  const auto self9 = isomorphic(build_sts(gf9(), PolyFn::monomial(3)),
                                build_sts(gf9(), PolyFn::monomial(3)));
  CHECK(self9.verdict == IsoResult::Verdict::kIsomorphic);
  CHECK(self9.nodes == 9);

  auto f7 = fano();
  const auto sized = isomorphic(f7, build_sts(gf9(), PolyFn::monomial(3)));
  CHECK(sized.verdict == IsoResult::Verdict::kNonIsomorphic);
}

TEST_CASE("additivity matches affineness for monomials") {
  CHECK(is_additive(gf27(), PolyFn::monomial(9)));
  CHECK(!is_additive(gf27(), PolyFn::monomial(11)));
  const auto s9 = build_sts(gf27(), PolyFn::monomial(9));
  CHECK(is_affine(gf27(), s9));
  CHECK_THROWS_AS(is_affine(gf9(), s9), field_error);  // size mismatch
}

TEST_CASE("block text round trip") {
  const auto ts = build_sts(gf9(), PolyFn::monomial(3));
  const auto text = to_block_text(ts);
  CHECK(text.rfind("v=9\n0 1 2\n", 0) == 0);
  const auto back = from_block_text(text);
  CHECK(back.v == ts.v);
  CHECK(back.blocks == ts.blocks);

  CHECK_THROWS_AS(from_block_text(""), field_error);
  CHECK_THROWS_AS(from_block_text("9\n0 1 2\n"), field_error);
  CHECK_THROWS_AS(from_block_text("v=x\n"), field_error);
  CHECK_THROWS_AS(from_block_text("v=9\n0 1\n"), field_error);
  CHECK_THROWS_AS(from_block_text("v=9\n2 1 0\n"), field_error);
  CHECK_THROWS_AS(from_block_text("v=3\n0 1 5\n"), field_error);
  CHECK_THROWS_AS(from_block_text("v=9\n0 1 2\n0 1 2\n"), field_error);

  // structurally sound text that is not an STS parses but fails validation
  const auto partial = from_block_text("v=9\n0 1 2\n3 4 5\n6 7 8\n");
  CHECK(!validate_sts(partial).pass);
}
