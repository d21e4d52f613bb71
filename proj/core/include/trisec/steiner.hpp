#pragma once

// Steiner triple systems cut out of polynomial graphs over F_{3^m}: the
// blocks are the 3-subsets of arguments whose graph points are collinear.
// Includes the Pasch and cycle-structure invariants and a certified
// isomorphism test.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trisec/distributions.hpp"
#include "trisec/field.hpp"

namespace trisec {

struct TripleSystem {
  std::uint32_t v = 0;
  // each block ascending, block list lexicographically sorted
  std::vector<std::array<std::uint32_t, 3>> blocks;
};

// Requires characteristic 3 and a polynomial whose every argument pair
// extends to exactly one collinear triple (checked: by the fiber filter for
// monomials, by full enumeration otherwise); throws field_error if not.
TripleSystem build_sts(const Field& F, const PolyFn& f, unsigned workers = 1);

struct SystemCheck {
  bool pass = false;
  std::string detail;
};
// well-formed blocks and every point pair covered exactly once
SystemCheck validate_sts(const TripleSystem& ts);

// every block sums to zero in the field
bool is_affine(const Field& F, const TripleSystem& ts);

// f(x + y) = f(x) + f(y) for all x, y; over F_{3^m} this is the same as
// being a linear combination of Frobenius powers
bool is_additive(const Field& F, const PolyFn& f);

// number of Pasch configurations: 4 blocks on 6 points, every point on
// exactly 2 of them
std::uint64_t pasch_count(const TripleSystem& ts);

// For each point pair {x, y}: the remaining points avoiding the block of
// {x, y} decompose into cycles alternating the matchings u -> third(x, u)
// and u -> third(y, u). Maps the sorted cycle-length vector to the number of
// pairs producing it; an isomorphism invariant.
std::map<std::vector<std::uint32_t>, std::uint64_t> cycle_signature(
    const TripleSystem& ts);

struct IsoResult {
  enum class Verdict { kIsomorphic, kNonIsomorphic, kUndecided };
  Verdict verdict = Verdict::kUndecided;
  std::vector<std::uint32_t> witness;  // point map a -> b when isomorphic
  std::uint64_t nodes = 0;             // search nodes consumed
  std::string reason;
};
// Invariant screen first (certain refutations), then a propagation-driven
// backtracking search. A returned witness has been re-verified block by
// block. kUndecided only occurs when node_budget is exhausted.
IsoResult isomorphic(const TripleSystem& a, const TripleSystem& b,
                     std::uint64_t node_budget = 2000000);

// applies a point permutation and re-sorts
TripleSystem relabel(const TripleSystem& ts,
                     const std::vector<std::uint32_t>& perm);

// Text format: first line "v=<n>", then one "<i> <j> <k>" line per block,
// ascending within the line, lines sorted. Parsing rejects malformed input
// with field_error; the result is validated.
std::string to_block_text(const TripleSystem& ts);
TripleSystem from_block_text(const std::string& text);

}
