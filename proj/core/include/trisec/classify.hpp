#pragma once

// Structural filter deciding which monomials x^d share the intersection
// distribution of x^3, built on the fiber census of the difference quotient
// g_d(x) = (x^d - 1)/(x - 1) over F_q \ {1}.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "trisec/distributions.hpp"
#include "trisec/field.hpp"

namespace trisec {

struct GdProfile {
  std::uint64_t d = 0;  // normalized into [1, q-1]
  std::uint64_t image_size = 0;
  std::uint64_t max_fiber = 0;
  bool zero_in_image = false;
  // fibers of size one as (preimage y, value z), ascending in y
  std::vector<std::pair<Elem, Elem>> singletons;
  // value z -> sorted preimages
  std::map<Elem, std::vector<Elem>> fibers;
};
GdProfile gd_profile(const Field& F, std::uint64_t d);

// True when the fibers of g_d force the x^3 intersection distribution:
//   q even:     one singleton fiber, namely g_d(0) = 1, all others of size 2
//   q = 3^m:    no singletons, all fibers of size 2, and gcd(d-1, q-1) = 2
//   q odd else: two singletons (y, z), (1/y, y^{1-d} z) with y not in {0,-1},
//               all other fibers of size 2
// A passing d additionally has gcd(d, q-1) = 3 or 1 according to whether 0
// lies in the image; that consequence is cross-checked internally.
bool is_cubic_like(const Field& F, std::uint64_t d);

// Same predicate evaluated from a finished profile (no early exit); used to
// cross-check the streaming path.
bool is_cubic_like(const Field& F, const GdProfile& profile);

struct CubicLikeCheck {
  bool filter = false;  // structural fiber test
  bool oracle = false;  // enumerated distribution matches the x^3 one
  bool agree = false;
};
CubicLikeCheck verify_cubic_like(const Field& F, std::uint64_t d,
                                 unsigned workers = 1);

struct ScanOptions {
  bool confirm = true;  // re-check every hit against the enumeration oracle
  unsigned workers = 1;
};
struct ScanResult {
  std::vector<std::uint64_t> hits;  // exponents in [1, q-1], ascending
  bool confirmed = false;
  // when confirmed, the enumerated distribution of each hit, same order
  std::vector<IntersectionDistribution> hit_distributions;
};
// Filters every d in [1, q-1]. With confirm on, a hit whose enumerated
// distribution disagrees with the closed form throws internal_check_error.
ScanResult scan_all_d(const Field& F, const ScanOptions& opts = {});

// Exponents produced by the known constructions (quadratic-type families in
// characteristic 2, Frobenius powers plus two conjectured families in
// characteristic 3, the cube itself and its inverse otherwise), normalized
// into [1, q-1], deduplicated, ascending.
std::vector<std::uint64_t> known_families(const Field& F);

struct FamilyComparison {
  std::vector<std::uint64_t> scan_only;    // found by scan, not predicted
  std::vector<std::uint64_t> family_only;  // predicted, not found by scan
  bool equal() const { return scan_only.empty() && family_only.empty(); }
};
FamilyComparison compare_scan_to_families(const std::vector<std::uint64_t>& hits,
                                          const std::vector<std::uint64_t>& family);

}
