#pragma once

// Multiplicity and intersection distributions of polynomial functions:
// brute-force enumeration (the oracle everything else is checked against)
// plus the closed forms for x^3 - a x^2 and the monomials reducible to it.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trisec/field.hpp"

namespace trisec {

// A polynomial function over a field, tagged with how it was specified.
// Monomial exponents are kept verbatim for reporting; evaluation reduces
// them mod q-1 on nonzero arguments as usual.
class PolyFn {
 public:
  enum class Kind { kMonomial, kCubic, kDense };

  static PolyFn monomial(std::uint64_t d);        // x^d, d >= 1
  static PolyFn cubic(Elem a);                    // x^3 - a x^2
  static PolyFn dense(std::vector<Elem> coeffs);  // c0 + c1 x + c2 x^2 + ...

  Kind kind() const { return kind_; }
  std::uint64_t exponent() const;           // monomial only
  Elem cubic_a() const;                     // cubic only
  const std::vector<Elem>& coeffs() const;  // dense only

  Elem eval(const Field& F, Elem x) const;
  std::vector<Elem> value_table(const Field& F) const;

  // dense coefficient vector of the same function (degree < q), obtained by
  // folding exponents with x^q = x
  std::vector<Elem> reduced_coeffs(const Field& F) const;

  std::string describe() const;  // "monomial:3" | "cubic:4" | "dense:0,1,2"

 private:
  PolyFn() = default;
  Kind kind_ = Kind::kMonomial;
  std::uint64_t d_ = 0;
  Elem a_ = 0;
  std::vector<Elem> coeffs_;
};

// x^d and x^d' agree as functions; returns d' in [1, q-1]
std::uint64_t normalized_exponent(const Field& F, std::uint64_t d);

// sparse row i -> M_i(f, b); zero entries omitted
struct MultiplicityRow {
  Elem b = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t at(std::uint64_t i) const;
  bool same_counts(const MultiplicityRow& o) const { return counts == o.counts; }
};

// sparse i -> v_i; zero entries omitted
struct IntersectionDistribution {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t at(std::uint64_t i) const;
  bool operator==(const IntersectionDistribution& o) const {
    return counts == o.counts;
  }
};

struct BasicEquationCheck {
  bool pass = false;
  std::int64_t line_residual = 0;   // sum v_i - q^2
  std::int64_t point_residual = 0;  // sum i v_i - q^2
  std::int64_t pair_residual = 0;   // sum i(i-1) v_i - q(q-1)
};

MultiplicityRow multiplicity_row(const Field& F, const PolyFn& f, Elem b);
MultiplicityRow multiplicity_row(const Field& F, const std::vector<Elem>& values,
                                 Elem b);
// counts over nonzero solutions only (the M* variant)
MultiplicityRow multiplicity_row_nonzero(const Field& F, const PolyFn& f, Elem b);

// Sums rows over all b. The basic identities are asserted internally;
// a violation throws internal_check_error.
IntersectionDistribution intersection_distribution(const Field& F, const PolyFn& f,
                                                   unsigned workers = 1);
IntersectionDistribution intersection_distribution(const Field& F,
                                                   const std::vector<Elem>& values,
                                                   unsigned workers = 1);

BasicEquationCheck check_basic_equations(const Field& F,
                                         const IntersectionDistribution& dist);

// x^3 - a x^2 normal form of a degree-3 polynomial, with the records needed
// to map multiplicity rows of the original to rows of the normal form:
// M_i(f, b) = M_i(x^3 - a x^2, map_b(b)).
struct CubicNormalization {
  Elem a = 0;      // normalized polynomial is x^3 - a x^2
  Elem scale = 0;  // leading coefficient of the input
  Elem shift = 0;  // linear coefficient of the input
  Elem map_b(const Field& F, Elem b) const;
};
CubicNormalization normalize_cubic(const Field& F, const std::vector<Elem>& coeffs);

// Closed forms for f = x^3 - a x^2 (any characteristic, full case tree).
MultiplicityRow closed_form_cubic_muldist(const Field& F, Elem a, Elem b);
IntersectionDistribution closed_form_cubic_intdist(const Field& F, Elem a);

// Closed forms for the handful of monomial families whose distributions
// reduce to the cubic ones. Throws field_error when (q, d) is not covered.
bool related_monomial_covered(const Field& F, std::uint64_t d);
IntersectionDistribution closed_form_related_monomial(const Field& F,
                                                      std::uint64_t d);

// N_f = { c : f(x) + c x is a permutation }, ascending
std::vector<Elem> permutation_set(const Field& F, const PolyFn& f);

struct V0Bounds {
  std::uint64_t v0 = 0, lower = 0, upper = 0, nf_size = 0;
  std::uint32_t degree = 0;
  bool within = false, lower_tight = false, upper_tight = false;
};
// ceil((q-1)/d) (q-|N_f|) <= v0 <= (q - ceil(q/d)) (q-|N_f|), where d is the
// monomial label or the reduced functional degree; requires 2 <= d <= q-1
V0Bounds check_v0_bounds(const Field& F, const PolyFn& f);

struct NonhittingEntry {
  std::vector<std::uint64_t> ds;  // a single exponent or an inverse pair, ascending
  std::uint64_t v0 = 0;
};
struct NonhittingTable {
  std::uint32_t q = 0;
  std::vector<NonhittingEntry> entries;  // ascending by smallest exponent
};
// v0(x^d) for every d in [1, q-1], grouping d with its inverse mod q-1 when
// gcd(d, q-1) = 1 and the pair is distinct (grouped exponents share v0)
NonhittingTable monomial_nonhitting_table(const Field& F, unsigned workers = 1,
                                          std::uint32_t budget = 512);

struct InverseDistributionCheck {
  bool is_permutation = false;
  bool rows_match = false;  // multiplicity rows of f and f^{-1} agree as multisets
};
InverseDistributionCheck inverse_distribution_check(const Field& F, const PolyFn& f);

}
