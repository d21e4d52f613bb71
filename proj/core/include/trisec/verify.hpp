#pragma once

// Self-contained correctness suite: every closed form in the library checked
// against brute-force enumeration, plus the frozen reference data. Shared by
// the acceptance binary and the command-line `verify-all`.

#include <cstdint>
#include <string>
#include <vector>

#include "trisec/field.hpp"

namespace trisec {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned workers = 1;
  std::uint64_t seed = 1;
  // when nonzero, fields with q above the cap are skipped
  std::uint32_t q_cap = 0;
};

// Single-field variants: every (a, b) multiplicity row and every covered
// related monomial of one field against the closed forms.
CheckResult verify_cubic_forms_field(const Field& F, unsigned workers = 1);
CheckResult verify_related_monomials_field(const Field& F, unsigned workers = 1);

CheckResult check_cubic_closed_forms(const VerifyOptions& opts);
CheckResult check_nonhitting_reference(const VerifyOptions& opts);
CheckResult check_reduced_monomials(const VerifyOptions& opts);
CheckResult check_filter_exactness(const VerifyOptions& opts);
CheckResult check_triple_systems(const VerifyOptions& opts);
CheckResult check_kakeya_sizes(const VerifyOptions& opts);
CheckResult check_v0_bound_cases(const VerifyOptions& opts);
CheckResult check_representation_independence(const VerifyOptions& opts);

// all eight, in the order above
std::vector<CheckResult> run_all_checks(const VerifyOptions& opts = {});

}
