#include "trisec/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "trisec/numbers.hpp"
#include "trisec/parallel.hpp"

namespace trisec {
namespace {

// Visits (y, g_d(y)) for every y in F_q \ {1} without polynomial evaluation:
// y = alpha^t walks the exponent table while t*d mod (q-1) is maintained
// incrementally. Stops early when the visitor returns false.
template <typename Visit>
void walk_gd(const Field& F, std::uint64_t d, Visit&& visit) {
  if (!visit(0, F.one())) return;  // g_d(0) = (0 - 1)/(0 - 1) = 1
  const std::uint64_t q1 = F.q() - 1;
  const std::uint64_t dd = d % q1;
  std::uint64_t e = dd;
  for (std::uint64_t t = 1; t < q1; ++t) {
    const Elem y = F.exp(t);
    const Elem z =
        F.mul(F.sub(F.exp(e), F.one()), F.inv(F.sub(y, F.one())));
    if (!visit(y, z)) return;
    e += dd;
    if (e >= q1) e -= q1;
  }
}

bool singleton_structure_ok(const Field& F, std::uint64_t d,
                            std::vector<std::pair<Elem, Elem>> singles) {
  if (F.p() == 3) return singles.empty();
  if (F.q() % 2 == 0)
    return singles.size() == 1 && singles[0] == std::pair<Elem, Elem>{0, 1};
  if (singles.size() != 2) return false;
  const auto [y1, z1] = singles[0];
  const auto [y2, z2] = singles[1];
  if (y1 == 0 || y1 == F.neg(F.one())) return false;
  return y2 == F.inv(y1) &&
         z2 == F.mul(F.pow(y1, 1 - std::int64_t(d)), z1);
}

void cross_check_gcd(const Field& F, std::uint64_t d, bool zero_in_image) {
  const std::uint64_t expected = zero_in_image ? 3 : 1;
  if (std::gcd(d, std::uint64_t(F.q() - 1)) != expected)
    throw internal_check_error(
        "fiber structure of x^" + std::to_string(d) + " over GF(" +
        std::to_string(F.q()) + ") contradicts gcd(d, q-1) = " +
        std::to_string(expected));
}

}  // namespace

GdProfile gd_profile(const Field& F, std::uint64_t d) {
  GdProfile prof;
  prof.d = normalized_exponent(F, d);
  walk_gd(F, prof.d, [&](Elem y, Elem z) {
    prof.fibers[z].push_back(y);
    return true;
  });
  for (auto& [z, pre] : prof.fibers) {
    std::sort(pre.begin(), pre.end());
    prof.max_fiber = std::max<std::uint64_t>(prof.max_fiber, pre.size());
    if (pre.size() == 1) prof.singletons.emplace_back(pre[0], z);
  }
  prof.image_size = prof.fibers.size();
  prof.zero_in_image = prof.fibers.count(0) != 0;
  std::sort(prof.singletons.begin(), prof.singletons.end());
  return prof;
}

bool is_cubic_like(const Field& F, std::uint64_t d_raw) {
  const std::uint32_t q = F.q();
  const std::uint64_t d = normalized_exponent(F, d_raw);
  if (F.p() == 3 &&
      std::gcd(d - 1, std::uint64_t(q - 1)) != 2)
    return false;

  std::vector<std::uint8_t> cnt(q, 0);
  std::vector<Elem> first(q, 0);
  std::vector<Elem> touched;
  touched.reserve(q);
  bool oversized = false;
  walk_gd(F, d, [&](Elem y, Elem z) {
    if (cnt[z] == 2) {
      oversized = true;
      return false;
    }
    if (cnt[z]++ == 0) {
      first[z] = y;
      touched.push_back(z);
    }
    return true;
  });
  if (oversized) return false;

  std::vector<std::pair<Elem, Elem>> singles;
  for (Elem z : touched)
    if (cnt[z] == 1) singles.emplace_back(first[z], z);
  std::sort(singles.begin(), singles.end());
  if (!singleton_structure_ok(F, d, std::move(singles))) return false;
  cross_check_gcd(F, d, cnt[0] != 0);
  return true;
}

bool is_cubic_like(const Field& F, const GdProfile& profile) {
  if (F.p() == 3 &&
      std::gcd(profile.d - 1, std::uint64_t(F.q() - 1)) != 2)
    return false;
  if (profile.max_fiber > 2) return false;
  if (!singleton_structure_ok(F, profile.d, profile.singletons)) return false;
  cross_check_gcd(F, profile.d, profile.zero_in_image);
  return true;
}

CubicLikeCheck verify_cubic_like(const Field& F, std::uint64_t d,
                                 unsigned workers) {
  CubicLikeCheck out;
  out.filter = is_cubic_like(F, d);
  out.oracle = intersection_distribution(F, PolyFn::monomial(d), workers) ==
               closed_form_cubic_intdist(F, 0);
  out.agree = out.filter == out.oracle;
  return out;
}

ScanResult scan_all_d(const Field& F, const ScanOptions& opts) {
  const std::uint32_t q = F.q();
  ScanResult out;
  std::vector<std::uint8_t> hit(q, 0);
  parallel_for(q - 1, opts.workers,
               [&](std::uint64_t i) { hit[i + 1] = is_cubic_like(F, i + 1); });
  for (std::uint64_t d = 1; d < q; ++d)
    if (hit[d]) out.hits.push_back(d);

  if (opts.confirm) {
    const auto target = closed_form_cubic_intdist(F, 0);
    for (std::uint64_t d : out.hits) {
      auto dist = intersection_distribution(F, PolyFn::monomial(d), opts.workers);
      if (!(dist == target))
        throw internal_check_error("filter accepted x^" + std::to_string(d) +
                                   " over GF(" + std::to_string(q) +
                                   ") but enumeration disagrees");
      out.hit_distributions.push_back(std::move(dist));
    }
    out.confirmed = true;
  }
  return out;
}

std::vector<std::uint64_t> known_families(const Field& F) {
  const std::uint32_t p = F.p();
  const std::uint32_t m = F.m();
  const std::uint64_t q1 = F.q() - 1;
  std::set<std::uint64_t> ds;
  auto norm_add = [&](std::uint64_t v) {
    v %= q1;
    ds.insert(v == 0 ? q1 : v);
  };
  if (q1 == 1) return {1};

  if (p == 2) {
    for (std::uint32_t i = 1; i < m; ++i) {
      if (std::gcd(i, m) != 1) continue;
      const std::uint64_t d = (std::uint64_t(1) << i) + 1;
      norm_add(d);
      if (m % 2 == 1) {
        norm_add(mod_inverse(d % q1, q1));
        norm_add(q1 - (std::uint64_t(1) << i) % q1);
      }
    }
  } else if (p == 3) {
    auto pow3 = [](std::uint32_t e) {
      std::uint64_t r = 1;
      while (e--) r *= 3;
      return r;
    };
    for (std::uint32_t i = 1; i < m; ++i)
      if (std::gcd(i, m) == 1) norm_add(pow3(i));
    if (m == 1) norm_add(3);
    if (m % 2 == 1) {
      const std::uint64_t d1 = pow3((m + 1) / 2) + 2;
      const std::uint64_t d2 = 2 * pow3(m - 1) + 1;
      for (std::uint64_t d : {d1, d2}) {
        norm_add(d);
        norm_add(mod_inverse(d % q1, q1));
      }
    }
  } else {
    norm_add(3);
    if (p % 6 == 5 && m % 2 == 1) norm_add((2 * std::uint64_t(F.q()) - 1) / 3);
  }
  return {ds.begin(), ds.end()};
}

FamilyComparison compare_scan_to_families(
    const std::vector<std::uint64_t>& hits,
    const std::vector<std::uint64_t>& family) {
  FamilyComparison cmp;
  std::set_difference(hits.begin(), hits.end(), family.begin(), family.end(),
                      std::back_inserter(cmp.scan_only));
  std::set_difference(family.begin(), family.end(), hits.begin(), hits.end(),
                      std::back_inserter(cmp.family_only));
  return cmp;
}

}
