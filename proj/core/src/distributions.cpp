#include "trisec/distributions.hpp"

#include <algorithm>
#include <numeric>

#include "trisec/numbers.hpp"
#include "trisec/parallel.hpp"

namespace trisec {
namespace {

std::uint64_t exact_div(std::uint64_t num, std::uint64_t den) {
  if (num % den != 0)
    throw internal_check_error("closed form produced a non-integer count");
  return num / den;
}

void put(std::map<std::uint64_t, std::uint64_t>& counts, std::uint64_t i,
         std::uint64_t v) {
  if (v) counts[i] = v;
}

// Histogram scratch reused across rows: value -> occurrence count plus the
// list of touched values for O(distinct) reset.
struct RowScratch {
  explicit RowScratch(std::uint32_t q) : cnt(q, 0) { touched.reserve(q); }
  std::vector<std::uint32_t> cnt;
  std::vector<Elem> touched;

  void bump(Elem v) {
    if (cnt[v]++ == 0) touched.push_back(v);
  }
  void reset() {
    for (Elem v : touched) cnt[v] = 0;
    touched.clear();
  }
};

MultiplicityRow row_from_scratch(const Field& F, RowScratch& scratch, Elem b) {
  MultiplicityRow row;
  row.b = b;
  std::map<std::uint64_t, std::uint64_t> hist;
  for (Elem v : scratch.touched) ++hist[scratch.cnt[v]];
  put(row.counts, 0, F.q() - scratch.touched.size());
  for (auto [i, n] : hist) row.counts[i] = n;
  scratch.reset();
  return row;
}

}  // namespace

PolyFn PolyFn::monomial(std::uint64_t d) {
  if (d == 0) throw field_error("monomial exponent must be at least 1");
  PolyFn f;
  f.kind_ = Kind::kMonomial;
  f.d_ = d;
  return f;
}

PolyFn PolyFn::cubic(Elem a) {
  PolyFn f;
  f.kind_ = Kind::kCubic;
  f.a_ = a;
  return f;
}

PolyFn PolyFn::dense(std::vector<Elem> coeffs) {
  if (coeffs.empty()) throw field_error("dense polynomial needs coefficients");
  PolyFn f;
  f.kind_ = Kind::kDense;
  f.coeffs_ = std::move(coeffs);
  return f;
}

std::uint64_t PolyFn::exponent() const {
  if (kind_ != Kind::kMonomial) throw field_error("not a monomial");
  return d_;
}

Elem PolyFn::cubic_a() const {
  if (kind_ != Kind::kCubic) throw field_error("not a cubic");
  return a_;
}

const std::vector<Elem>& PolyFn::coeffs() const {
  if (kind_ != Kind::kDense) throw field_error("not a dense polynomial");
  return coeffs_;
}

Elem PolyFn::eval(const Field& F, Elem x) const {
  switch (kind_) {
    case Kind::kMonomial:
      return F.pow(x, std::int64_t(normalized_exponent(F, d_)));
    case Kind::kCubic: {
      const Elem x2 = F.mul(x, x);
      return F.mul(x2, F.sub(x, a_));
    }
    case Kind::kDense: {
      Elem acc = 0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = F.add(F.mul(acc, x), *it);
      return acc;
    }
  }
  throw internal_check_error("unreachable");
}

std::vector<Elem> PolyFn::value_table(const Field& F) const {
  const std::uint32_t q = F.q();
  if (kind_ == Kind::kCubic) F.check(a_);
  if (kind_ == Kind::kDense)
    for (Elem c : coeffs_) F.check(c);
  std::vector<Elem> vals(q);
  if (kind_ == Kind::kMonomial) {
    // one table walk: x = alpha^t has x^d = alpha^(t d mod q-1)
    const std::uint64_t q1 = q - 1;
    const std::uint64_t d = d_ % q1 == 0 && d_ != 0 ? q1 : d_ % q1;
    vals[0] = 0;
    std::uint64_t e = 0;
    for (std::uint64_t t = 0; t < q1; ++t) {
      vals[F.exp(t)] = F.exp(e);
      e += d;
      if (e >= q1) e -= q1;
    }
    return vals;
  }
  for (Elem x = 0; x < q; ++x) vals[x] = eval(F, x);
  return vals;
}

std::vector<Elem> PolyFn::reduced_coeffs(const Field& F) const {
  const std::uint32_t q = F.q();
  std::vector<Elem> out(q, 0);
  auto fold = [&](std::uint64_t e, Elem c) {
    if (c == 0) return;
    const std::uint64_t ee = e == 0 ? 0 : (e - 1) % (q - 1) + 1;
    out[ee] = F.add(out[ee], c);
  };
  switch (kind_) {
    case Kind::kMonomial:
      fold(d_, 1);
      break;
    case Kind::kCubic:
      fold(3, 1);
      fold(2, F.neg(a_));
      break;
    case Kind::kDense:
      for (std::size_t e = 0; e < coeffs_.size(); ++e) fold(e, coeffs_[e]);
      break;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::string PolyFn::describe() const {
  switch (kind_) {
    case Kind::kMonomial:
      return "monomial:" + std::to_string(d_);
    case Kind::kCubic:
      return "cubic:" + std::to_string(a_);
    case Kind::kDense: {
      std::string s = "dense:";
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs_[i]);
      }
      return s;
    }
  }
  throw internal_check_error("unreachable");
}

std::uint64_t normalized_exponent(const Field& F, std::uint64_t d) {
  if (d == 0) throw field_error("exponent must be at least 1");
  return (d - 1) % (F.q() - 1) + 1;
}

std::uint64_t MultiplicityRow::at(std::uint64_t i) const {
  const auto it = counts.find(i);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t IntersectionDistribution::at(std::uint64_t i) const {
  const auto it = counts.find(i);
  return it == counts.end() ? 0 : it->second;
}

MultiplicityRow multiplicity_row(const Field& F, const std::vector<Elem>& values,
                                 Elem b) {
  F.check(b);
  RowScratch scratch(F.q());
  for (Elem x = 0; x < F.q(); ++x) scratch.bump(F.sub(values[x], F.mul(b, x)));
  return row_from_scratch(F, scratch, b);
}

MultiplicityRow multiplicity_row(const Field& F, const PolyFn& f, Elem b) {
  return multiplicity_row(F, f.value_table(F), b);
}

MultiplicityRow multiplicity_row_nonzero(const Field& F, const PolyFn& f, Elem b) {
  F.check(b);
  const auto values = f.value_table(F);
  RowScratch scratch(F.q());
  for (Elem x = 1; x < F.q(); ++x) scratch.bump(F.sub(values[x], F.mul(b, x)));
  return row_from_scratch(F, scratch, b);
}

IntersectionDistribution intersection_distribution(const Field& F,
                                                   const std::vector<Elem>& values,
                                                   unsigned workers) {
  const std::uint32_t q = F.q();
  const unsigned w = workers == 0 ? 1 : workers;
  std::vector<std::map<std::uint64_t, std::uint64_t>> partial(w);
  parallel_chunks(q, w, [&](unsigned slot, std::uint64_t lo, std::uint64_t hi) {
    RowScratch scratch(q);
    auto& counts = partial[slot];
    for (Elem b = Elem(lo); b < Elem(hi); ++b) {
      for (Elem x = 0; x < q; ++x) scratch.bump(F.sub(values[x], F.mul(b, x)));
      const std::uint64_t distinct = scratch.touched.size();
      for (Elem v : scratch.touched) ++counts[scratch.cnt[v]];
      counts[0] += q - distinct;
      scratch.reset();
    }
  });
  IntersectionDistribution dist;
  for (const auto& part : partial)
    for (auto [i, n] : part) dist.counts[i] += n;
  std::erase_if(dist.counts, [](const auto& kv) { return kv.second == 0; });

  const auto chk = check_basic_equations(F, dist);
  if (!chk.pass)
    throw internal_check_error(
        "basic intersection equations violated: residuals " +
        std::to_string(chk.line_residual) + ", " +
        std::to_string(chk.point_residual) + ", " +
        std::to_string(chk.pair_residual));
  return dist;
}

IntersectionDistribution intersection_distribution(const Field& F, const PolyFn& f,
                                                   unsigned workers) {
  return intersection_distribution(F, f.value_table(F), workers);
}

BasicEquationCheck check_basic_equations(const Field& F,
                                         const IntersectionDistribution& dist) {
  const std::int64_t q = F.q();
  std::int64_t s0 = 0, s1 = 0, s2 = 0;
  for (auto [i, n] : dist.counts) {
    s0 += std::int64_t(n);
    s1 += std::int64_t(i) * std::int64_t(n);
    s2 += std::int64_t(i) * std::int64_t(i - 1) * std::int64_t(n);
  }
  BasicEquationCheck chk;
  chk.line_residual = s0 - q * q;
  chk.point_residual = s1 - q * q;
  chk.pair_residual = s2 - q * (q - 1);
  chk.pass = chk.line_residual == 0 && chk.point_residual == 0 &&
             chk.pair_residual == 0;
  return chk;
}

Elem CubicNormalization::map_b(const Field& F, Elem b) const {
  return F.mul(F.inv(scale), F.sub(b, shift));
}

CubicNormalization normalize_cubic(const Field& F,
                                   const std::vector<Elem>& coeffs) {
  if (coeffs.size() != 4 || coeffs[3] == 0)
    throw field_error("normalize_cubic expects degree exactly 3");
  for (Elem c : coeffs) F.check(c);
  CubicNormalization n;
  n.scale = coeffs[3];
  n.shift = coeffs[1];
  // a_3^{-1}(f - a_1 x - a_0) = x^3 + (a_2 / a_3) x^2, so a = -a_2 / a_3
  n.a = F.neg(F.mul(coeffs[2], F.inv(coeffs[3])));
  return n;
}

MultiplicityRow closed_form_cubic_muldist(const Field& F, Elem a, Elem b) {
  F.check(a);
  F.check(b);
  const std::uint64_t q = F.q();
  const std::uint32_t p = F.p();
  MultiplicityRow row;
  row.b = b;
  auto& c = row.counts;

  if (p == 2) {
    const bool matched = a == 0 ? b == 0 : b == F.mul(a, a);
    if (F.m() % 2 == 1) {
      if (matched) {
        put(c, 1, q);
      } else {
        put(c, 0, exact_div(q + 1, 3));
        put(c, 1, q / 2 - 1);
        put(c, 2, 1);
        put(c, 3, exact_div(q - 2, 6));
      }
    } else {
      if (matched) {
        put(c, 0, exact_div(2 * (q - 1), 3));
        put(c, 1, 1);
        put(c, 3, exact_div(q - 1, 3));
      } else {
        put(c, 0, exact_div(q - 1, 3));
        put(c, 1, q / 2);
        put(c, 2, 1);
        put(c, 3, exact_div(q - 4, 6));
      }
    }
    return row;
  }

  if (p == 3) {
    if (a == 0) {
      if (b == 0 || F.cyclo_class(b, 2) == 1) {
        put(c, 1, q);
      } else {
        put(c, 0, exact_div(2 * q, 3));
        put(c, 3, exact_div(q, 3));
      }
    } else {
      put(c, 0, exact_div(q, 3));
      put(c, 1, (q - 1) / 2);
      put(c, 2, 1);
      put(c, 3, exact_div(q - 3, 6));
    }
    return row;
  }

  // p > 3: reduce to the b-class of x^3 via t = b/a^2 + 1/3 (t = b when a = 0)
  const Elem third = F.inv(F.scalar(3 % p));
  const Elem t = a == 0 ? b : F.add(F.mul(b, F.inv(F.mul(a, a))), third);
  const bool modd = F.m() % 2 == 1;

  if (q % 3 == 1) {
    std::int64_t j;
    if (p % 12 == 1 || !modd)
      j = 1;
    else if (p % 12 == 7)
      j = -1;
    else
      throw internal_check_error("impossible residue class for q = 1 mod 3");
    if (t == 0) {
      put(c, 0, exact_div(2 * (q - 1), 3));
      put(c, 1, 1);
      put(c, 3, exact_div(q - 1, 3));
    } else if (F.cyclo_class(t, 2) == 0) {
      put(c, 0, exact_div(q - 1, 3));
      put(c, 1, std::uint64_t((std::int64_t(q) - j) / 2));
      put(c, 2, std::uint64_t(1 + j));
      put(c, 3, exact_div(std::uint64_t(std::int64_t(q) - 4 - 3 * j), 6));
    } else {
      put(c, 0, exact_div(q - 1, 3));
      put(c, 1, std::uint64_t((std::int64_t(q) + j) / 2));
      put(c, 2, std::uint64_t(1 - j));
      put(c, 3, exact_div(std::uint64_t(std::int64_t(q) - 4 + 3 * j), 6));
    }
  } else {
    std::int64_t k;
    if (p % 12 == 5 && modd)
      k = 1;
    else if (p % 12 == 11 && modd)
      k = -1;
    else
      throw internal_check_error("impossible residue class for q = 2 mod 3");
    if (t == 0) {
      put(c, 1, q);
    } else if (F.cyclo_class(t, 2) == 0) {
      put(c, 0, exact_div(q + 1, 3));
      put(c, 1, std::uint64_t((std::int64_t(q) - 2 + k) / 2));
      put(c, 2, std::uint64_t(1 - k));
      put(c, 3, exact_div(std::uint64_t(std::int64_t(q) - 2 + 3 * k), 6));
    } else {
      put(c, 0, exact_div(q + 1, 3));
      put(c, 1, std::uint64_t((std::int64_t(q) - 2 - k) / 2));
      put(c, 2, std::uint64_t(1 + k));
      put(c, 3, exact_div(std::uint64_t(std::int64_t(q) - 2 - 3 * k), 6));
    }
  }
  return row;
}

IntersectionDistribution closed_form_cubic_intdist(const Field& F, Elem a) {
  F.check(a);
  const std::uint64_t q = F.q();
  IntersectionDistribution dist;
  auto& c = dist.counts;
  if (F.p() != 3) {
    put(c, 0, exact_div(q * q - 1, 3));
    put(c, 1, exact_div(q * q - q + 2, 2));
    put(c, 2, q - 1);
    put(c, 3, exact_div((q - 1) * (q - 2), 6));
  } else if (a == 0) {
    put(c, 0, exact_div(q * (q - 1), 3));
    put(c, 1, exact_div(q * (q + 1), 2));
    put(c, 3, exact_div(q * (q - 1), 6));
  } else {
    put(c, 0, exact_div(q * q, 3));
    put(c, 1, exact_div(q * (q - 1), 2));
    put(c, 2, q);
    put(c, 3, exact_div(q * (q - 3), 6));
  }
  return dist;
}

bool related_monomial_covered(const Field& F, std::uint64_t d) {
  const std::uint64_t q = F.q();
  const std::uint32_t p = F.p();
  const bool modd = F.m() % 2 == 1;
  if (p == 2 && modd) return d == (q + 1) / 3 || (q >= 4 && d == q - 3);
  if (p == 2) return d == q - 3;
  if (p == 3) return d == 2 * q / 3 || (q >= 4 && d == q - 3);
  if (q % 3 == 1) return d == q - 3;
  return d == (q + 1) / 3 || (q >= 4 && d == q - 3);
}

IntersectionDistribution closed_form_related_monomial(const Field& F,
                                                      std::uint64_t d) {
  if (!related_monomial_covered(F, d))
    throw field_error("no closed form for this (q, d)");
  const std::uint64_t q = F.q();
  const std::uint32_t p = F.p();
  const bool modd = F.m() % 2 == 1;
  IntersectionDistribution dist;
  auto& c = dist.counts;
  if (p == 2 && modd) {
    put(c, 0, exact_div(q * q - 1, 3));
    put(c, 1, exact_div(q * q - q + 2, 2));
    put(c, 2, q - 1);
    put(c, 3, exact_div((q - 1) * (q - 2), 6));
  } else if (p == 2) {
    put(c, 0, exact_div((q - 1) * (q - 1), 3));
    put(c, 1, exact_div(3 * q * q + 7 * q - 4, 6));
    put(c, 3, exact_div((q - 1) * (q - 4), 6));
    put(c, 4, exact_div(q - 1, 3));
  } else if (p == 3) {
    put(c, 0, exact_div((2 * q + 3) * (q - 1), 6));
    put(c, 1, exact_div(q * q - 2 * q + 3, 2));
    put(c, 2, exact_div(3 * (q - 1), 2));
    put(c, 3, exact_div((q - 1) * (q - 3), 6));
  } else if (q % 3 == 1) {
    put(c, 0, exact_div((2 * q + 1) * (q - 1), 6));
    put(c, 1, exact_div(3 * q * q - 2 * q + 5, 6));
    put(c, 2, exact_div(3 * (q - 1), 2));
    put(c, 3, exact_div((q - 1) * (q - 7), 6));
    put(c, 4, exact_div(q - 1, 3));
  } else {
    put(c, 0, exact_div((2 * q + 5) * (q - 1), 6));
    put(c, 1, exact_div(q * q - 4 * q + 5, 2));
    put(c, 2, exact_div(5 * (q - 1), 2));
    put(c, 3, exact_div((q - 1) * (q - 5), 6));
  }
  return dist;
}

std::vector<Elem> permutation_set(const Field& F, const PolyFn& f) {
  const std::uint32_t q = F.q();
  const auto values = f.value_table(F);
  std::vector<Elem> nf;
  RowScratch scratch(q);
  for (Elem cc = 0; cc < q; ++cc) {
    for (Elem x = 0; x < q; ++x) scratch.bump(F.add(values[x], F.mul(cc, x)));
    if (scratch.touched.size() == q) nf.push_back(cc);
    scratch.reset();
  }
  return nf;
}

V0Bounds check_v0_bounds(const Field& F, const PolyFn& f) {
  const std::uint64_t q = F.q();
  std::uint64_t d;
  if (f.kind() == PolyFn::Kind::kMonomial) {
    d = f.exponent();
  } else {
    const auto reduced = f.reduced_coeffs(F);
    d = reduced.size() - 1;
  }
  if (d < 2 || d > q - 1)
    throw field_error("bounds need a degree in [2, q-1], got " + std::to_string(d));

  V0Bounds out;
  out.degree = std::uint32_t(d);
  out.nf_size = permutation_set(F, f).size();
  out.v0 = intersection_distribution(F, f).at(0);
  out.lower = ceil_div(q - 1, d) * (q - out.nf_size);
  out.upper = (q - ceil_div(q, d)) * (q - out.nf_size);
  out.within = out.lower <= out.v0 && out.v0 <= out.upper;
  out.lower_tight = out.v0 == out.lower;
  out.upper_tight = out.v0 == out.upper;
  return out;
}

NonhittingTable monomial_nonhitting_table(const Field& F, unsigned workers,
                                          std::uint32_t budget) {
  const std::uint32_t q = F.q();
  if (q > budget)
    throw budget_error("nonhitting table over GF(" + std::to_string(q) +
                       ") exceeds budget " + std::to_string(budget));
  const std::uint32_t q1 = q - 1;

  std::vector<std::uint64_t> v0(q1 + 1, 0);
  parallel_for(q1, workers, [&](std::uint64_t i) {
    const std::uint64_t d = i + 1;
    RowScratch scratch(q);
    const auto values = PolyFn::monomial(d).value_table(F);
    std::uint64_t miss = 0;
    for (Elem b = 0; b < q; ++b) {
      for (Elem x = 0; x < q; ++x) scratch.bump(F.sub(values[x], F.mul(b, x)));
      miss += q - scratch.touched.size();
      scratch.reset();
    }
    v0[d] = miss;
  });

  NonhittingTable table;
  table.q = q;
  std::vector<bool> grouped(q1 + 1, false);
  for (std::uint64_t d = 1; d <= q1; ++d) {
    if (grouped[d]) continue;
    NonhittingEntry e;
    e.ds = {d};
    e.v0 = v0[d];
    if (std::gcd(d, std::uint64_t(q1)) == 1) {
      const std::uint64_t dinv = q1 == 1 ? 1 : mod_inverse(d, q1);
      const std::uint64_t dn = dinv == 0 ? q1 : dinv;
      if (dn != d) {
        if (v0[dn] != v0[d])
          throw internal_check_error("inverse exponents disagree on v0");
        e.ds.push_back(dn);
        grouped[dn] = true;
      }
    }
    std::sort(e.ds.begin(), e.ds.end());
    table.entries.push_back(std::move(e));
  }
  return table;
}

InverseDistributionCheck inverse_distribution_check(const Field& F,
                                                    const PolyFn& f) {
  const std::uint32_t q = F.q();
  const auto values = f.value_table(F);
  InverseDistributionCheck out;

  std::vector<Elem> inverse(q, 0);
  std::vector<bool> seen(q, false);
  for (Elem x = 0; x < q; ++x) {
    if (seen[values[x]]) return out;  // not injective
    seen[values[x]] = true;
    inverse[values[x]] = x;
  }
  out.is_permutation = true;

  auto rows_of = [&](const std::vector<Elem>& vals) {
    std::vector<std::map<std::uint64_t, std::uint64_t>> rows;
    rows.reserve(q);
    for (Elem b = 0; b < q; ++b)
      rows.push_back(multiplicity_row(F, vals, b).counts);
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  out.rows_match = rows_of(values) == rows_of(inverse);
  return out;
}

}
