#include "trisec/kakeya.hpp"

#include <algorithm>
#include <set>

namespace trisec {
namespace {

std::uint64_t exact_div(std::uint64_t num, std::uint64_t den) {
  if (num % den != 0)
    throw internal_check_error("closed form produced a non-integer count");
  return num / den;
}

}  // namespace

std::uint32_t Plane::point_index(Elem x, Elem y, Elem z) const {
  const std::uint32_t q = F_.q();
  F_.check(x);
  F_.check(y);
  F_.check(z);
  if (x != 0) {
    const Elem xi = F_.inv(x);
    return F_.mul(y, xi) * q + F_.mul(z, xi);
  }
  if (y != 0) return q * q + F_.mul(z, F_.inv(y));
  if (z != 0) return q * q + q;
  throw field_error("(0 : 0 : 0) is not a projective point");
}

std::uint32_t Plane::line_index(Elem a, Elem b, Elem c) const {
  return point_index(a, b, c);
}

std::array<Elem, 3> Plane::coords(std::uint32_t idx) const {
  const std::uint32_t q = F_.q();
  if (idx < q * q) return {F_.one(), idx / q, idx % q};
  if (idx < q * q + q) return {0, F_.one(), idx - q * q};
  if (idx == q * q + q) return {0, 0, F_.one()};
  throw field_error("projective index out of range");
}

bool Plane::incident(std::uint32_t point, std::uint32_t line) const {
  const auto p = coords(point);
  const auto l = coords(line);
  return F_.add(F_.add(F_.mul(p[0], l[0]), F_.mul(p[1], l[1])),
                F_.mul(p[2], l[2])) == 0;
}

std::uint32_t Plane::line_through(std::uint32_t p1, std::uint32_t p2) const {
  const auto u = coords(p1);
  const auto v = coords(p2);
  const Elem a = F_.sub(F_.mul(u[1], v[2]), F_.mul(u[2], v[1]));
  const Elem b = F_.sub(F_.mul(u[2], v[0]), F_.mul(u[0], v[2]));
  const Elem c = F_.sub(F_.mul(u[0], v[1]), F_.mul(u[1], v[0]));
  if (a == 0 && b == 0 && c == 0)
    throw field_error("no unique line through a repeated point");
  return line_index(a, b, c);
}

std::vector<std::uint32_t> Plane::points_on(std::uint32_t line) const {
  const std::uint32_t q = F_.q();
  const auto [a, b, c] = coords(line);
  std::vector<std::uint32_t> pts;
  pts.reserve(q + 1);
  if (a != 0) {
    const Elem ai = F_.inv(a);
    for (Elem t = 0; t < q; ++t)
      pts.push_back(point_index(
          F_.neg(F_.mul(ai, F_.add(b, F_.mul(c, t)))), F_.one(), t));
    pts.push_back(point_index(F_.neg(F_.mul(ai, c)), 0, F_.one()));
  } else if (b != 0) {
    const Elem bi = F_.inv(b);
    for (Elem t = 0; t < q; ++t)
      pts.push_back(
          point_index(F_.one(), F_.neg(F_.mul(bi, F_.mul(c, t))), t));
    pts.push_back(point_index(0, F_.neg(F_.mul(bi, c)), F_.one()));
  } else {
    for (Elem t = 0; t < q; ++t) pts.push_back(point_index(F_.one(), t, 0));
    pts.push_back(point_index(0, F_.one(), 0));
  }
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw internal_check_error("line parametrization repeated a point");
  return pts;
}

std::vector<std::uint32_t> dk_set(const Plane& P, const PolyFn& f, Elem b) {
  const Field& F = P.field();
  const std::uint32_t q = F.q();
  F.check(b);
  const auto values = f.value_table(F);
  std::vector<std::uint32_t> pts;
  pts.reserve(q + 2);
  for (Elem x = 0; x < q; ++x)
    pts.push_back(P.point_index(x, values[x], F.one()));
  const std::uint32_t nucleus = P.point_index(0, F.one(), 0);
  pts.push_back(nucleus);
  pts.push_back(P.point_index(F.one(), b, 0));
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw internal_check_error("dual point set degenerated");

  // every line through the nucleus must pick up exactly one further point
  std::vector<std::uint32_t> lines;
  for (Elem c = 0; c < q; ++c) lines.push_back(P.line_index(F.one(), 0, c));
  lines.push_back(P.line_index(0, 0, F.one()));
  for (std::uint32_t line : lines) {
    std::uint32_t hit = 0;
    for (std::uint32_t pt : pts) hit += P.incident(pt, line);
    if (hit != 2)
      throw internal_check_error("nucleus line meets the set " +
                                 std::to_string(hit) + " times");
  }
  return pts;
}

std::map<std::uint64_t, std::uint64_t> set_intersection_distribution(
    const Plane& P, const std::vector<std::uint32_t>& points) {
  {
    auto copy = points;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
      throw field_error("point set contains duplicates");
    if (!copy.empty() && copy.back() >= P.size())
      throw field_error("point index out of range");
  }
  const Field& F = P.field();
  std::vector<std::array<Elem, 3>> cached;
  cached.reserve(points.size());
  for (std::uint32_t pt : points) cached.push_back(P.coords(pt));

  std::map<std::uint64_t, std::uint64_t> dist;
  for (std::uint32_t line = 0; line < P.size(); ++line) {
    const auto l = P.coords(line);
    std::uint64_t hit = 0;
    for (const auto& p : cached)
      hit += F.add(F.add(F.mul(p[0], l[0]), F.mul(p[1], l[1])),
                   F.mul(p[2], l[2])) == 0;
    ++dist[hit];
  }

  std::uint64_t total = 0, weighted = 0;
  for (auto [i, n] : dist) {
    total += n;
    weighted += i * n;
  }
  const std::uint64_t q = F.q();
  if (total != P.size() || weighted != points.size() * (q + 1))
    throw internal_check_error("line census identities violated");
  std::erase_if(dist, [](const auto& kv) { return kv.second == 0; });
  return dist;
}

bool kakeya_special_pair(const Field& F, Elem a, Elem b) {
  F.check(a);
  F.check(b);
  if (F.p() == 3) return a == 0 && b != 0 && F.cyclo_class(b, 2) == 0;
  // b = -a^2/3 (which is b = 0 when a = 0)
  return b == F.mul(F.mul(a, a), F.neg(F.inv(F.scalar(3 % F.p()))));
}

std::uint64_t kakeya_size_formula(const Field& F, Elem a, Elem b) {
  const std::uint64_t q = F.q();
  const bool special = kakeya_special_pair(F, a, b);
  if (F.p() == 3)
    return special ? exact_div(2 * q * q + 3 * q, 3)
                   : exact_div(2 * q * q + q, 3);
  if (q % 3 == 1)
    return special ? exact_div(2 * q * q + 2 * q - 1, 3)
                   : exact_div(2 * q * q + q, 3);
  return special ? exact_div(2 * q * q + 1, 3)
                 : exact_div(2 * q * q + q + 2, 3);
}

KakeyaSize kakeya_size(const Field& F, Elem a, Elem b) {
  KakeyaSize out;
  out.a = a;
  out.b = b;
  const std::uint64_t q = F.q();
  out.special = kakeya_special_pair(F, a, b);
  out.via_formula = kakeya_size_formula(F, a, b);

  // the same size through the multiplicity route, as a transcription check
  const std::uint64_t v0 = closed_form_cubic_intdist(F, a).at(0);
  const std::uint64_t m0 = closed_form_cubic_muldist(F, a, b).at(0);
  if (out.via_formula != q * q - v0 + m0)
    throw internal_check_error("closed-form size disagrees with v0 - M0");

  const Plane P(F);
  const auto dist =
      set_intersection_distribution(P, dk_set(P, PolyFn::cubic(a), b));
  const auto it = dist.find(0);
  out.u0_dual = it == dist.end() ? 0 : it->second;
  out.via_dual = q * q - out.u0_dual;
  out.agree = out.via_formula == out.via_dual;
  return out;
}

std::vector<std::pair<Elem, Elem>> kakeya_representatives(const Field& F) {
  const std::uint32_t q = F.q();
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a : {Elem(0), F.one()}) {
    std::set<Elem> bs = {0, F.one()};
    if (q % 2 == 1) {
      bs.insert(F.least_in_class(0, 2));
      bs.insert(F.least_in_class(1, 2));
    }
    if (F.p() != 3)
      bs.insert(F.mul(F.mul(a, a), F.neg(F.inv(F.scalar(3 % F.p())))));
    for (Elem b : bs) out.emplace_back(a, b);
  }
  return out;
}

std::vector<KakeyaSize> cubic_kakeya_table(const Field& F) {
  std::vector<KakeyaSize> rows;
  for (auto [a, b] : kakeya_representatives(F))
    rows.push_back(kakeya_size(F, a, b));
  return rows;
}

}
