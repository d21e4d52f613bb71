#pragma once

// The projective plane PG(2, q), point sets dual to Kakeya sets, and the
// closed-form sizes of the Kakeya sets attached to x^3 - a x^2.

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "trisec/distributions.hpp"
#include "trisec/field.hpp"

namespace trisec {

// Points and lines are indexed by canonical representatives: (1 : y : z)
// maps to y*q + z, (0 : 1 : z) to q^2 + z, and (0 : 0 : 1) to q^2 + q.
// Lines [a : b : c] (the points with ax + by + cz = 0) use the same scheme.
class Plane {
 public:
  explicit Plane(const Field& F) : F_(F) {}

  const Field& field() const { return F_; }
  std::uint32_t size() const {  // number of points = number of lines
    return F_.q() * F_.q() + F_.q() + 1;
  }

  std::uint32_t point_index(Elem x, Elem y, Elem z) const;
  std::uint32_t line_index(Elem a, Elem b, Elem c) const;
  std::array<Elem, 3> coords(std::uint32_t idx) const;  // representative

  bool incident(std::uint32_t point, std::uint32_t line) const;
  std::uint32_t line_through(std::uint32_t p1, std::uint32_t p2) const;
  std::vector<std::uint32_t> points_on(std::uint32_t line) const;

 private:
  const Field& F_;
};

// The q+2 points { (x : f(x) : 1) } plus (0 : 1 : 0) and (1 : b : 0);
// (0 : 1 : 0) is verified to be an internal nucleus (every line through it
// meets the set in exactly one further point) before returning.
std::vector<std::uint32_t> dk_set(const Plane& P, const PolyFn& f, Elem b);

// i -> number of lines meeting `points` in exactly i of them. The sum
// identities over all lines are checked internally.
std::map<std::uint64_t, std::uint64_t> set_intersection_distribution(
    const Plane& P, const std::vector<std::uint32_t>& points);

struct KakeyaSize {
  Elem a = 0, b = 0;
  bool special = false;           // (a, b) lies in the distinguished branch
  std::uint64_t via_formula = 0;  // closed form
  std::uint64_t via_dual = 0;     // q^2 minus the dual set's non-hitting index
  std::uint64_t u0_dual = 0;
  bool agree = false;
};
// Size of the Kakeya set whose dual is dk_set(x^3 - a x^2, b), computed
// independently by the closed form and by line enumeration in the plane.
KakeyaSize kakeya_size(const Field& F, Elem a, Elem b);

// closed form only
std::uint64_t kakeya_size_formula(const Field& F, Elem a, Elem b);

// The slope pairs that land in the off-size branch of the closed form:
// b in the square class when q = 3^m and a = 0, b = -a^2/3 otherwise.
bool kakeya_special_pair(const Field& F, Elem a, Elem b);

// Representative (a, b) pairs covering every branch of the closed form:
// a in {0, 1}, b in {0, 1, least square, least non-square, -a^2/3} as
// applicable.
std::vector<std::pair<Elem, Elem>> kakeya_representatives(const Field& F);

// One row per representative pair, each checked against plane enumeration.
std::vector<KakeyaSize> cubic_kakeya_table(const Field& F);

}
