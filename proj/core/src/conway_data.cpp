#include "conway_data.hpp"

namespace trisec::detail {

namespace {

struct ConwayEntry {
  std::uint8_t p;
  std::uint8_t m;
  std::uint8_t c[14];  // c0..cm, padded with zeros
};

// Minimal monic primitive polynomials compatible with all subfield entries
// (word-order convention b_i = (-1)^(m-i) a_i), one row per (p, m) with
// p in {2,3,5,7,11,13,17,19} and p^m <= 2^24.
constexpr ConwayEntry kConway[] = {
    {2, 1, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 2, {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 3, {1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 4, {1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 5, {1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
    {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}},
    {2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0}},
    {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0}},
    {2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1, 0}},
    {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 1, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 2, {2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 3, {1, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 4, {2, 0, 0, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 5, {1, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 6, {2, 2, 1, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
    {3, 7, {1, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
    {3, 8, {2, 2, 2, 0, 1, 2, 0, 0, 1, 0, 0, 0, 0, 0}},
    {3, 9, {1, 1, 2, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}},
    {3, 10, {2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1, 0, 0, 0}},
    {3, 11, {1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0}},
    {3, 12, {2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1, 0}},
    {3, 13, {1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {5, 1, {3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 2, {2, 4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 3, {3, 3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 4, {2, 4, 4, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 5, {3, 4, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 6, {2, 0, 1, 4, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
    {5, 7, {3, 3, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
    {5, 8, {2, 4, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
    {5, 9, {3, 1, 0, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}},
    {5, 10, {2, 1, 4, 2, 3, 3, 0, 0, 0, 0, 1, 0, 0, 0}},
    {7, 1, {4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 2, {3, 6, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 3, {4, 0, 6, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 4, {3, 4, 5, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 5, {4, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 6, {3, 6, 4, 5, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
    {7, 7, {4, 6, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
    {7, 8, {3, 2, 6, 4, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
    {11, 1, {9, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {11, 2, {2, 7, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {11, 3, {9, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {11, 4, {2, 10, 8, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {11, 5, {9, 0, 10, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {11, 6, {2, 7, 6, 4, 3, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
    {13, 1, {11, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {13, 2, {2, 12, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {13, 3, {11, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {13, 4, {2, 12, 3, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {13, 5, {11, 4, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {13, 6, {2, 11, 11, 10, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
    {17, 1, {14, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {17, 2, {3, 16, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {17, 3, {14, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {17, 4, {3, 10, 7, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {17, 5, {14, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {19, 1, {17, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {19, 2, {2, 18, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {19, 3, {17, 4, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {19, 4, {2, 11, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {19, 5, {17, 5, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
};
}  // namespace

std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t m) {
  for (const auto& e : kConway) {
    if (e.p == p && e.m == m) {
      std::vector<std::uint32_t> c(m + 1);
      for (std::uint32_t i = 0; i <= m; ++i) c[i] = e.c[i];
      return c;
    }
  }
  return {};
}

}  // namespace trisec::detail
