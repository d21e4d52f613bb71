#include "trisec/numbers.hpp"

#include <numeric>
#include <stdexcept>

namespace trisec {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t r = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) r = (unsigned __int128)r * base % mod;
    base = (unsigned __int128)base * base % mod;
    exp >>= 1;
  }
  return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = std::int64_t(n), nr = std::int64_t(a % n);
  while (nr != 0) {
    std::int64_t qq = r / nr;
    std::int64_t tmp = t - qq * nt;
    t = nt;
    nt = tmp;
    tmp = r - qq * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  if (t < 0) t += std::int64_t(n);
  return std::uint64_t(t);
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

std::vector<std::uint32_t> prime_powers_leq(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p <= limit; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t q = p;
    while (q <= limit) {
      out.push_back(std::uint32_t(q));
      q *= p;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}
