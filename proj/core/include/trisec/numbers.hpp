#pragma once

// Small integer helpers shared across the library. Everything here operates on
// 64-bit integers with trial division; the sizes involved (q <= 2^24) keep that
// comfortably fast.

#include <cstdint>
#include <vector>

namespace trisec {

bool is_prime(std::uint64_t n);

// distinct prime divisors, ascending
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// inverse of a modulo n; throws std::invalid_argument when gcd(a, n) != 1
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n);

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b);

// all prime powers p^k in [2, limit], ascending
std::vector<std::uint32_t> prime_powers_leq(std::uint32_t limit);

}
