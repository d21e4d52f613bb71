#include "trisec/field.hpp"

#include <algorithm>
#include <sstream>

#include "conway_data.hpp"
#include "trisec/numbers.hpp"

namespace trisec {
namespace {

constexpr std::uint32_t kAddTableMaxQ = 2048;

// Dense little-endian coefficient vectors over F_p, used only during
// construction. Leading zeros are allowed; degree is tracked implicitly.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  const std::size_t dm = f.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t c = a.back();
    if (c) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        std::uint64_t v = a[shift + i] + (p - 1) * c % p * f[i] % p;
        a[shift + i] = std::uint32_t(v % p);
      }
    }
    a.pop_back();
  }
  trim(a);
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = std::uint32_t((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mul_mod(r, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic on the fly
    const std::uint64_t lead_inv = mod_pow(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const std::uint64_t c = a.back() * lead_inv % p;
      if (c) {
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
          std::uint64_t v = a[shift + i] + (p - 1) * c % p * b[i] % p;
          a[shift + i] = std::uint32_t(v % p);
        }
      }
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool poly_is_x(const Poly& a) { return a.size() == 2 && a[0] == 0 && a[1] == 1; }

// Rabin's test: f (monic, degree m) is irreducible over F_p iff x^{p^m} == x
// mod f and gcd(x^{p^{m/r}} - x, f) = 1 for every prime r | m.
bool is_irreducible(const Poly& f, std::uint32_t p, std::uint32_t m) {
  const Poly x{0, 1};
  std::uint64_t pm = 1;
  for (std::uint32_t i = 0; i < m; ++i) pm *= p;
  if (!poly_is_x(poly_pow_mod(x, pm, f, p))) return false;
  for (std::uint64_t r : prime_factors(m)) {
    std::uint64_t pk = 1;
    for (std::uint32_t i = 0; i < m / r; ++i) pk *= p;
    Poly h = poly_pow_mod(x, pk, f, p);
    // h -= x
    if (h.size() < 2) h.resize(2, 0);
    h[1] = std::uint32_t((h[1] + p - 1) % p);
    trim(h);
    if (h.empty()) return false;  // all factors of f live in a proper subfield
    if (poly_gcd(h, f, p).size() != 1) return false;
  }
  return true;
}

// x generates the full multiplicative group mod f; implies f is primitive
// (and in particular irreducible).
bool x_has_full_order(const Poly& f, std::uint32_t p, std::uint32_t m,
                      const std::vector<std::uint64_t>& q1_factors) {
  const Poly x{0, 1};
  std::uint64_t q1 = 1;
  for (std::uint32_t i = 0; i < m; ++i) q1 *= p;
  q1 -= 1;
  if (poly_pow_mod(x, q1, f, p) != Poly{1}) return false;
  for (std::uint64_t r : q1_factors)
    if (poly_pow_mod(x, q1 / r, f, p) == Poly{1}) return false;
  return true;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t r : factors)
      if (mod_pow(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw internal_check_error("no primitive root found");
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m,
                                           std::uint64_t q) {
  if (m == 1) {
    const std::uint32_t g = smallest_primitive_root(p);
    return {(p - g) % p, 1};
  }
  auto conway = detail::conway_polynomial(p, m);
  if (!conway.empty()) return conway;
  // Deterministic fallback: smallest primitive polynomial by ascending base-p
  // encoding of (c_0..c_{m-1}) with c_{m-1} most significant.
  const auto q1_factors = prime_factors(q - 1);
  for (std::uint64_t n = 1; n < q; ++n) {
    if (n % p == 0) continue;  // constant term zero means x divides f
    Poly f(m + 1, 0);
    std::uint64_t t = n;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = std::uint32_t(t % p);
      t /= p;
    }
    f[m] = 1;
    if (x_has_full_order(f, p, m, q1_factors))
      return std::vector<std::uint32_t>(f.begin(), f.end());
  }
  throw internal_check_error("primitive polynomial search exhausted");
}

}  // namespace

void Field::check(Elem a) const {
  if (a >= q_) throw field_error("element index out of range");
}

Elem Field::scalar(std::uint32_t c) const {
  if (c >= p_) throw field_error("scalar out of prime subfield range");
  return c;
}

Elem Field::add_digits(Elem a, Elem b) const {
  Elem r = 0;
  std::uint32_t mult = 1;
  while (a || b) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  check(a);
  if (a == 0) throw field_error("inverse of zero");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q1_ - l];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  check(a);
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw field_error("negative power of zero");
  }
  std::int64_t r = e % std::int64_t(q1_);
  if (r < 0) r += q1_;
  return exp_[std::uint64_t(log_[a]) * std::uint64_t(r) % q1_];
}

std::uint32_t Field::log(Elem a) const {
  check(a);
  if (a == 0) throw field_error("log of zero");
  return log_[a];
}

std::uint32_t Field::trace(Elem a) const {
  check(a);
  Elem acc = a, t = a;
  for (std::uint32_t i = 1; i < m_; ++i) {
    t = pow(t, p_);
    acc = add(acc, t);
  }
  if (acc >= p_) throw internal_check_error("trace left the prime subfield");
  return acc;
}

std::uint32_t Field::cyclo_class(Elem x, std::uint32_t N) const {
  check(x);
  if (x == 0) throw field_error("cyclotomic class of zero");
  if (N == 0 || q1_ % N != 0) throw field_error("class count must divide q-1");
  return log_[x] % N;
}

Elem Field::least_in_class(std::uint32_t i, std::uint32_t N) const {
  if (N == 0 || q1_ % N != 0) throw field_error("class count must divide q-1");
  for (Elem x = 1; x < q_; ++x)
    if (log_[x] % N == i) return x;
  throw field_error("empty cyclotomic class");
}

bool Field::is_square(Elem x) const { return cyclo_class(x, 2) == 0; }

std::uint64_t Field::cyclotomic_number(std::uint32_t i, std::uint32_t j) const {
  if (p_ == 2) throw field_error("order-2 cyclotomy requires odd q");
  if (i > 1 || j > 1) throw field_error("cyclotomic_number implements order 2 only");
  std::uint64_t count = 0;
  for (Elem x = 1; x < q_; ++x) {
    if (log_[x] % 2 != i) continue;
    const Elem y = add(x, 1);
    if (y != 0 && log_[y] % 2 == j) ++count;
  }
  // closed form: for q = 1 mod 4 the matrix is ((q-5)/4 on (0,0), (q-1)/4
  // elsewhere); for q = 3 mod 4 it is (q+1)/4 on (0,1) and (q-3)/4 elsewhere
  std::uint64_t expected;
  if (q_ % 4 == 1)
    expected = (i == 0 && j == 0) ? (q_ - 5) / 4 : (q_ - 1) / 4;
  else
    expected = (i == 0 && j == 1) ? (q_ + 1) / 4 : (q_ - 3) / 4;
  if (count != expected)
    throw internal_check_error("cyclotomic number mismatch: enumerated " +
                               std::to_string(count) + ", closed form " +
                               std::to_string(expected));
  return count;
}

void Field::build_tables() {
  q1_ = q_ - 1;
  exp_.assign(q1_, 0);
  log_.assign(q_, 0xFFFFFFFFu);

  // iterate powers of x mod f
  Poly f(modulus_.begin(), modulus_.end());
  Poly cur{1};
  for (std::uint32_t i = 0; i < q1_; ++i) {
    Elem idx = 0;
    std::uint32_t mult = 1;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      idx += cur[k] * mult;
      mult *= p_;
    }
    if (i > 0 && idx == 1)
      throw field_error("modulus is irreducible but not primitive: x has order " +
                        std::to_string(i));
    exp_[i] = idx;
    log_[idx] = i;
    // cur *= x
    cur.insert(cur.begin(), 0);
    if (cur.size() == f.size()) {
      const std::uint64_t c = cur.back();
      if (c) {
        for (std::size_t k = 0; k + 1 < f.size(); ++k) {
          std::uint64_t v = cur[k] + (p_ - 1) * c % p_ * f[k] % p_;
          cur[k] = std::uint32_t(v % p_);
        }
      }
      cur.pop_back();
      trim(cur);
    }
  }
  if (cur != Poly{1})
    throw internal_check_error("x^(q-1) != 1 after full multiplicative cycle");
  for (Elem a = 1; a < q_; ++a)
    if (log_[a] == 0xFFFFFFFFu)
      throw internal_check_error("exp table does not cover all nonzero elements");

  alpha_ = exp_[q1_ == 1 ? 0 : 1];
  half_ = q1_ / 2;  // log of -1 when q is odd

  if (p_ != 2 && q_ <= kAddTableMaxQ) {
    add_table_.assign(std::size_t(q_) * q_, 0);
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = a; b < q_; ++b) {
        const Elem s = add_digits(a, b);
        add_table_[std::size_t(a) * q_ + b] = s;
        add_table_[std::size_t(b) * q_ + a] = s;
      }
  }
}

Field Field::build(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw field_error("p must be prime");
  if (m == 0) throw field_error("m must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ) throw field_error("field too large: q exceeds 2^24");
  }
  Field F;
  F.p_ = p;
  F.m_ = m;
  F.q_ = std::uint32_t(q);
  F.modulus_ = default_modulus(p, m, q);
  F.build_tables();
  return F;
}

Field Field::build(std::uint32_t p, std::uint32_t m,
                   const std::vector<std::uint32_t>& modulus) {
  if (!is_prime(p)) throw field_error("p must be prime");
  if (m == 0) throw field_error("m must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ) throw field_error("field too large: q exceeds 2^24");
  }
  if (modulus.size() != m + 1) throw field_error("modulus must have degree m");
  for (std::uint32_t c : modulus)
    if (c >= p) throw field_error("modulus coefficients must lie in [0, p)");
  if (modulus.back() != 1) throw field_error("modulus must be monic");

  Poly f(modulus.begin(), modulus.end());
  if (m > 1 && !is_irreducible(f, p, m))
    throw field_error("modulus is reducible over F_p");
  if (m == 1 && modulus[0] == 0)
    throw field_error("modulus is reducible over F_p");  // f = x

  Field F;
  F.p_ = p;
  F.m_ = m;
  F.q_ = std::uint32_t(q);
  F.modulus_ = modulus;
  F.build_tables();  // rejects irreducible-but-imprimitive moduli
  return F;
}

Field Field::parse(const std::string& text) {
  std::vector<std::uint32_t> nums;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw field_error("empty component in field string");
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      throw field_error("bad field string component: " + tok);
    }
    if (pos != tok.size()) throw field_error("bad field string component: " + tok);
    nums.push_back(std::uint32_t(v));
  }
  if (nums.size() < 4) throw field_error("field string needs p,m,c0,...,cm");
  const std::uint32_t p = nums[0], m = nums[1];
  if (nums.size() != std::size_t(m) + 3)
    throw field_error("field string has wrong coefficient count");
  return build(p, m, std::vector<std::uint32_t>(nums.begin() + 2, nums.end()));
}

std::string Field::to_string() const {
  std::string s = std::to_string(p_) + "," + std::to_string(m_);
  for (std::uint32_t c : modulus_) s += "," + std::to_string(c);
  return s;
}

}
