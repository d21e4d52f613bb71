#pragma once

// GF(p^m) arithmetic on canonical element indices.
//
// An element sum_i c_i alpha^i (coordinates c_i in F_p over the power basis of
// the generator alpha) is identified with the integer index sum_i c_i p^i.
// Index 0 is the zero element, index 1 is the one element, and prime-subfield
// elements coincide with their indices. Multiplication runs on log/exp tables
// built once at construction; tables are immutable afterwards and safe to
// share across threads by const reference.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisec {

using Elem = std::uint32_t;

// invalid construction input or operation precondition
struct field_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// an enumeration exceeded its configured size budget
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a mathematical identity the library relies on failed; indicates a bug,
// never bad user input
struct internal_check_error : std::logic_error {
  using std::logic_error::logic_error;
};

class Field {
 public:
  static constexpr std::uint64_t kMaxQ = std::uint64_t{1} << 24;

  // Default modulus policy: for m == 1, x - g with g the smallest primitive
  // root mod p; otherwise the Conway polynomial when (p, m) is in the embedded
  // table (p in {2,3,5,7,11,13,17,19}, p^m <= 2^24), else the lexicographically
  // smallest primitive polynomial, comparing descending-degree coefficient
  // tuples (c_{m-1}, ..., c_0).
  static Field build(std::uint32_t p, std::uint32_t m);

  // Supplied modulus c0..cm (constant coefficient first, monic). Rejects a
  // reducible modulus and an irreducible-but-imprimitive one with distinct
  // diagnostics; x mod f must generate the multiplicative group.
  static Field build(std::uint32_t p, std::uint32_t m,
                     const std::vector<std::uint32_t>& modulus);

  // "p,m,c0,c1,...,cm"
  static Field parse(const std::string& text);
  std::string to_string() const;

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem alpha() const { return alpha_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // element of the prime subfield; requires c < p
  Elem scalar(std::uint32_t c) const;
  bool valid(Elem a) const { return a < q_; }
  void check(Elem a) const;

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const {
    if (p_ == 2 || a == 0) return a;
    std::uint32_t s = log_[a] + half_;
    if (s >= q1_) s -= q1_;
    return exp_[s];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q1_) s -= q1_;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  // exponent reduced mod q-1 for nonzero base; pow(0, e) is 0 for e > 0 and
  // 1 for e == 0; negative exponents of zero are rejected
  Elem pow(Elem a, std::int64_t e) const;

  // discrete log base alpha; rejects 0
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t e) const { return exp_[e % q1_]; }

  // absolute trace; the result lies in the prime subfield, returned in [0, p)
  std::uint32_t trace(Elem a) const;

  // index i in [0, N) of the coset alpha^i <alpha^N> containing x;
  // requires x != 0 and N | q-1
  std::uint32_t cyclo_class(Elem x, std::uint32_t N) const;
  // smallest element index in that coset
  Elem least_in_class(std::uint32_t i, std::uint32_t N) const;
  bool is_square(Elem x) const;  // x != 0, q odd: member of C_0^(2,q)

  // order-2 cyclotomic number (i,j) = |(C_i + 1) ∩ C_j|, q odd. Counted by
  // enumeration and cross-checked against the closed form; the two must agree.
  std::uint64_t cyclotomic_number(std::uint32_t i, std::uint32_t j) const;

 private:
  Field() = default;
  Elem add_digits(Elem a, Elem b) const;
  void build_tables();

  std::uint32_t p_ = 0, m_ = 0, q_ = 0;
  std::uint32_t q1_ = 0;    // q - 1
  std::uint32_t half_ = 0;  // log of -1 for odd q
  Elem alpha_ = 0;
  std::vector<std::uint32_t> modulus_;  // c0..cm
  std::vector<Elem> exp_;               // alpha^i, size q-1
  std::vector<std::uint32_t> log_;      // size q, log_[0] is a sentinel
  std::vector<Elem> add_table_;         // q*q for odd p with q <= 2048
};

}
