#pragma once

#include <cstdint>
#include <vector>

namespace curvedisc {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 powmod(u64 base, u64 exp, u64 m);

// Inverse of a modulo m; a must be a unit.
u64 invmod(u64 a, u64 m);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(u64 n);

// The k-th prime below 2^62, counting downwards; cached.
u64 nth_large_prime(std::size_t k);

// Montgomery arithmetic for an odd modulus below 2^63.
class Montgomery {
 public:
  explicit Montgomery(u64 modulus);

  u64 modulus() const { return m_; }
  u64 to_mont(u64 a) const { return reduce(static_cast<u128>(a % m_) * r2_); }
  u64 from_mont(u64 a) const { return reduce(a); }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const { return addmod(a, b, m_); }
  u64 sub(u64 a, u64 b) const { return submod(a, b, m_); }
  u64 one() const { return one_; }

 private:
  u64 reduce(u128 t) const {
    u64 q = static_cast<u64>(t) * inv_;
    u64 h = static_cast<u64>((static_cast<u128>(q) * m_) >> 64);
    u64 hi = static_cast<u64>(t >> 64);
    return hi >= h ? hi - h : hi + m_ - h;
  }

  u64 m_;
  u64 inv_;  // m * inv_ == 1 mod 2^64
  u64 r2_;   // 2^128 mod m
  u64 one_;  // 2^64 mod m
};

// Determinant of a dense square matrix (row-major, entries in [0,p)) over Z/p.
u64 det_mod_p(std::vector<u64> entries, std::size_t n, u64 p);

}  // namespace curvedisc
