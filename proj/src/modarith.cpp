#include "curvedisc/modarith.hpp"

#include <mutex>
#include <utility>

namespace curvedisc {

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 invmod(u64 a, u64 m) {
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    std::swap(t, new_t);
    new_t -= q * t;
    std::swap(r, new_r);
    new_r -= q * r;
  }
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 nth_large_prime(std::size_t k) {
  static std::mutex mutex;
  static std::vector<u64> cache;
  std::lock_guard lock(mutex);
  u64 candidate = cache.empty() ? (1ULL << 62) - 1 : cache.back() - 2;
  while (cache.size() <= k) {
    while (!is_prime_u64(candidate)) candidate -= 2;
    cache.push_back(candidate);
    candidate -= 2;
  }
  return cache[k];
}

Montgomery::Montgomery(u64 modulus) : m_(modulus) {
  inv_ = m_;
  for (int i = 0; i < 5; ++i) inv_ *= 2 - m_ * inv_;
  one_ = static_cast<u64>((static_cast<u128>(1) << 64) % m_);
  r2_ = mulmod(one_, one_, m_);
}

namespace {

template <class Mul, class Inv>
u64 eliminate(std::vector<u64>& a, std::size_t n, u64 p, u64 one, Mul mul, Inv inv) {
  u64 det = one;
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      negate = !negate;
    }
    const u64 piv = a[col * n + col];
    det = mul(det, piv);
    const u64 piv_inv = inv(piv);
    for (std::size_t r = col + 1; r < n; ++r) {
      u64 entry = a[r * n + col];
      if (entry == 0) continue;
      u64 factor = mul(entry, piv_inv);
      u64* row = &a[r * n];
      const u64* prow = &a[col * n];
      for (std::size_t j = col + 1; j < n; ++j) {
        if (prow[j] != 0) row[j] = submod(row[j], mul(factor, prow[j]), p);
      }
    }
  }
  return negate ? submod(0, det, p) : det;
}

}  // namespace

u64 det_mod_p(std::vector<u64> entries, std::size_t n, u64 p) {
  if (n == 0) return 1 % p;
  if ((p & 1) && p < (1ULL << 63)) {
    Montgomery mont(p);
    for (auto& e : entries) e = mont.to_mont(e);
    u64 det = eliminate(
        entries, n, p, mont.one(), [&](u64 x, u64 y) { return mont.mul(x, y); },
        [&](u64 x) { return mont.to_mont(invmod(mont.from_mont(x), p)); });
    return mont.from_mont(det);
  }
  return eliminate(
      entries, n, p, 1 % p, [&](u64 x, u64 y) { return mulmod(x, y, p); },
      [&](u64 x) { return invmod(x, p); });
}

}  // namespace curvedisc
