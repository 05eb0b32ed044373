#include "army/sigma.hpp"

#include <array>
#include <cmath>

namespace army {

namespace {

constexpr long double kSigmaLD = 0.61803398874989484820458683436563811772L;

using u128 = unsigned __int128;

// Little-endian limb vectors, used only for the exact sign test.
using Limbs = std::array<uint64_t, 7>;

Limbs limbs_from_u128(u128 v) {
  Limbs r{};
  r[0] = static_cast<uint64_t>(v);
  r[1] = static_cast<uint64_t>(v >> 64);
  return r;
}

Limbs limbs_shl1(const Limbs& x) {
  Limbs r{};
  uint64_t carry = 0;
  for (int i = 0; i < 7; ++i) {
    r[i] = (x[i] << 1) | carry;
    carry = x[i] >> 63;
  }
  return r;
}

int limbs_cmp(const Limbs& x, const Limbs& y) {
  for (int i = 6; i >= 0; --i) {
    if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
  }
  return 0;
}

Limbs limbs_add(const Limbs& x, const Limbs& y) {
  Limbs r{};
  u128 carry = 0;
  for (int i = 0; i < 7; ++i) {
    u128 s = (u128)x[i] + y[i] + carry;
    r[i] = static_cast<uint64_t>(s);
    carry = s >> 64;
  }
  return r;
}

Limbs limbs_sub(const Limbs& x, const Limbs& y) {  // requires x >= y
  Limbs r{};
  uint64_t borrow = 0;
  for (int i = 0; i < 7; ++i) {
    u128 xi = x[i];
    u128 sub = (u128)y[i] + borrow;
    if (xi >= sub) {
      r[i] = static_cast<uint64_t>(xi - sub);
      borrow = 0;
    } else {
      r[i] = static_cast<uint64_t>((((u128)1 << 64) + xi) - sub);
      borrow = 1;
    }
  }
  return r;
}

Limbs limbs_mul(const Limbs& x, const Limbs& y) {
  Limbs r{};
  for (int i = 0; i < 7; ++i) {
    if (!x[i]) continue;
    u128 carry = 0;
    for (int j = 0; i + j < 7; ++j) {
      u128 cur = (u128)x[i] * y[j] + r[i + j] + carry;
      r[i + j] = static_cast<uint64_t>(cur);
      carry = cur >> 64;
    }
  }
  return r;
}

Limbs limbs_mul_small(const Limbs& x, uint64_t k) {
  Limbs r{};
  u128 carry = 0;
  for (int i = 0; i < 7; ++i) {
    u128 cur = (u128)x[i] * k + carry;
    r[i] = static_cast<uint64_t>(cur);
    carry = cur >> 64;
  }
  return r;
}

u128 abs_u128(int128 v) {
  return v < 0 ? (u128)0 - (u128)v : (u128)v;
}

// Sign of u + v*sqrt(5) where u is given as sign/magnitude with magnitude
// possibly up to 2^129 (i.e. 2a - b for 128-bit a, b).
int sign_u_plus_v_sqrt5(int su, const Limbs& mu, int128 v) {
  int sv = (v > 0) - (v < 0);
  bool u_zero = true;
  for (auto w : mu)
    if (w) u_zero = false;
  if (u_zero) su = 0;
  if (su == 0) return sv;
  if (sv == 0) return su;
  if (su == sv) return su;
  // opposite signs: compare u^2 vs 5 v^2
  Limbs u2 = limbs_mul(mu, mu);
  Limbs mv = limbs_from_u128(abs_u128(v));
  Limbs v2 = limbs_mul(mv, mv);
  Limbs v25 = limbs_mul_small(v2, 5);
  int c = limbs_cmp(u2, v25);
  if (c == 0) return 0;  // cannot happen: 5 is not a perfect square
  return (c > 0) ? su : sv;
}

}  // namespace

int128 checked_add(int128 x, int128 y) {
  int128 r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("sigma value overflow (add)");
  return r;
}

int128 checked_sub(int128 x, int128 y) {
  int128 r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("sigma value overflow (sub)");
  return r;
}

int128 checked_mul(int128 x, int128 y) {
  int128 r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("sigma value overflow (mul)");
  return r;
}

std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 m = abs_u128(v);
  std::string s;
  while (m) {
    s.push_back(static_cast<char>('0' + (int)(m % 10)));
    m /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

int SigmaValue::sign() const {
  // a + b*sigma = ((2a - b) + b*sqrt(5)) / 2
  // 2a - b as sign/magnitude, magnitude in limbs (may exceed 128 bits).
  Limbs m2a = limbs_shl1(limbs_from_u128(abs_u128(a)));
  Limbs mb = limbs_from_u128(abs_u128(b));
  int s2a = (a > 0) - (a < 0);
  int sb = (b > 0) - (b < 0);
  int su;
  Limbs mu;
  if (s2a == 0) {
    su = -sb;
    mu = mb;
  } else if (sb == 0 || s2a == -sb) {
    su = s2a;
    mu = limbs_add(m2a, mb);
  } else {  // same sign: |2a| - |b|
    int c = limbs_cmp(m2a, mb);
    if (c >= 0) {
      su = s2a;
      mu = limbs_sub(m2a, mb);
    } else {
      su = -s2a;
      mu = limbs_sub(mb, m2a);
    }
    if (c == 0) su = 0;
  }
  return sign_u_plus_v_sqrt5(su, mu, b);
}

int128 fibonacci(long i) {
  if (i < 0) {
    int128 f = fibonacci(-i);
    return ((-i) % 2 == 0) ? -f : f;
  }
  if (i > 183) throw std::overflow_error("fibonacci overflow beyond F_183");
  int128 prev = 0, cur = 1;  // F_0, F_1
  for (long k = 0; k < i; ++k) {
    int128 next = checked_add(prev, cur);
    prev = cur;
    cur = next;
  }
  return prev;
}

SigmaValue sigma_pow(long i) {
  int128 fm1 = fibonacci(i - 1);
  int128 f = fibonacci(i);
  bool odd = ((i % 2) + 2) % 2 == 1;
  return odd ? SigmaValue{-fm1, f} : SigmaValue{fm1, -f};
}

double to_real(const SigmaValue& x) {
  return static_cast<double>(static_cast<long double>(x.a) +
                             static_cast<long double>(x.b) * kSigmaLD);
}

std::string to_string(const SigmaValue& x) {
  if (x.a == 0 && x.b == 0) return "0";
  std::string s;
  if (x.a != 0) s += int128_to_string(x.a);
  if (x.b != 0) {
    if (x.b > 0 && !s.empty()) s += "+";
    if (x.b == -1)
      s += "-";
    else if (x.b != 1)
      s += int128_to_string(x.b);
    s += "\xCF\x83";  // UTF-8 sigma
  }
  return s;
}

std::string display(const SigmaValue& x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, " (\xE2\x89\x88%.4g)", to_real(x));
  return to_string(x) + buf;
}

SigmaValue tableau_reduce(const std::vector<long long>& coeffs, long base) {
  std::vector<int128> c(coeffs.begin(), coeffs.end());
  for (size_t k = c.size(); k-- > 2;) {
    c[k - 2] = checked_add(c[k - 2], c[k]);
    c[k - 1] = checked_sub(c[k - 1], c[k]);
    c[k] = 0;
  }
  SigmaValue r = sigma_zero();
  if (!c.empty()) r += c[0] * sigma_pow(base);
  if (c.size() > 1) r += c[1] * sigma_pow(base + 1);
  return r;
}

}  // namespace army
