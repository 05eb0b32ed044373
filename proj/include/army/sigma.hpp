#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace army {

// All weights live in Z[sigma], sigma = (sqrt(5)-1)/2, the positive root of
// sigma^2 + sigma = 1. Components are 128-bit with checked arithmetic: any
// overflow throws instead of wrapping.
using int128 = __int128;

int128 checked_add(int128 x, int128 y);
int128 checked_sub(int128 x, int128 y);
int128 checked_mul(int128 x, int128 y);
std::string int128_to_string(int128 v);

// Value a + b*sigma. The representation is unique since sigma is irrational.
struct SigmaValue {
  int128 a = 0;
  int128 b = 0;

  constexpr SigmaValue() = default;
  constexpr SigmaValue(int128 a_, int128 b_) : a(a_), b(b_) {}

  bool is_zero() const { return a == 0 && b == 0; }

  // Exact sign of the real number a + b*sigma. No floating point involved.
  int sign() const;

  friend SigmaValue operator+(const SigmaValue& x, const SigmaValue& y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
  }
  friend SigmaValue operator-(const SigmaValue& x, const SigmaValue& y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
  }
  friend SigmaValue operator-(const SigmaValue& x) {
    return {checked_sub(0, x.a), checked_sub(0, x.b)};
  }
  // (a+b s)(c+d s) with s^2 = 1 - s.
  friend SigmaValue operator*(const SigmaValue& x, const SigmaValue& y) {
    int128 ac = checked_mul(x.a, y.a);
    int128 bd = checked_mul(x.b, y.b);
    int128 ad = checked_mul(x.a, y.b);
    int128 bc = checked_mul(x.b, y.a);
    return {checked_add(ac, bd), checked_sub(checked_add(ad, bc), bd)};
  }
  SigmaValue& operator+=(const SigmaValue& y) { return *this = *this + y; }
  SigmaValue& operator-=(const SigmaValue& y) { return *this = *this - y; }

  friend SigmaValue operator*(int128 k, const SigmaValue& x) {
    return {checked_mul(k, x.a), checked_mul(k, x.b)};
  }

  friend bool operator==(const SigmaValue& x, const SigmaValue& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend std::strong_ordering operator<=>(const SigmaValue& x, const SigmaValue& y) {
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

inline constexpr SigmaValue sigma_zero() { return {0, 0}; }
inline constexpr SigmaValue sigma_one() { return {1, 0}; }
inline constexpr SigmaValue sigma_unit() { return {0, 1}; }

// Extended Fibonacci numbers: F_1 = F_2 = 1, F_0 = 0, F_{-i} = (-1)^{i+1} F_i.
int128 fibonacci(long i);

// sigma^i = (-1)^i (F_{i-1} - F_i sigma), exact for any integer i.
SigmaValue sigma_pow(long i);

// Double approximation, for display only.
double to_real(const SigmaValue& x);

// "2-3σ" style rendering; display() appends the decimal approximation.
std::string to_string(const SigmaValue& x);
std::string display(const SigmaValue& x);

// Collapses sum_k coeffs[k] * sigma^(base+k) to a+b*sigma by repeatedly
// rewriting sigma^i = sigma^(i-2) - sigma^(i-1), highest term first. This is
// the column tableau: identical to folding the rightmost column into the two
// to its left.
SigmaValue tableau_reduce(const std::vector<long long>& coeffs, long base);

}  // namespace army
