#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

namespace lefschetz {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

namespace detail {

// Standard binomial for n >= 0, zero outside 0 <= k <= n.
inline BigInt binom_nonneg(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (n - k < k) k = n - k;
  BigInt r = 1;
  for (long j = 1; j <= k; ++j) {
    r *= (n - k + j);
    r /= j;
  }
  return r;
}

}  // namespace detail

/// Binomial coefficient extended to all integer arguments (consistent for negative arguments):
///   n >= 0          : usual convention,
///   n < 0, k >= 0   : (-1)^k * binom(-n+k-1, k),
///   n < 0, k <= n   : (-1)^(n-k) * binom(-k-1, n-k),
///   otherwise 0.
/// In particular binom(-1, -1) == 1.
inline BigInt binom(long n, long k) {
  if (n >= 0) return detail::binom_nonneg(n, k);
  if (k >= 0) {
    BigInt r = detail::binom_nonneg(-n + k - 1, k);
    return (k & 1) ? -r : r;
  }
  if (k <= n) {
    long m = n - k;
    BigInt r = detail::binom_nonneg(-k - 1, m);
    return (m & 1) ? -r : r;
  }
  return 0;
}

namespace detail {

inline BigInt pollard_rho(const BigInt& n) {
  // n odd, composite, > 1.
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  auto next_seed = [&seed] {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };
  for (;;) {
    BigInt c = BigInt(next_seed()) % n;
    BigInt x = BigInt(next_seed()) % n;
    BigInt y = x, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = boost::multiprecision::gcd(boost::multiprecision::abs(x - y), n);
    }
    if (d != n) return d;
  }
}

inline void factorize_into(BigInt n, std::map<BigInt, int>& out) {
  if (n <= 1) return;
  if (boost::multiprecision::miller_rabin_test(n, 32)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_rho(n);
  factorize_into(d, out);
  factorize_into(n / d, out);
}

}  // namespace detail

/// Prime factorization of |n|, n != 0.
inline std::map<BigInt, int> factorize(BigInt n) {
  n = boost::multiprecision::abs(n);
  if (n == 0) throw std::invalid_argument("factorize: zero");
  std::map<BigInt, int> out;
  for (BigInt p : {BigInt(2), BigInt(3), BigInt(5), BigInt(7), BigInt(11), BigInt(13)})
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  detail::factorize_into(n, out);
  return out;
}

/// All positive divisors of |n|, unsorted; throws if there are more than
/// 2^22 of them.
inline std::vector<BigInt> positive_divisors(const BigInt& n) {
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [p, e] : factorize(n)) {
    size_t base = divs.size();
    if (base * (e + 1) > (1u << 22)) throw std::runtime_error("positive_divisors: too many divisors");
    divs.reserve(base * (e + 1));
    BigInt pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

}  // namespace lefschetz
