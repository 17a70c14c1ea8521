#pragma once

// Exact integer arithmetic for the spectral layer: totient, Moebius,
// divisor tables, p-adic valuations and the Ramanujan sum c(j, n).
// The Ramanujan sum is evaluated twice, by the closed multiplicative
// formula and by a direct root-of-unity summation; the second route is
// the cross-check oracle for the first.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icgpst {

using i64 = std::int64_t;

// Largest graph order handled in plain signed 64-bit arithmetic.
// Spectral values are bounded by n, so sums of n of them stay far
// below the overflow line as long as n < 2^31.
inline constexpr i64 kMaxOrder = (i64{1} << 31) - 1;

inline i64 gcd(i64 a, i64 b) {
  if (a < 0 || b < 0) throw std::invalid_argument("gcd: arguments must be nonnegative");
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  return std::gcd(a, b);
}

/// Prime factorization by trial division, primes ascending.
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<i64, int>> factors;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// Count of 1 <= k <= n with gcd(k, n) = 1.
inline i64 euler_phi(i64 n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  i64 phi = 1;
  for (const auto& [p, e] : factorize(n)) {
    i64 pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

/// 1 for n = 1, 0 when n has a square factor, (-1)^k for k distinct primes.
inline int mobius(i64 n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be positive");
  const auto factors = factorize(n);
  for (const auto& [p, e] : factors)
    if (e > 1) return 0;
  return factors.size() % 2 == 0 ? 1 : -1;
}

inline i64 divisor_count(i64 n) {
  if (n < 1) throw std::invalid_argument("divisor_count: n must be positive");
  i64 count = 1;
  for (const auto& [p, e] : factorize(n)) count *= e + 1;
  return count;
}

/// All divisors d of n with 1 <= d < n, ascending.
inline std::vector<i64> proper_divisors(i64 n) {
  if (n < 2) throw std::invalid_argument("proper_divisors: n must be at least 2");
  std::vector<i64> low, high;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  low.pop_back();  // drop n itself
  return low;
}

/// p-adic valuation; the valuation of zero is the distinguished
/// infinite value.
struct Valuation {
  std::optional<i64> exponent;  // nullopt encodes +infinity
  bool is_infinite() const { return !exponent.has_value(); }
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

inline Valuation valuation(i64 p, i64 n) {
  if (!is_prime(p))
    throw std::invalid_argument("valuation: " + std::to_string(p) + " is not prime");
  if (n < 0) throw std::invalid_argument("valuation: n must be nonnegative");
  if (n == 0) return Valuation{std::nullopt};
  i64 e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return Valuation{e};
}

/// Exponent of 2 in x; the sign of x is ignored. x must be nonzero.
inline i64 two_adic(i64 x) {
  if (x == 0) throw std::invalid_argument("two_adic: x must be nonzero");
  i64 e = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++e;
  }
  return e;
}

/// Ramanujan sum c(j, n) = mu(t) * phi(n) / phi(t) with t = n / gcd(n, j).
/// j is reduced modulo n first; c(j, 1) = 1 for every j.
inline i64 ramanujan(i64 j, i64 n) {
  if (n < 1) throw std::invalid_argument("ramanujan: n must be positive");
  j %= n;
  if (j < 0) j += n;
  const i64 t = n / std::gcd(n, j);
  const int mu = mobius(t);
  if (mu == 0) return 0;
  return mu * (euler_phi(n) / euler_phi(t));  // phi(t) | phi(n) since t | n
}

/// Same quantity summed directly over the primitive residues:
/// sum over gcd(k, n) = 1 of exp(2*pi*i*j*k / n), rounded to the nearest
/// integer. A residual of 1e-6 or more means the two evaluation routes
/// disagree, which is an internal bug rather than an input error.
inline i64 ramanujan_oracle(i64 j, i64 n) {
  if (n < 1) throw std::invalid_argument("ramanujan_oracle: n must be positive");
  if (n > kMaxOrder)
    throw std::invalid_argument("ramanujan_oracle: n exceeds the supported bound 2^31-1");
  j %= n;
  if (j < 0) j += n;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  std::complex<double> sum{0.0, 0.0};
  for (i64 k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    sum += std::polar(1.0, step * static_cast<double>((j * k) % n));
  }
  const double rounded = std::round(sum.real());
  if (std::abs(sum.real() - rounded) >= 1e-6 || std::abs(sum.imag()) >= 1e-6)
    throw std::logic_error("ramanujan_oracle: residual above 1e-6 at j=" + std::to_string(j) +
                           " n=" + std::to_string(n));
  return static_cast<i64>(rounded);
}

}  // namespace icgpst
