#pragma once

#include <numeric>
#include <string>

#include "twoblock/errors.hpp"

namespace twoblock {

struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long num, long long den) {
    const long long g = std::gcd(num, den);
    return Rational{num / g, den / g};
  }

  double real() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// Minimum semidegree that guarantees every two-block path with blocks
// (ell, k-ell), for k/2 <= ell <= k-1:
//   ell <= 2k/3  ->  k - ell/2
//   ell >  2k/3  ->  2k/3
// Exact as a rational; both branches agree at ell == 2k/3.
inline Rational two_block_threshold(int k, int ell) {
  if (k < 2 || 2 * ell < k || ell >= k) {
    throw Error(Errc::SpecOutOfRange,
                "threshold defined for k/2 <= ell <= k-1, got k=" + std::to_string(k) +
                    " ell=" + std::to_string(ell));
  }
  if (3 * ell <= 2 * k) return Rational::make(2LL * k - ell, 2);
  return Rational::make(2LL * k, 3);
}

// delta0 >= threshold, decided in integers: small branch 2*delta0 >= 2k-ell,
// large branch 3*delta0 >= 2k.
inline bool meets_two_block_threshold(int delta0, int k, int ell) {
  if (k < 2 || 2 * ell < k || ell >= k) {
    throw Error(Errc::SpecOutOfRange, "threshold defined for k/2 <= ell <= k-1");
  }
  if (3 * ell <= 2 * k) return 2LL * delta0 >= 2LL * k - ell;
  return 3LL * delta0 >= 2LL * k;
}

}  // namespace twoblock
