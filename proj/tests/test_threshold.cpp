#include <doctest.h>

#include <optional>

#include "twoblock/errors.hpp"
#include "twoblock/threshold.hpp"

using namespace twoblock;

namespace {

template <typename F>
std::optional<Errc> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("threshold") {

TEST_CASE("rational arithmetic normalizes") {
  CHECK(Rational::make(6, 4) == Rational{3, 2});
  CHECK(Rational::make(8, 2) == Rational{4, 1});
  CHECK(Rational::make(9, 2).str() == "9/2");
  CHECK(Rational::make(8, 2).str() == "4");
  CHECK(Rational::make(3, 2).real() == doctest::Approx(1.5));
}

TEST_CASE("anchor values at the three block shapes") {
  // ell = k/2: three quarters of k.
  CHECK(two_block_threshold(6, 3) == Rational{9, 2});
  CHECK(two_block_threshold(12, 6) == Rational{9, 1});
  CHECK(two_block_threshold(24, 12) == Rational{18, 1});
  // ell = 2k/3: two thirds of k, from either branch.
  CHECK(two_block_threshold(6, 4) == Rational{4, 1});
  CHECK(two_block_threshold(12, 8) == Rational{8, 1});
  CHECK(two_block_threshold(24, 16) == Rational{16, 1});
  // ell = k-1: still two thirds of k.
  CHECK(two_block_threshold(6, 5) == Rational{4, 1});
  CHECK(two_block_threshold(12, 11) == Rational{8, 1});
  CHECK(two_block_threshold(24, 23) == Rational{16, 1});
}

TEST_CASE("branches agree at the crossover") {
  // 3*ell == 2k: (2k - ell)/2 == 2k/3 exactly.
  for (int k : {3, 6, 9, 12, 15, 24}) {
    const int ell = 2 * k / 3;
    if (3 * ell != 2 * k) continue;
    CHECK(two_block_threshold(k, ell) == Rational::make(2LL * k, 3));
  }
}

TEST_CASE("threshold never increases as the short block shrinks") {
  for (int k = 2; k <= 40; ++k) {
    double prev = 1e18;
    for (int ell = (k + 1) / 2; ell <= k - 1; ++ell) {
      const double v = two_block_threshold(k, ell).real();
      CHECK(v <= prev + 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("domain is k/2 <= ell <= k-1") {
  CHECK(thrown_code([] { two_block_threshold(1, 1); }) == Errc::SpecOutOfRange);
  CHECK(thrown_code([] { two_block_threshold(6, 2); }) == Errc::SpecOutOfRange);
  CHECK(thrown_code([] { two_block_threshold(6, 6); }) == Errc::SpecOutOfRange);
  CHECK(thrown_code([] { meets_two_block_threshold(5, 6, 2); }) == Errc::SpecOutOfRange);
  CHECK_FALSE(thrown_code([] { two_block_threshold(5, 3); }).has_value());
}

TEST_CASE("integer test matches the rational ceiling") {
  for (int k = 2; k <= 30; ++k) {
    for (int ell = (k + 1) / 2; ell <= k - 1; ++ell) {
      const Rational thr = two_block_threshold(k, ell);
      for (int d = 0; d <= k + 1; ++d) {
        const bool expect = static_cast<long long>(d) * thr.den >= thr.num;
        CHECK(meets_two_block_threshold(d, k, ell) == expect);
      }
    }
  }
}

TEST_CASE("spot values on the small branch") {
  CHECK(two_block_threshold(5, 3) == Rational{7, 2});
  CHECK_FALSE(meets_two_block_threshold(3, 5, 3));
  CHECK(meets_two_block_threshold(4, 5, 3));
  CHECK(two_block_threshold(5, 4) == Rational{10, 3});
  CHECK_FALSE(meets_two_block_threshold(3, 5, 4));
  CHECK(meets_two_block_threshold(4, 5, 4));
  CHECK(two_block_threshold(4, 2) == Rational{3, 1});
}

}  // TEST_SUITE
