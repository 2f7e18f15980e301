#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lamfloor/arith/primality.hpp"
#include "lamfloor/arith/rational.hpp"
#include "lamfloor/arith/sawtooth.hpp"
#include "lamfloor/arith/sieve.hpp"
#include "lamfloor/constant.hpp"
#include "lamfloor/rng.hpp"
#include "oracles.hpp"

using namespace lamfloor;

TEST_SUITE("arith") {
  TEST_CASE("rational canonical form and field operations") {
    CHECK(Rational(13, 84) + Rational(55, 84) == Rational(17, 21));
    CHECK(Rational(6, -8).str() == "-3/4");
    CHECK(Rational(0).str() == "0/1");
    CHECK(Rational(4, 2).str() == "2/1");
    CHECK(Rational(9, 19) > Rational(6, 13));
    CHECK((Rational(9, 19) <=> Rational(18, 38)) == std::strong_ordering::equal);
    Rational e = Rational(14) * Rational(97, 84) / (Rational(29 * 13 - 55 + 2520, 84));
    CHECK(e == Rational(97, 203));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/0"), std::invalid_argument);
  }

  TEST_CASE("rational field axioms on random samples") {
    SplitMix64 rng(7);
    auto draw = [&] { return Rational(rng.next_int(-40, 40), rng.next_int(1, 30)); };
    for (int i = 0; i < 500; ++i) {
      Rational a = draw(), b = draw(), c = draw();
      CHECK(a + b == b + a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a - a == Rational(0));
      if (!b.is_zero()) CHECK((a / b) * b == a);
      // canonical form: gcd(num, den) = 1, den > 0
      Rational s = a * b + c;
      CHECK(gcd(s.numerator(), s.denominator()) == 1);
      CHECK(s.denominator() > 0);
    }
  }

  TEST_CASE("Miller-Rabin agrees with trial division") {
    for (std::uint64_t n = 0; n < 200000; ++n) REQUIRE(is_prime_u64(n) == oracle::is_prime_trial(n));
    CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime_u64(18446744073709551557ULL - 2));
    CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to 2,3,5,7
    CHECK_FALSE(is_prime_u64(4294967297ULL));  // 641 * 6700417
    CHECK(is_prime_u64(1000000007ULL));
  }

  TEST_CASE("integer roots are exact floors") {
    SplitMix64 rng(11);
    for (int i = 0; i < 20000; ++i) {
      std::uint64_t n = rng.next();
      for (unsigned k = 2; k <= 6; ++k) {
        std::uint64_t r = iroot(n, k);
        REQUIRE(saturating_pow(r, k) <= n);
        REQUIRE(saturating_pow(r + 1, k) > n);
      }
    }
    CHECK(isqrt(UINT64_MAX) == 4294967295ULL);
    CHECK(icbrt(UINT64_MAX) == 2642245ULL);
    CHECK(isqrt(999999999999999999ULL) == 999999999ULL);
    CHECK(iroot(0, 3) == 0);
  }

  TEST_CASE("single-value von Mangoldt") {
    CHECK(mangoldt_single(1) == 0.0);
    CHECK(mangoldt_single(9) == doctest::Approx(std::log(3.0)));
    CHECK(mangoldt_single(12) == 0.0);
    CHECK(prime_power(9) == PrimePower{3, 2});
    CHECK(prime_power(1ULL << 61) == PrimePower{2, 61});
    CHECK(prime_power(4294967291ULL * 4294967291ULL) == PrimePower{4294967291ULL, 2});
    CHECK_FALSE(prime_power(4294967291ULL * 4294967279ULL).has_value());
    CHECK(prime_power(std::uint64_t{1000003} * 1000003 * 1000003) == PrimePower{1000003, 3});
    CHECK_THROWS_AS(mangoldt_single(0), std::invalid_argument);
    CHECK_THROWS_AS(prime_power(0), std::invalid_argument);
  }

  TEST_CASE("sieve table") {
    MangoldtTable t20(20);
    for (std::uint64_t n = 1; n <= 20; ++n) {
      bool expected = n == 2 || n == 3 || n == 4 || n == 5 || n == 7 || n == 8 || n == 9 || n == 11 || n == 13 ||
                      n == 16 || n == 17 || n == 19;
      CHECK((t20.value(n) != 0.0) == expected);
    }
    MangoldtTable t1(1);
    CHECK(t1.value(1) == 0.0);
    CHECK_THROWS_AS(MangoldtTable(0), std::invalid_argument);

    MangoldtTable big(1000000);
    SplitMix64 rng(3);
    for (int i = 0; i < 10000; ++i) {
      std::uint64_t n = 1 + rng.next() % 1000000;
      REQUIRE(big.value(n) == mangoldt_single(n));
      REQUIRE(big.entry(n) == prime_power(n));
    }
    CHECK(big.primes().size() == 78498);
  }

  TEST_CASE("segment boundaries do not change the sieve") {
    const std::uint64_t limit = 300000;
    MangoldtSegments small(limit, 4099);
    MangoldtTable ref(limit);
    std::uint64_t seen = 0;
    small.for_each([&](const MangoldtSegment& seg) {
      for (std::size_t i = 0; i < seg.lambda.size(); ++i) {
        std::uint64_t n = seg.first + i;
        REQUIRE(seg.lambda[i] == ref.value(n));
        auto pp = ref.entry(n);
        REQUIRE(seg.base[i] == (pp ? pp->prime : 0));
      }
      seen += seg.lambda.size();
    });
    CHECK(seen == limit);
  }

  TEST_CASE("Moebius and smallest factor tables") {
    MoebiusTable mu(1000);
    SmallestFactorTable spf(1000);
    for (std::uint64_t n = 1; n <= 1000; ++n) {
      REQUIRE(mu(n) == oracle::moebius_trial(n));
      std::uint64_t prod = 1;
      spf.factor(n, [&](std::uint64_t p, unsigned k) { prod *= saturating_pow(p, k); });
      REQUIRE(prod == n);
    }
  }

  TEST_CASE("Chebyshev ratio stays in band") {
    ChebyshevReport r = chebyshev_scan(10000000, 1000000);
    CHECK(r.max_ratio <= kChebyshevA);
    CHECK(r.max_band_deviation < 0.01);
    CHECK(r.psi_at_limit == doctest::Approx(1e7).epsilon(1e-3));
    CHECK(r.psi_at_limit == doctest::Approx(chebyshev_psi(10000000)).epsilon(1e-15));
    CHECK(chebyshev_psi(10) == doctest::Approx(std::log(2520.0)).epsilon(1e-15));
    CHECK(chebyshev_psi(1) == 0.0);
  }

  TEST_CASE("sawtooth") {
    CHECK(psi_saw(3.25) == -0.25);
    CHECK(psi_saw(2.0) == -0.5);
    CHECK(psi_saw(0.75) == 0.25);
    CHECK(psi_saw(-0.25) == 0.25);
    for (double t : {0.1, 0.37, 5.9, -3.3}) CHECK(psi_saw(t + 7.0) == doctest::Approx(psi_saw(t)).epsilon(1e-12));
    CHECK(psi_saw_quotient(10, 3) == doctest::Approx(1.0 / 3.0 - 0.5));
    CHECK(psi_saw_quotient(-1, 4) == 0.25);
    CHECK(psi_saw_quotient(1, -4) == 0.25);
    CHECK_THROWS_AS(psi_saw_quotient(1, 0), std::invalid_argument);
  }
}
