#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lamfloor/constant.hpp"
#include "oracles.hpp"

using namespace lamfloor;

TEST_SUITE("constant") {
  TEST_CASE("small depths against direct summation") {
    const double l2 = std::log(2.0), l3 = std::log(3.0), l5 = std::log(5.0), l7 = std::log(7.0);
    double depth10 = l2 * (1.0 / 6 + 1.0 / 20 + 1.0 / 72) + l3 * (1.0 / 12 + 1.0 / 90) + l5 / 30 + l7 / 56;
    Enclosure e10 = constant_enclosure(10);
    CHECK(e10.lo <= depth10);
    CHECK(e10.lo == doctest::Approx(depth10).epsilon(1e-14));
    CHECK(e10.lo == doctest::Approx(0.3519630865).epsilon(1e-10));
    Enclosure e2 = constant_enclosure(2);
    CHECK(e2.lo == doctest::Approx(l2 / 6).epsilon(1e-14));
    CHECK(e2.hi - e2.lo >= tail_bound(2));
    CHECK_THROWS_AS(constant_enclosure(1), std::invalid_argument);
    CHECK_THROWS_AS(tail_bound(1), std::invalid_argument);
  }

  TEST_CASE("tail bound formula and validity") {
    CHECK(tail_bound(1000000000) <= 2.07766e-9);
    CHECK(tail_bound(1000000000) == doctest::Approx(2 * kChebyshevA / 1e9));
    // Actual tail from 10^4 to 10^7 plus the bound beyond 10^7.
    double tail = series_segment(10001, 10000000) + tail_bound(10000000);
    CHECK(tail <= tail_bound(10000));
    long double naive = 0;
    for (std::uint64_t d = 10001; d <= 12000; ++d) {
      naive += oracle::mangoldt_trial(d) / (static_cast<long double>(d) * (d + 1));
    }
    CHECK(series_segment(10001, 12000) == doctest::Approx(static_cast<double>(naive)).epsilon(1e-13));
  }

  TEST_CASE("nested enclosures from one pass") {
    std::vector<std::uint64_t> depths{1000, 100000, 1000000, 10000000};
    auto many = constant_enclosures(depths);
    REQUIRE(many.size() == depths.size());
    for (std::size_t i = 0; i < depths.size(); ++i) {
      Enclosure single = constant_enclosure(depths[i]);
      CHECK(many[i].lo == doctest::Approx(single.lo).epsilon(1e-15));
      CHECK(many[i].depth == depths[i]);
      if (i > 0) {
        CHECK(many[i].lo > many[i - 1].lo);
        CHECK(many[i].overlaps(many[i - 1]));
        CHECK(many[i].width() < many[i - 1].width());
      }
    }
  }
}
