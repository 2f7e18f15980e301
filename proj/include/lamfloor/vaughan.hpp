#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "lamfloor/arith/rational.hpp"

namespace lamfloor {

/// Σ_p c_p log p held exactly as a sparse map p -> c_p. Zero coefficients are
/// never stored, so equality is map equality. Logs of distinct primes are
/// linearly independent over Q, which makes this an exact representation.
template <class Coef>
class PrimeLogVector {
 public:
  using Map = std::map<std::uint64_t, Coef>;

  PrimeLogVector() = default;

  static PrimeLogVector log_of_prime(std::uint64_t p, Coef c = Coef(1)) {
    PrimeLogVector v;
    v.add_term(p, c);
    return v;
  }

  void add_term(std::uint64_t p, const Coef& c) {
    if (c == Coef(0)) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coef(0)) terms_.erase(it);
    }
  }

  /// this += scale * other
  template <class Other, class Scale>
  void add_scaled(const PrimeLogVector<Other>& other, const Scale& scale) {
    if (scale == Scale(0)) return;
    for (const auto& [p, c] : other.terms()) add_term(p, Coef(scale) * Coef(c));
  }

  PrimeLogVector& operator+=(const PrimeLogVector& rhs) {
    for (const auto& [p, c] : rhs.terms_) add_term(p, c);
    return *this;
  }
  PrimeLogVector& operator-=(const PrimeLogVector& rhs) {
    for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
    return *this;
  }
  friend PrimeLogVector operator+(PrimeLogVector a, const PrimeLogVector& b) { return a += b; }
  friend PrimeLogVector operator-(PrimeLogVector a, const PrimeLogVector& b) { return a -= b; }
  friend bool operator==(const PrimeLogVector& a, const PrimeLogVector& b) { return a.terms_ == b.terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }

  Coef coefficient(std::uint64_t p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Coef(0) : it->second;
  }

  /// Real value Σ c_p log p.
  double to_double() const {
    double sum = 0.0;
    for (const auto& [p, c] : terms_) sum += as_double(c) * std::log(static_cast<double>(p));
    return sum;
  }

 private:
  static double as_double(const Coef& c) {
    if constexpr (std::is_arithmetic_v<Coef>) {
      return static_cast<double>(c);
    } else {
      return c.to_double();
    }
  }

  Map terms_;
};

using IntPrimeLogVector = PrimeLogVector<std::int64_t>;
using WeightedPrimeLogVector = PrimeLogVector<Rational>;

/// Coefficients of the three-term Vaughan identity with U = V = floor(D^(1/3)):
/// for n > U,
///   Λ(n) = Σ_{b|n, b<=V} μ(b) log(n/b) - Σ_{bc|n, b<=V, c<=U} μ(b) Λ(c)
///          + Σ_{bc|n, b>V, c>U} μ(b) Λ(c).
struct VaughanCoefficients {
  std::uint64_t D = 0;
  std::uint64_t U = 0;
  std::uint64_t type2_limit = 0;  // m, n in (U, type2_limit] for the last sum

  std::vector<IntPrimeLogVector> alpha1_values;  // index m - 1, m in [1, U]
  std::vector<int> alpha2_values;                // μ(m), m in [1, U]
  std::vector<IntPrimeLogVector> alpha3_values;  // index m - U - 1, m in (U, U^2]
  std::vector<int> alpha5_values;                // μ(m), m in (U, type2_limit]
  std::vector<IntPrimeLogVector> alpha6_values;  // Σ_{c|n, c>U} Λ(c), n in (U, type2_limit]

  /// -β(m), β(m) = Σ_{bc=m, b<=V, c<=U} μ(b) Λ(c).
  const IntPrimeLogVector& alpha1(std::uint64_t m) const { return alpha1_values.at(m - 1); }
  int alpha2(std::uint64_t m) const { return alpha2_values.at(m - 1); }
  const IntPrimeLogVector& alpha3(std::uint64_t m) const { return alpha3_values.at(m - U - 1); }
  int alpha4(std::uint64_t /*n*/) const { return 1; }
  int alpha5(std::uint64_t m) const { return alpha5_values.at(m - U - 1); }
  const IntPrimeLogVector& alpha6(std::uint64_t n) const { return alpha6_values.at(n - U - 1); }

  /// max over stored alpha1/alpha3/alpha6 entries of |value| / log(m + 2).
  double max_coefficient_ratio() const;
};

/// Throws std::invalid_argument for D < 100.
VaughanCoefficients build_coefficients(std::uint64_t D);

/// Index ranges actually touched by each sum.
struct VaughanSupport {
  std::uint64_t s12_max_m = 0;
  std::uint64_t s3_min_m = 0, s3_max_m = 0;
  std::uint64_t s4_min_m = 0, s4_min_n = 0;
  std::uint64_t s4_max_m = 0, s4_max_n = 0;
};

struct VaughanSums {
  WeightedPrimeLogVector s1;  // type I
  WeightedPrimeLogVector s2;  // type I with log n
  WeightedPrimeLogVector s3;  // type II, alpha4 = 1
  WeightedPrimeLogVector s4;  // type II
  VaughanSupport support;

  WeightedPrimeLogVector total() const { return s1 + s2 + s3 + s4; }
};

/// Exact rational-valued test function on (D, 2D].
using ArithmeticFunction = std::function<Rational(std::uint64_t)>;

VaughanSums vaughan_sum(const ArithmeticFunction& g, std::uint64_t D);
VaughanSums vaughan_sum(const ArithmeticFunction& g, const VaughanCoefficients& coeffs);

/// Σ_{D<d<=2D} Λ(d) g(d) by direct enumeration.
WeightedPrimeLogVector mangoldt_weighted_sum(const ArithmeticFunction& g, std::uint64_t D);

/// Seeded rational values num/den, num in [-50, 50], den in [1, 16], for
/// d in (D, 2D] (index d - D - 1).
std::vector<Rational> random_rational_values(std::uint64_t D, std::uint64_t seed);

struct VaughanCheckReport {
  std::uint64_t D = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t failures = 0;
  double max_coefficient_ratio = 0.0;
  bool passed() const { return failures == 0 && max_coefficient_ratio <= 1.0; }
};

/// Runs `trials` random g (trial t uses seed + t) and checks the identity exactly.
VaughanCheckReport vaughan_check(std::uint64_t D, std::uint64_t trials, std::uint64_t seed);

}  // namespace lamfloor
