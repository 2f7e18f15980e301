#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lamfloor/arith/rational.hpp"

namespace lamfloor {

/// Exponent pair (κ, λ) inside the box 0 <= κ <= 1/2 <= λ <= 1.
class ExponentPair {
 public:
  /// Throws std::invalid_argument outside the admissibility box.
  ExponentPair(Rational kappa, Rational lambda);

  /// Parses "a/b,c/d".
  static ExponentPair parse(std::string_view text);

  const Rational& kappa() const { return kappa_; }
  const Rational& lambda() const { return lambda_; }
  std::string str() const { return "(" + kappa_.str() + ", " + lambda_.str() + ")"; }

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;

 private:
  Rational kappa_;
  Rational lambda_;
};

/// A(κ, λ) = (κ / (2κ + 2), (κ + λ + 1) / (2κ + 2)).
ExponentPair a_process(const ExponentPair& p);

/// B(κ, λ) = (λ - 1/2, κ + 1/2). Throws std::invalid_argument when the image
/// leaves the admissibility box.
ExponentPair b_process(const ExponentPair& p);

/// A validity predicate on the exponent pair failed.
class ConditionViolated : public std::domain_error {
 public:
  explicit ConditionViolated(std::string predicate)
      : std::domain_error("condition violated: " + predicate), predicate_(std::move(predicate)) {}
  const std::string& predicate() const { return predicate_; }

 private:
  std::string predicate_;
};

/// 14(κ + 1) / (29κ - λ + 30), valid when κ <= 1/6 and
/// λ² + λ + 3 - κ(5 + 9κ - λ) > 0; otherwise throws ConditionViolated.
Rational bordelles_exponent(const ExponentPair& p);

/// Monomial x^a D^b.
struct GrowthTerm {
  Rational a;
  Rational b;

  std::string str() const { return "x^(" + a.str() + ") D^(" + b.str() + ")"; }
  friend bool operator==(const GrowthTerm&, const GrowthTerm&) = default;
};

/// max over a nonempty set of monomials; duplicates are dropped on insertion,
/// first occurrence order is kept.
class BoundExpr {
 public:
  explicit BoundExpr(std::vector<GrowthTerm> terms);

  const std::vector<GrowthTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<GrowthTerm> terms_;
};

/// The four monomials bounding the Λψ-sum over d ~ D in terms of the exponent
/// pairs used for type II (p) and type I (p_prime) sums:
///   (x^{2κ} D^{3+λ})^{1/(4κ+4)}, D^{5/6},
///   (x^{3κ'} D^{-2κ'+2λ'+1})^{1/(3κ'+3)}, x^{κ'} D^{(-5κ'+2λ'+1)/3}.
BoundExpr prop41_bound(const ExponentPair& p, const ExponentPair& p_prime);

/// x-exponent of the monomial when D = x^d: a + b d.
Rational exponent_at(const GrowthTerm& term, const Rational& d);

struct DominanceCheck {
  GrowthTerm term;
  Rational d;
  Rational leader_exponent;
  Rational term_exponent;
  bool holds = false;
};

struct DominanceCertificate {
  Rational d_lo;
  Rational d_hi;
  std::vector<DominanceCheck> checks;  // every term at both endpoints
  bool holds = false;
};

/// Decides whether `leader` dominates every term of `expr` on D in
/// [x^d_lo, x^d_hi]. Exponents are affine in d, so comparing at the two
/// endpoints is a complete procedure. Throws std::invalid_argument if d_lo > d_hi.
DominanceCertificate dominance_window(const BoundExpr& expr, const GrowthTerm& leader,
                                      const Rational& d_lo, const Rational& d_hi);

/// d with a1 + b1 d = a2 + b2 d. Throws std::invalid_argument if b1 = b2.
Rational window_edge(const GrowthTerm& t1, const GrowthTerm& t2);

struct SplitOptimum {
  Rational nu;     // N = x^nu
  Rational theta;  // resulting error exponent
};

/// Balances N against x^a (x/N)^b: nu = (a + b) / (1 + b). Throws
/// std::invalid_argument if b <= -1.
SplitOptimum optimize_split(const GrowthTerm& bound);

}  // namespace lamfloor
