#include "lamfloor/exponent.hpp"

#include <algorithm>
#include <cctype>

namespace lamfloor {

namespace {

const Rational kHalf(1, 2);

}  // namespace

ExponentPair::ExponentPair(Rational kappa, Rational lambda)
    : kappa_(std::move(kappa)), lambda_(std::move(lambda)) {
  if (kappa_ < Rational(0) || kappa_ > kHalf || lambda_ < kHalf || lambda_ > Rational(1)) {
    throw std::invalid_argument("exponent pair " + str() + " violates 0 <= kappa <= 1/2 <= lambda <= 1");
  }
}

ExponentPair ExponentPair::parse(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("exponent pair must look like 'a/b,c/d', got '" + std::string(text) + "'");
  }
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  return ExponentPair(Rational::parse(trim(text.substr(0, comma))), Rational::parse(trim(text.substr(comma + 1))));
}

ExponentPair a_process(const ExponentPair& p) {
  Rational denom = Rational(2) * p.kappa() + Rational(2);
  return ExponentPair(p.kappa() / denom, (p.kappa() + p.lambda() + Rational(1)) / denom);
}

ExponentPair b_process(const ExponentPair& p) {
  return ExponentPair(p.lambda() - kHalf, p.kappa() + kHalf);
}

Rational bordelles_exponent(const ExponentPair& p) {
  const Rational& k = p.kappa();
  const Rational& l = p.lambda();
  if (k > Rational(1, 6)) throw ConditionViolated("kappa <= 1/6");
  if (!(l * l + l + Rational(3) - k * (Rational(5) + Rational(9) * k - l) > Rational(0))) {
    throw ConditionViolated("lambda^2 + lambda + 3 - kappa(5 + 9 kappa - lambda) > 0");
  }
  return Rational(14) * (k + Rational(1)) / (Rational(29) * k - l + Rational(30));
}

BoundExpr::BoundExpr(std::vector<GrowthTerm> terms) {
  if (terms.empty()) throw std::invalid_argument("BoundExpr: needs at least one term");
  for (auto& t : terms) {
    if (std::find(terms_.begin(), terms_.end(), t) == terms_.end()) terms_.push_back(std::move(t));
  }
}

BoundExpr prop41_bound(const ExponentPair& p, const ExponentPair& p_prime) {
  const Rational& k = p.kappa();
  const Rational& l = p.lambda();
  const Rational& k1 = p_prime.kappa();
  const Rational& l1 = p_prime.lambda();

  Rational type2_den = Rational(4) * k + Rational(4);
  Rational type1_den = Rational(3) * k1 + Rational(3);
  Rational type1_d = Rational(-2) * k1 + Rational(2) * l1 + Rational(1);
  return BoundExpr({
      GrowthTerm{Rational(2) * k / type2_den, (Rational(3) + l) / type2_den},
      GrowthTerm{Rational(0), Rational(5, 6)},
      GrowthTerm{Rational(3) * k1 / type1_den, type1_d / type1_den},
      GrowthTerm{k1, (Rational(-5) * k1 + Rational(2) * l1 + Rational(1)) / Rational(3)},
  });
}

Rational exponent_at(const GrowthTerm& term, const Rational& d) { return term.a + term.b * d; }

DominanceCertificate dominance_window(const BoundExpr& expr, const GrowthTerm& leader,
                                      const Rational& d_lo, const Rational& d_hi) {
  if (d_lo > d_hi) throw std::invalid_argument("dominance_window: d_lo > d_hi");
  DominanceCertificate cert;
  cert.d_lo = d_lo;
  cert.d_hi = d_hi;
  cert.holds = true;
  for (const GrowthTerm& t : expr.terms()) {
    for (const Rational* d : {&d_lo, &d_hi}) {
      DominanceCheck c;
      c.term = t;
      c.d = *d;
      c.leader_exponent = exponent_at(leader, *d);
      c.term_exponent = exponent_at(t, *d);
      c.holds = c.leader_exponent >= c.term_exponent;
      cert.holds = cert.holds && c.holds;
      cert.checks.push_back(std::move(c));
    }
  }
  return cert;
}

Rational window_edge(const GrowthTerm& t1, const GrowthTerm& t2) {
  if (t1.b == t2.b) throw std::invalid_argument("window_edge: parallel terms never cross");
  return (t2.a - t1.a) / (t1.b - t2.b);
}

SplitOptimum optimize_split(const GrowthTerm& bound) {
  if (bound.b <= Rational(-1)) throw std::invalid_argument("optimize_split: need b > -1");
  Rational nu = (bound.a + bound.b) / (Rational(1) + bound.b);
  return SplitOptimum{nu, nu};
}

}  // namespace lamfloor
