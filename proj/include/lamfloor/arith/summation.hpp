#pragma once

#include <cmath>
#include <complex>

namespace lamfloor {

/// Neumaier's improved Kahan summation.
class NeumaierSum {
 public:
  NeumaierSum() = default;
  explicit NeumaierSum(double initial) : sum_(initial) {}

  void add(double x) {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  NeumaierSum& operator+=(double x) {
    add(x);
    return *this;
  }

  /// Folds in a (sum, compensation) pair produced elsewhere.
  void merge(double sum, double compensation) {
    add(sum);
    comp_ += compensation;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Componentwise compensated accumulation of complex terms.
class ComplexNeumaierSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  NeumaierSum re_;
  NeumaierSum im_;
};

}  // namespace lamfloor
