#pragma once

#include <cstdint>
#include <span>

namespace lamfloor {

/// Truncation height of the trigonometric approximation; H >= 1.
struct VaalerParams {
  std::uint32_t H = 1;
};

/// Φ(t) = π t (1 - |t|) cot(π t) + |t| for |t| < 1, with Φ(0) = 1.
/// Throws std::invalid_argument for |t| >= 1.
double phi_weight(double t);

/// ψ_H(x) = -Σ_{h=1..H} Φ(h/(H+1)) sin(2π h x) / (π h).
double psi_vaaler(double x, VaalerParams params);

/// ψ_H over a batch of points via the SIMD sine-series kernel.
void psi_vaaler_batch(std::span<const double> xs, VaalerParams params, std::span<double> out);

/// Majorant of |ψ(x) - ψ_H(x)|: F_H(x) / (2H + 2) with the Fejér kernel
/// F_H(x) = (1/(H+1)) (sin((H+1)πx) / sin(πx))^2. Falls back to the direct
/// sum when |sin(πx)| < 1e-9.
double fejer_bound(double x, VaalerParams params);

/// (1/(2H+2)) Σ_{|h|<=H} (1 - |h|/(H+1)) cos(2π h x), summed term by term.
double fejer_bound_direct(double x, VaalerParams params);

struct VaalerCheckReport {
  std::uint32_t H = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double max_remainder = 0.0;  // max |ψ(x) - ψ_H(x)|
  double max_slack = 0.0;      // max (bound - |R_H|)
  double min_slack = 0.0;      // min (bound - |R_H|); negative beyond tolerance = violation
  std::uint64_t violations = 0;
  bool passed() const { return violations == 0; }
};

/// Tolerance added to the bound in the inequality check.
inline constexpr double kVaalerTolerance = 1e-10;

/// Draws `samples` seeded points uniformly in (0, 1) (exact integers are
/// never produced) and checks |ψ - ψ_H| <= fejer_bound + 1e-10 at each.
VaalerCheckReport vaaler_check(VaalerParams params, std::uint64_t samples, std::uint64_t seed);

}  // namespace lamfloor
