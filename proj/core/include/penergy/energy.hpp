#pragma once

#include <span>

#include "penergy/spectra.hpp"

namespace penergy {

// Positive, negative and total p-energy of one spectrum. e_total is the sum
// of the two sides as computed.
struct EnergyReport {
  double p = 1.0;
  double e_pos = 0.0;
  double e_neg = 0.0;
  double e_total = 0.0;
  Inertia inertia;
};

// |x|^p with exact handling of x = 0; valid for any real p >= 1.
double abs_pow(double x, double p);

// Sums lambda^p over eigenvalues classified positive and |lambda|^p over
// those classified negative (classification as in inertia()). Eigenvalues
// classified zero contribute to neither side.
EnergyReport p_energy(const Spectrum& s, double p, double tol);
inline EnergyReport p_energy(const Spectrum& s, double p) {
  return p_energy(s, p, default_tolerance(s.size()));
}

// Same sums with the sign split dictated by a known inertia: the n_pos
// largest values are positive, the n_neg smallest negative.
EnergyReport p_energy_with_inertia(const Spectrum& s, double p, const Inertia& known);

// (sum |lambda|^p)^(1/p).
double schatten_norm(const Spectrum& s, double p);

struct PNormSandwich {
  double lower = 0.0;   // ||x||_p
  double middle = 0.0;  // ||x||_q
  double upper = 0.0;   // n^(1/q - 1/p) ||x||_p
  bool holds = false;
};

double vector_pnorm(std::span<const double> x, double p);

// Checks ||x||_p <= ||x||_q <= n^(1/q-1/p) ||x||_p for 1 <= q <= p, with
// 1e-12 relative slack.
PNormSandwich pnorm_sandwich(std::span<const double> x, double p, double q);

struct ScalingBounds {
  double lower_pos = 0.0;
  double upper_pos = 0.0;
  double lower_neg = 0.0;
  double upper_neg = 0.0;
};

// Bounds on E_p^+ and E_p^- from a report at exponent q = report_q.p <= p:
//   E_q^p/q / k^(p/q - 1) <= E_p <= E_q^p/q, k the number of eigenvalues on
// that side. A side with no eigenvalues yields (0, 0).
ScalingBounds scaling_bounds(const EnergyReport& report_q, double p);

struct UpperBounds {
  double pos = 0.0;  // (n-1)^p
  double neg = 0.0;  // (n/2)^p
};
UpperBounds energy_upper_bounds(int n, double p);

}  // namespace penergy
