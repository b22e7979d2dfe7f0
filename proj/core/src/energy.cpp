#include "penergy/energy.hpp"

#include <cmath>

#include "penergy/error.hpp"

namespace penergy {
namespace {

void require_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InvalidArgument("p must be a finite real >= 1");
}

// Integer exponents go through repeated multiplication so that values such
// as E_4 of integer spectra stay exact where the spectrum is.
double int_pow(double base, long long e) {
  double result = 1.0;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace

double abs_pow(double x, double p) {
  const double a = std::abs(x);
  if (a == 0.0) return 0.0;
  if (p == std::floor(p) && p <= 64.0) return int_pow(a, static_cast<long long>(p));
  return std::exp(p * std::log(a));
}

EnergyReport p_energy(const Spectrum& s, double p, double tol) {
  require_p(p);
  if (tol < 0.0) throw InvalidArgument("tolerance must be non-negative");
  const double t = s.threshold(tol);
  EnergyReport r;
  r.p = p;
  for (double x : s.values) {
    if (x > t) {
      r.e_pos += abs_pow(x, p);
      ++r.inertia.n_pos;
    } else if (x < -t) {
      r.e_neg += abs_pow(x, p);
      ++r.inertia.n_neg;
    } else {
      ++r.inertia.n_zero;
    }
  }
  r.e_total = r.e_pos + r.e_neg;
  return r;
}

EnergyReport p_energy_with_inertia(const Spectrum& s, double p, const Inertia& known) {
  require_p(p);
  if (known.order() != s.size()) throw InvalidArgument("inertia does not match spectrum size");
  EnergyReport r;
  r.p = p;
  r.inertia = known;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < known.n_pos; ++i) r.e_pos += abs_pow(s.values[i], p);
  for (std::size_t i = n - known.n_neg; i < n; ++i) r.e_neg += abs_pow(s.values[i], p);
  r.e_total = r.e_pos + r.e_neg;
  return r;
}

double schatten_norm(const Spectrum& s, double p) {
  require_p(p);
  double sum = 0.0;
  for (double x : s.values) sum += abs_pow(x, p);
  return std::pow(sum, 1.0 / p);
}

double vector_pnorm(std::span<const double> x, double p) {
  require_p(p);
  double sum = 0.0;
  for (double v : x) sum += abs_pow(v, p);
  return std::pow(sum, 1.0 / p);
}

PNormSandwich pnorm_sandwich(std::span<const double> x, double p, double q) {
  if (q < 1.0 || q > p) throw InvalidArgument("pnorm_sandwich requires 1 <= q <= p");
  PNormSandwich out;
  out.lower = vector_pnorm(x, p);
  out.middle = vector_pnorm(x, q);
  const double n = static_cast<double>(x.size());
  out.upper = x.empty() ? 0.0 : std::pow(n, 1.0 / q - 1.0 / p) * out.lower;
  constexpr double slack = 1e-12;
  out.holds = out.lower <= out.middle * (1.0 + slack) && out.middle <= out.upper * (1.0 + slack);
  return out;
}

ScalingBounds scaling_bounds(const EnergyReport& report_q, double p) {
  const double q = report_q.p;
  require_p(q);
  if (p < q) throw InvalidArgument("scaling_bounds requires p >= q");
  const double ratio = p / q;
  auto side = [&](double energy, std::size_t count, double& lower, double& upper) {
    if (count == 0) {
      lower = upper = 0.0;
      return;
    }
    upper = std::pow(energy, ratio);
    lower = upper / std::pow(static_cast<double>(count), ratio - 1.0);
  };
  ScalingBounds b;
  side(report_q.e_pos, report_q.inertia.n_pos, b.lower_pos, b.upper_pos);
  side(report_q.e_neg, report_q.inertia.n_neg, b.lower_neg, b.upper_neg);
  return b;
}

UpperBounds energy_upper_bounds(int n, double p) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (!(p >= 2.0)) throw InvalidArgument("energy upper bounds hold for p >= 2");
  return UpperBounds{abs_pow(static_cast<double>(n - 1), p),
                     abs_pow(static_cast<double>(n) / 2.0, p)};
}

}  // namespace penergy
