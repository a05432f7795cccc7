#include "sqgfront/reparam.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "sqgfront/parallel.hpp"

namespace sqgfront {

namespace {

// Evaluates the antiderivative S(xi) = integral_{-pi}^{xi} sigma of the
// trigonometric interpolant of the speed sigma, given its coefficients.
// S(xi) = mean*(xi+pi) + sum_{k!=0} c_k (e^{ik xi} - e^{-ik pi})/(ik);
// the Nyquist mode integrates as sin(n xi/2)/(n/2) against its cosine form.
class SpeedAntiderivative {
 public:
  explicit SpeedAntiderivative(const ScalarField& sigma)
      : coeffs_(to_spectral(sigma)), mean_(coeffs_.at(0).real()) {}

  double mean() const { return mean_; }

  double value(double xi) const {
    Kahan acc;
    const int nyq = coeffs_.kmin();
    for (int k = nyq + 1; k <= coeffs_.kmax(); ++k) {
      if (k == 0) continue;
      std::complex<double> e(std::cos(k * xi), std::sin(k * xi));
      std::complex<double> epi(std::cos(k * kPi), -std::sin(k * kPi));
      std::complex<double> ik(0.0, k);
      acc.add(((e - epi) / ik * coeffs_.at(k)).real());
    }
    // Nyquist (cosine form): integral of cos(n/2 t) from -pi to xi.
    double half_n = 0.5 * coeffs_.n;
    acc.add(coeffs_.at(nyq).real() *
            (std::sin(half_n * xi) - std::sin(-half_n * kPi)) / half_n);
    acc.add(mean_ * (xi + kPi));
    return acc.result();
  }

  double slope(double xi) const {
    Kahan acc;
    const int nyq = coeffs_.kmin();
    for (int k = nyq + 1; k <= coeffs_.kmax(); ++k) {
      std::complex<double> e(std::cos(k * xi), std::sin(k * xi));
      acc.add((coeffs_.at(k) * e).real());
    }
    acc.add(coeffs_.at(nyq).real() * std::cos(0.5 * coeffs_.n * xi));
    return acc.result();
  }

 private:
  SpectralCoeffs coeffs_;
  double mean_;
};

}  // namespace

double speed_variation(const ClosedCurve& curve) {
  Vec2Field dx = derivative(curve, 1);
  const int n = curve.n();
  Kahan mean;
  std::vector<double> s2(n);
  for (int i = 0; i < n; ++i) {
    s2[i] = dx.c1[i] * dx.c1[i] + dx.c2[i] * dx.c2[i];
    mean.add(s2[i]);
  }
  double A = mean.result() / n;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(s2[i] - A));
  return worst / A;
}

std::pair<ClosedCurve, ReparamMap> enforce_constant_speed(const ClosedCurve& curve) {
  const int n = curve.n();
  Vec2Field dx = derivative(curve, 1);
  ScalarField sigma(curve.grid);
  double min_speed = std::numeric_limits<double>::infinity();
  Kahan mean;
  for (int i = 0; i < n; ++i) {
    sigma.v[i] = std::hypot(dx.c1[i], dx.c2[i]);
    min_speed = std::min(min_speed, sigma.v[i]);
    mean.add(sigma.v[i]);
  }
  double mean_speed = mean.result() / n;
  if (!(min_speed > 1e-9 * mean_speed)) {
    throw SpeedDegenerate("tangent modulus vanishes: min " + std::to_string(min_speed) +
                          " vs mean " + std::to_string(mean_speed));
  }

  SpeedAntiderivative S(sigma);
  const double L = kTwoPi * S.mean();
  const double scale = kTwoPi / L;

  ReparamMap map;
  map.total_length = L;
  map.phi = ScalarField(curve.grid);
  for (int i = 0; i < n; ++i) map.phi.v[i] = -kPi + scale * S.value(curve.grid.node(i));

  // Invert phi per target node: phi(xi) = gamma_i, phi increasing with
  // phi(-pi) = -pi, phi(pi) = pi.
  map.phi_inverse_at_nodes = ScalarField(curve.grid);
  std::vector<double> inv(n);
  std::atomic<bool> failed{false};
  parallel_for(n, [&](int i) {
    double target = curve.grid.node(i);
    double lo = -kPi, hi = kPi;
    double xi = target;  // identity initial guess
    bool done = false;
    for (int it = 0; it < 100; ++it) {
      double f = -kPi + scale * S.value(xi) - target;
      if (std::abs(f) < 1e-13) {
        done = true;
        break;
      }
      if (f > 0) hi = xi; else lo = xi;
      double dphi = scale * S.slope(xi);
      double next = xi - f / dphi;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection safeguard
      xi = next;
    }
    if (!done) failed.store(true);
    inv[i] = xi;
  });
  if (failed.load()) {
    throw SpeedDegenerate("reparametrization inversion exceeded 100 iterations");
  }
  map.phi_inverse_at_nodes.v = inv;

  ClosedCurve out(curve.grid);
  out.time = curve.time;
  auto samples = interp_at(curve, inv);
  for (int i = 0; i < n; ++i) {
    out.x1[i] = samples[i].first;
    out.x2[i] = samples[i].second;
  }
  return {out, map};
}

}  // namespace sqgfront
