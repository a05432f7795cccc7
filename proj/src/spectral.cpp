#include "sqgfront/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <unordered_map>

namespace sqgfront {
namespace {

// One cached FFTW plan pair per grid size. Plans are created with
// FFTW_ESTIMATE so the transform pattern is reproducible; execution is
// single-threaded and deterministic.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  fftw_complex* buf = nullptr;
  int n = 0;
};

class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  // Executes the forward DFT sum_j in[j] e^{-2pi i jm/n} into out.
  void forward(int n, const std::complex<double>* in, std::complex<double>* out) {
    std::lock_guard<std::mutex> lock(mu_);
    PlanPair& p = get(n);
    std::copy(in, in + n, reinterpret_cast<std::complex<double>*>(p.buf));
    fftw_execute(p.fwd);
    std::copy(reinterpret_cast<std::complex<double>*>(p.buf),
              reinterpret_cast<std::complex<double>*>(p.buf) + n, out);
  }

  void backward(int n, const std::complex<double>* in, std::complex<double>* out) {
    std::lock_guard<std::mutex> lock(mu_);
    PlanPair& p = get(n);
    std::copy(in, in + n, reinterpret_cast<std::complex<double>*>(p.buf));
    fftw_execute(p.bwd);
    std::copy(reinterpret_cast<std::complex<double>*>(p.buf),
              reinterpret_cast<std::complex<double>*>(p.buf) + n, out);
  }

 private:
  PlanPair& get(int n) {
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    PlanPair p;
    p.n = n;
    p.buf = fftw_alloc_complex(n);
    p.fwd = fftw_plan_dft_1d(n, p.buf, p.buf, FFTW_FORWARD, FFTW_ESTIMATE);
    p.bwd = fftw_plan_dft_1d(n, p.buf, p.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    return plans_.emplace(n, p).first->second;
  }

  std::mutex mu_;
  std::unordered_map<int, PlanPair> plans_;
};

// gamma_0 = -pi shifts the usual DFT by a (-1)^k phase:
// e^{-ik gamma_j} = (-1)^k e^{-2pi i jk/n}.
SpectralCoeffs forward_real(const std::vector<double>& samples, int n) {
  std::vector<std::complex<double>> in(n), out(n);
  for (int j = 0; j < n; ++j) in[j] = samples[j];
  PlanCache::instance().forward(n, in.data(), out.data());
  SpectralCoeffs s(n);
  for (int k = s.kmin(); k <= s.kmax(); ++k) {
    int m = k < 0 ? k + n : k;
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    s.at(k) = sign * out[m] / static_cast<double>(n);
  }
  return s;
}

std::vector<double> backward_real(const SpectralCoeffs& s, int n) {
  std::vector<std::complex<double>> in(n), out(n);
  for (int k = s.kmin(); k <= s.kmax(); ++k) {
    int m = k < 0 ? k + n : k;
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    in[m] = sign * s.at(k);
  }
  PlanCache::instance().backward(n, in.data(), out.data());
  std::vector<double> samples(n);
  for (int j = 0; j < n; ++j) samples[j] = out[j].real();
  return samples;
}

void apply_multiplier(SpectralCoeffs& s, const std::function<std::complex<double>(int)>& mult) {
  for (int k = s.kmin(); k <= s.kmax(); ++k) s.at(k) *= mult(k);
}

SpectralCoeffs derivative_coeffs(SpectralCoeffs s, int order) {
  if (order < 1 || order > 3) throw ConfigError("derivative order must be 1, 2 or 3");
  const int nyquist = s.kmin();
  apply_multiplier(s, [order, nyquist](int k) -> std::complex<double> {
    if (k == nyquist && order % 2 == 1) return {0.0, 0.0};
    std::complex<double> ik(0.0, static_cast<double>(k));
    std::complex<double> m(1.0, 0.0);
    for (int p = 0; p < order; ++p) m *= ik;
    return m;
  });
  return s;
}

SpectralCoeffs lambda_s_coeffs(SpectralCoeffs s, double exponent) {
  if (exponent < 0.0) throw ConfigError("fractional Laplacian exponent must be >= 0");
  const int nyquist = s.kmin();
  apply_multiplier(s, [exponent, nyquist](int k) -> std::complex<double> {
    if (k == 0 || k == nyquist) return {0.0, 0.0};
    return {std::pow(std::abs(static_cast<double>(k)), exponent), 0.0};
  });
  return s;
}

double norm_from_coeffs(const SpectralCoeffs& s, double r, bool homogeneous, Kahan& acc) {
  for (int k = s.kmin(); k <= s.kmax(); ++k) {
    double w = homogeneous ? std::pow(std::abs(static_cast<double>(k)), 2.0 * r)
                           : std::pow(1.0 + static_cast<double>(k) * k, r);
    if (homogeneous && k == 0) w = 0.0;
    acc.add(w * std::norm(s.at(k)));
  }
  return acc.result();
}

}  // namespace

SpectralCoeffs to_spectral(const ScalarField& f) { return forward_real(f.v, f.grid.n); }

ScalarField to_samples(const SpectralCoeffs& s, Grid grid) {
  if (s.n != grid.n) throw ConfigError("spectral/grid size mismatch");
  return ScalarField(grid, backward_real(s, grid.n));
}

std::pair<SpectralCoeffs, SpectralCoeffs> to_spectral(const Vec2Field& f) {
  return {forward_real(f.c1, f.grid.n), forward_real(f.c2, f.grid.n)};
}

std::pair<SpectralCoeffs, SpectralCoeffs> to_spectral(const ClosedCurve& c) {
  return {forward_real(c.x1, c.grid.n), forward_real(c.x2, c.grid.n)};
}

ScalarField derivative(const ScalarField& f, int order) {
  return ScalarField(f.grid, backward_real(derivative_coeffs(to_spectral(f), order), f.grid.n));
}

Vec2Field derivative(const ClosedCurve& c, int order) {
  Vec2Field out(c.grid);
  out.c1 = backward_real(derivative_coeffs(forward_real(c.x1, c.grid.n), order), c.grid.n);
  out.c2 = backward_real(derivative_coeffs(forward_real(c.x2, c.grid.n), order), c.grid.n);
  return out;
}

Vec2Field derivative(const Vec2Field& f, int order) {
  Vec2Field out(f.grid);
  out.c1 = backward_real(derivative_coeffs(forward_real(f.c1, f.grid.n), order), f.grid.n);
  out.c2 = backward_real(derivative_coeffs(forward_real(f.c2, f.grid.n), order), f.grid.n);
  return out;
}

ScalarField fractional_laplacian(const ScalarField& f, double s) {
  return ScalarField(f.grid, backward_real(lambda_s_coeffs(to_spectral(f), s), f.grid.n));
}

Vec2Field fractional_laplacian(const Vec2Field& f, double s) {
  Vec2Field out(f.grid);
  out.c1 = backward_real(lambda_s_coeffs(forward_real(f.c1, f.grid.n), s), f.grid.n);
  out.c2 = backward_real(lambda_s_coeffs(forward_real(f.c2, f.grid.n), s), f.grid.n);
  return out;
}

namespace {
SpectralCoeffs mollify_coeffs(SpectralCoeffs s, double eps) {
  if (eps < 0.0) throw ConfigError("mollifier width must be >= 0");
  apply_multiplier(s, [eps](int k) -> std::complex<double> {
    double ek = eps * k;
    return {std::exp(-0.5 * ek * ek), 0.0};
  });
  return s;
}
}  // namespace

ScalarField mollify(const ScalarField& f, double eps) {
  return ScalarField(f.grid, backward_real(mollify_coeffs(to_spectral(f), eps), f.grid.n));
}

ClosedCurve mollify(const ClosedCurve& c, double eps) {
  ClosedCurve out(c.grid);
  out.time = c.time;
  out.x1 = backward_real(mollify_coeffs(forward_real(c.x1, c.grid.n), eps), c.grid.n);
  out.x2 = backward_real(mollify_coeffs(forward_real(c.x2, c.grid.n), eps), c.grid.n);
  return out;
}

double sobolev_norm(const ScalarField& f, double r, bool homogeneous) {
  Kahan acc;
  norm_from_coeffs(to_spectral(f), r, homogeneous, acc);
  return std::sqrt(kTwoPi * acc.result());
}

double sobolev_norm(const Vec2Field& f, double r, bool homogeneous) {
  Kahan acc;
  norm_from_coeffs(forward_real(f.c1, f.grid.n), r, homogeneous, acc);
  norm_from_coeffs(forward_real(f.c2, f.grid.n), r, homogeneous, acc);
  return std::sqrt(kTwoPi * acc.result());
}

double sobolev_norm(const ClosedCurve& c, double r, bool homogeneous) {
  Kahan acc;
  norm_from_coeffs(forward_real(c.x1, c.grid.n), r, homogeneous, acc);
  norm_from_coeffs(forward_real(c.x2, c.grid.n), r, homogeneous, acc);
  return std::sqrt(kTwoPi * acc.result());
}

double interp_at(const SpectralCoeffs& s, double gamma) {
  // Nyquist term contributes re(c) * cos(n/2 gamma): the real interpolant
  // that matches the stored samples at the nodes.
  Kahan acc;
  for (int k = s.kmin() + 1; k <= s.kmax(); ++k) {
    std::complex<double> e(std::cos(k * gamma), std::sin(k * gamma));
    acc.add((s.at(k) * e).real());
  }
  acc.add(s.at(s.kmin()).real() * std::cos(0.5 * s.n * gamma));
  return acc.result();
}

std::vector<double> interp_at(const ScalarField& f, const std::vector<double>& gammas) {
  SpectralCoeffs s = to_spectral(f);
  std::vector<double> out(gammas.size());
  for (size_t i = 0; i < gammas.size(); ++i) out[i] = interp_at(s, gammas[i]);
  return out;
}

std::vector<std::pair<double, double>> interp_at(const ClosedCurve& c,
                                                 const std::vector<double>& gammas) {
  SpectralCoeffs s1 = forward_real(c.x1, c.grid.n);
  SpectralCoeffs s2 = forward_real(c.x2, c.grid.n);
  std::vector<std::pair<double, double>> out(gammas.size());
  for (size_t i = 0; i < gammas.size(); ++i) {
    out[i] = {interp_at(s1, gammas[i]), interp_at(s2, gammas[i])};
  }
  return out;
}

double periodic_distance(double a, double b) {
  double d = std::fmod(a - b, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  if (d > kPi) d -= kTwoPi;
  return std::abs(d);
}

double holder_seminorm(const ScalarField& f, double alpha) {
  if (alpha <= 0.0 || alpha >= 1.0) throw ConfigError("Hoelder exponent must lie in (0,1)");
  const int n = f.grid.n;
  const double h = f.grid.spacing();
  // Distance depends on |i-j| only; precompute d^alpha per offset.
  std::vector<double> dpow(n);
  for (int j = 1; j < n; ++j) {
    double d = std::min(j * h, kTwoPi - j * h);
    if (j == n / 2) d = kPi;
    dpow[j] = std::pow(d, alpha);
  }
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= n / 2; ++j) {
      int k = i + j < n ? i + j : i + j - n;
      double q = std::abs(f.v[i] - f.v[k]) / dpow[j];
      if (q > best) best = q;
    }
  }
  return best;
}

double holder_seminorm(const Vec2Field& f, double alpha) {
  if (alpha <= 0.0 || alpha >= 1.0) throw ConfigError("Hoelder exponent must lie in (0,1)");
  const int n = f.grid.n;
  const double h = f.grid.spacing();
  std::vector<double> dpow(n);
  for (int j = 1; j < n; ++j) {
    double d = std::min(j * h, kTwoPi - j * h);
    if (j == n / 2) d = kPi;
    dpow[j] = std::pow(d, alpha);
  }
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= n / 2; ++j) {
      int k = i + j < n ? i + j : i + j - n;
      double d1 = f.c1[i] - f.c1[k];
      double d2 = f.c2[i] - f.c2[k];
      double q = std::hypot(d1, d2) / dpow[j];
      if (q > best) best = q;
    }
  }
  return best;
}

}  // namespace sqgfront
