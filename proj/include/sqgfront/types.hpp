#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqgfront {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

/// Thrown when two curve points come closer than the arc-chord guard
/// (1e-12 * perimeter) or when the discrete arc-chord sup exceeds the
/// configured blow-up threshold.
class ArcChordViolation : public std::runtime_error {
 public:
  explicit ArcChordViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when |dx/dgamma| degenerates (non-immersed curve) or the
/// reparametrization inversion fails to converge.
class SpeedDegenerate : public std::runtime_error {
 public:
  explicit SpeedDegenerate(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Uniform periodic grid on [-pi, pi): gamma_i = -pi + 2*pi*i/n.
struct Grid {
  int n = 0;

  Grid() = default;
  explicit Grid(int n_) : n(n_) {
    if (n < 8 || n % 2 != 0) {
      throw ConfigError("grid size must be an even integer >= 8, got " + std::to_string(n));
    }
  }

  double spacing() const { return kTwoPi / n; }
  double node(int i) const { return -kPi + kTwoPi * i / n; }
  /// Wraps an arbitrary signed index into [0, n).
  int wrap(int i) const {
    int r = i % n;
    return r < 0 ? r + n : r;
  }
  bool operator==(const Grid& o) const { return n == o.n; }
};

/// Real scalar samples on a Grid.
struct ScalarField {
  Grid grid;
  std::vector<double> v;

  ScalarField() = default;
  explicit ScalarField(Grid g) : grid(g), v(g.n, 0.0) {}
  ScalarField(Grid g, std::vector<double> values) : grid(g), v(std::move(values)) {
    if (static_cast<int>(v.size()) != grid.n) throw ConfigError("field size mismatch");
  }
};

/// An R^2-valued field on a Grid (velocities, derivatives of curves, ...).
struct Vec2Field {
  Grid grid;
  std::vector<double> c1, c2;

  Vec2Field() = default;
  explicit Vec2Field(Grid g) : grid(g), c1(g.n, 0.0), c2(g.n, 0.0) {}
};

/// Closed patch boundary: n samples of x(gamma) in R^2, no duplicated
/// endpoint; periodicity is index arithmetic mod n.
struct ClosedCurve {
  Grid grid;
  std::vector<double> x1, x2;
  double time = 0.0;

  ClosedCurve() = default;
  explicit ClosedCurve(Grid g) : grid(g), x1(g.n, 0.0), x2(g.n, 0.0) {}

  int n() const { return grid.n; }
};

/// Compensated (Kahan) accumulator; all O(n^2) reductions use it in a
/// fixed index order so results do not depend on the thread count.
struct Kahan {
  double sum = 0.0;
  double carry = 0.0;

  void add(double value) {
    double y = value - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double result() const { return sum; }
};

}  // namespace sqgfront
