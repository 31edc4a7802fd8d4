#include "vpt/weak_field.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vpt {
namespace weak_field {

namespace {

constexpr int kMaxOrder = 8;

// Truncated Taylor series in t = B^2 up to order kMaxOrder.
struct Jet {
  std::array<double, kMaxOrder + 1> c{};

  static Jet constant(double x) {
    Jet j;
    j.c[0] = x;
    return j;
  }
  static Jet variable() {
    Jet j;
    j.c[1] = 1.0;
    return j;
  }
};

Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  for (int i = 0; i <= kMaxOrder; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}
Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  for (int i = 0; i <= kMaxOrder; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}
Jet operator*(const Jet& a, double s) {
  Jet r;
  for (int i = 0; i <= kMaxOrder; ++i) r.c[i] = a.c[i] * s;
  return r;
}
Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (int i = 0; i <= kMaxOrder; ++i)
    for (int j = 0; j + i <= kMaxOrder; ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}
Jet reciprocal(const Jet& a) {
  Jet r;
  r.c[0] = 1.0 / a.c[0];
  for (int k = 1; k <= kMaxOrder; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += a.c[j] * r.c[k - j];
    r.c[k] = -s / a.c[0];
  }
  return r;
}
Jet sqrt(const Jet& a) {
  Jet r;
  r.c[0] = std::sqrt(a.c[0]);
  for (int k = 1; k <= kMaxOrder; ++k) {
    double s = 0.0;
    for (int j = 1; j < k; ++j) s += r.c[j] * r.c[k - j];
    r.c[k] = (a.c[k] - s) / (2.0 * r.c[0]);
  }
  return r;
}
// sum_k coeffs[k] * a^k for a with zero constant term.
Jet poly(const std::array<double, kMaxOrder + 4>& coeffs, const Jet& a) {
  Jet r, pw = Jet::constant(1.0);
  for (int k = 0; k < kMaxOrder + 4; ++k) {
    r = r + pw * coeffs[k];
    pw = pw * a;
  }
  return r;
}

// h(eta)   = -2 sum_k (1-eta)^k / (2k+1)
// g1(eta)  = (1 + h/2)/(1-eta) = -sum_k (1-eta)^k / (2k+3)
std::array<double, kMaxOrder + 4> h_series() {
  std::array<double, kMaxOrder + 4> a{};
  for (int k = 0; k < kMaxOrder + 4; ++k) a[k] = -2.0 / (2 * k + 1);
  return a;
}
std::array<double, kMaxOrder + 4> g1_series() {
  std::array<double, kMaxOrder + 4> a{};
  for (int k = 0; k < kMaxOrder + 4; ++k) a[k] = -1.0 / (2 * k + 3);
  return a;
}

// Stationarity conditions as functions of (eta, Omega, t = B^2):
//   C1 = Omega/8 + sqrt(Omega/(2 pi eta)) g1(eta)
//   C2 = 1/4 + eta/8 - t/(4 Omega^2) + (1/2) sqrt(eta/(2 pi Omega)) h(eta)
void conditions(const Jet& eta, const Jet& om, const Jet& t, Jet* c1, Jet* c2) {
  static const auto hs = h_series();
  static const auto g1s = g1_series();
  const Jet s2 = Jet::constant(1.0) - eta;
  const Jet h = poly(hs, s2);
  const Jet g1 = poly(g1s, s2);
  const double twopi = 2.0 * M_PI;
  *c1 = om * 0.125 + sqrt(om * reciprocal(eta * twopi)) * g1;
  *c2 = Jet::constant(0.25) + eta * 0.125 - t * reciprocal(om * om * 4.0) +
        (sqrt(eta * reciprocal(om * twopi)) * h) * 0.5;
}

// Ground-state energy E = (Omega/4)(1 + eta/2) + t/(4 Omega) + sqrt(eta Omega/(2 pi)) h(eta)
Jet energy(const Jet& eta, const Jet& om, const Jet& t) {
  static const auto hs = h_series();
  const Jet s2 = Jet::constant(1.0) - eta;
  const Jet h = poly(hs, s2);
  return (om * (Jet::constant(1.0) + eta * 0.5)) * 0.25 + t * reciprocal(om * 4.0) +
         sqrt((eta * om) * (1.0 / (2.0 * M_PI))) * h;
}

// Scalar versions (series-evaluated so that eta = 1 is regular).
double h_scalar(double eta) {
  double s = 0.0, pw = 1.0;
  const double d = 1.0 - eta;
  for (int k = 0; k < kMaxOrder + 4; ++k) {
    s += -2.0 / (2 * k + 1) * pw;
    pw *= d;
  }
  return s;
}
double g1_scalar(double eta) {
  double s = 0.0, pw = 1.0;
  const double d = 1.0 - eta;
  for (int k = 0; k < kMaxOrder + 4; ++k) {
    s += -1.0 / (2 * k + 3) * pw;
    pw *= d;
  }
  return s;
}
double dh_scalar(double eta) {
  double s = 0.0, pw = 1.0;
  const double d = 1.0 - eta;
  for (int k = 1; k < kMaxOrder + 4; ++k) {
    s += 2.0 * k / (2 * k + 1) * pw;  // d/deta of -2 d^k/(2k+1)
    pw *= d;
  }
  return s;
}
double dg1_scalar(double eta) {
  double s = 0.0, pw = 1.0;
  const double d = 1.0 - eta;
  for (int k = 1; k < kMaxOrder + 4; ++k) {
    s += static_cast<double>(k) / (2 * k + 3) * pw;
    pw *= d;
  }
  return s;
}

}  // namespace

double h_function(double eta) {
  if (!(eta > 0.0) || eta > 1.0)
    throw std::invalid_argument("h_function: eta must be in (0, 1]");
  const double d = 1.0 - eta;
  if (d < 1e-4) return h_scalar(eta);
  const double s = std::sqrt(d);
  return std::log((1.0 - s) / (1.0 + s)) / s;
}

double weak_field_energy(double b_field, double eta, double omega) {
  if (!(eta > 0.0) || eta > 1.0 || !(omega > 0.0))
    throw std::invalid_argument("weak_field_energy: invalid parameters");
  return 0.5 * b_field - 0.25 * omega * (1.0 + 0.5 * eta) -
         b_field * b_field / (4.0 * omega) -
         std::sqrt(eta * omega / (2.0 * M_PI)) * h_function(eta);
}

std::vector<SeriesCoefficients> solve_series(int n_max) {
  if (n_max < 0 || n_max > kMaxOrder - 1)
    throw std::invalid_argument("solve_series: order out of supported range");

  // Order 0: Newton on the closed system from a nearby start.
  double eta0 = 0.95, om0 = 1.1;
  for (int it = 0; it < 100; ++it) {
    const double twopi = 2.0 * M_PI;
    const double c1 = om0 / 8.0 + std::sqrt(om0 / (twopi * eta0)) * g1_scalar(eta0);
    const double c2 = 0.25 + eta0 / 8.0 +
                      0.5 * std::sqrt(eta0 / (twopi * om0)) * h_scalar(eta0);
    const double j11 = std::sqrt(om0 / twopi) *
                       (-0.5 * std::pow(eta0, -1.5) * g1_scalar(eta0) +
                        std::pow(eta0, -0.5) * dg1_scalar(eta0));
    const double j12 = 0.125 + g1_scalar(eta0) / (2.0 * std::sqrt(twopi * eta0 * om0));
    const double j21 = 0.125 + 0.5 / std::sqrt(twopi * om0) *
                                   (0.5 * h_scalar(eta0) / std::sqrt(eta0) +
                                    std::sqrt(eta0) * dh_scalar(eta0));
    const double j22 = -0.25 * std::sqrt(eta0 / twopi) * std::pow(om0, -1.5) *
                       h_scalar(eta0);
    const double det = j11 * j22 - j12 * j21;
    const double de = -(j22 * c1 - j12 * c2) / det;
    const double dom = -(-j21 * c1 + j11 * c2) / det;
    eta0 += de;
    om0 += dom;
    if (std::abs(de) + std::abs(dom) < 1e-15) break;
  }

  Jet eta = Jet::constant(eta0), om = Jet::constant(om0), t = Jet::variable();
  // Jacobian of (C1, C2) w.r.t. (eta, Omega) at order 0 (same as the Newton above).
  const double twopi = 2.0 * M_PI;
  const double j11 = std::sqrt(om0 / twopi) *
                     (-0.5 * std::pow(eta0, -1.5) * g1_scalar(eta0) +
                      std::pow(eta0, -0.5) * dg1_scalar(eta0));
  const double j12 = 0.125 + g1_scalar(eta0) / (2.0 * std::sqrt(twopi * eta0 * om0));
  const double j21 = 0.125 + 0.5 / std::sqrt(twopi * om0) *
                                 (0.5 * h_scalar(eta0) / std::sqrt(eta0) +
                                  std::sqrt(eta0) * dh_scalar(eta0));
  const double j22 = -0.25 * std::sqrt(eta0 / twopi) * std::pow(om0, -1.5) *
                     h_scalar(eta0);
  const double det = j11 * j22 - j12 * j21;
  if (std::abs(det) < 1e-12)
    throw std::runtime_error("solve_series: singular system at order 0");

  for (int n = 1; n <= n_max; ++n) {
    Jet c1, c2;
    conditions(eta, om, t, &c1, &c2);
    const double r1 = c1.c[n], r2 = c2.c[n];
    eta.c[n] += -(j22 * r1 - j12 * r2) / det;
    om.c[n] += -(-j21 * r1 + j11 * r2) / det;
  }
  {
    Jet c1, c2;
    conditions(eta, om, t, &c1, &c2);
    for (int n = 0; n <= n_max; ++n)
      if (std::abs(c1.c[n]) + std::abs(c2.c[n]) > 1e-10)
        throw std::runtime_error("solve_series: residual not eliminated at order " +
                                 std::to_string(n));
  }
  const Jet e = energy(eta, om, t);
  std::vector<SeriesCoefficients> out;
  for (int n = 0; n <= n_max; ++n)
    out.push_back({n, eta.c[n], om.c[n], e.c[n]});
  return out;
}

std::vector<ComparisonRow> compare_exact(int n_max) {
  static const std::array<double, 4> kExact = {-0.5, 0.25, -53.0 / 192.0,
                                               5581.0 / 4608.0};
  auto series = solve_series(n_max);
  std::vector<ComparisonRow> rows;
  for (const auto& s : series) {
    ComparisonRow r;
    r.n = s.n;
    r.eps_variational = s.eps_n;
    r.eps_exact = s.n < static_cast<int>(kExact.size())
                      ? kExact[s.n]
                      : std::numeric_limits<double>::quiet_NaN();
    rows.push_back(r);
  }
  return rows;
}

}  // namespace weak_field
}  // namespace vpt
