#include "vpt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace vpt {

namespace {

// QK15 abscissae and weights (positive half; node 0 last).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639, 0.949107912342758525, 0.864864423359769073,
    0.741531185599394440, 0.586087235467691130, 0.405845151377397167,
    0.207784955007898468, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529225, 0.063092092629978553, 0.104790010322250184,
    0.140653259715525919, 0.169004726639267903, 0.190350578064785410,
    0.204432940075298892, 0.209482141084727828};
// Gauss-7 weights for nodes kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {0.129484966168869693, 0.279705391489276668,
                                       0.381830050505118945, 0.417959183673469388};

struct PanelEstimate {
  double value;
  double error;
};

PanelEstimate qk15(const std::function<double(double)>& f, double a, double b,
                   long& n_evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  n_evals += 15;
  double resk = 0.0;
  for (int i = 0; i < 7; ++i) resk += kWgk[i] * (fv[i] + fv[14 - i]);
  resk += kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int i = 0; i < 3; ++i) resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  const double diff = std::abs(resk - resg) * h;
  // QUADPACK-style sharpened error estimate
  double err = diff;
  if (diff > 0.0) {
    double resabs = 0.0;
    for (int i = 0; i < 7; ++i)
      resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    resabs += kWgk[7] * std::abs(fv[7]);
    resabs *= std::abs(h);
    if (resabs > 0.0) err = resabs * std::min(1.0, std::pow(200.0 * diff / resabs, 1.5));
  }
  return {resk * h, err};
}

struct Region {
  double a, b, value, error;
  bool operator<(const Region& o) const { return error < o.error; }
};

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, double abs_tol, int max_depth) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Region> heap;
  auto first = qk15(f, a, b, out.n_evals);
  heap.push({a, b, first.value, first.error});
  double total = first.value;
  double total_err = first.error;
  const int max_regions = 1 << std::min(max_depth, 22);
  while (static_cast<int>(heap.size()) < max_regions) {
    const double tol = std::max(abs_tol, rel_tol * std::abs(total));
    if (total_err <= tol) break;
    Region top = heap.top();
    if (top.error <= tol / (2.0 * static_cast<double>(heap.size())) ||
        top.b - top.a < 1e-15 * (std::abs(top.a) + std::abs(top.b) + 1.0))
      break;
    heap.pop();
    const double mid = 0.5 * (top.a + top.b);
    auto left = qk15(f, top.a, mid, out.n_evals);
    auto right = qk15(f, mid, top.b, out.n_evals);
    total += left.value + right.value - top.value;
    total_err += left.error + right.error - top.error;
    heap.push({top.a, mid, left.value, left.error});
    heap.push({mid, top.b, right.value, right.error});
  }
  out.value = total;
  out.abs_error = total_err;
  out.converged = total_err <= std::max(abs_tol, rel_tol * std::abs(total)) * 1.0001;
  return out;
}

QuadResult integrate_box3(const std::function<double(double, double, double)>& f,
                          const std::array<double, 3>& lo,
                          const std::array<double, 3>& hi, double rel_tol,
                          const std::array<std::vector<double>, 3>& splits) {
  QuadResult out;
  long evals = 0;

  auto panels = [&](int d) {
    std::vector<double> cuts{lo[d], hi[d]};
    for (double s : splits[d])
      if (s > lo[d] && s < hi[d]) cuts.push_back(s);
    std::sort(cuts.begin(), cuts.end());
    return cuts;
  };
  const auto cx = panels(0);
  const auto cy = panels(1);
  const auto cz = panels(2);

  // Inner tolerances tighter than the outer one so that inner errors do not
  // dominate the outer estimate.
  const double tol_y = rel_tol / 4.0;
  const double tol_z = rel_tol / 16.0;

  auto inner_z = [&](double x, double y) {
    double v = 0.0;
    for (size_t k = 0; k + 1 < cz.size(); ++k) {
      auto r = integrate([&](double z) { return f(x, y, z); }, cz[k], cz[k + 1],
                         tol_z, 1e-300, 48);
      v += r.value;
      evals += r.n_evals;
    }
    return v;
  };
  auto inner_yz = [&](double x) {
    double v = 0.0;
    for (size_t j = 0; j + 1 < cy.size(); ++j) {
      auto r = integrate([&](double y) { return inner_z(x, y); }, cy[j], cy[j + 1],
                         tol_y, 1e-300, 48);
      v += r.value;
    }
    return v;
  };
  double total = 0.0, err = 0.0;
  bool ok = true;
  for (size_t i = 0; i + 1 < cx.size(); ++i) {
    auto r = integrate(inner_yz, cx[i], cx[i + 1], rel_tol, 1e-300, 48);
    total += r.value;
    err += r.abs_error;
    ok = ok && r.converged;
  }
  out.value = total;
  out.abs_error = err;
  out.converged = ok;
  out.n_evals = evals;
  return out;
}

std::array<double, 3> sym_eigenvalues(const double* m, int n) {
  // Jacobi rotations; n is 1, 2 or 3.
  double a[3][3] = {};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i * n + j];
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::array<double, 3> ev = {a[0][0], n > 1 ? a[1][1] : 0.0, n > 2 ? a[2][2] : 0.0};
  std::sort(ev.begin(), ev.begin() + n);
  return ev;
}

double brent_min(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_iter) {
  const double gold = 0.3819660112501051;
  double x = a + gold * (b - a), w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    const double m = 0.5 * (a + b);
    const double tol1 = tol * std::abs(x) + 1e-300;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;
    bool parabolic = false;
    if (std::abs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double etmp = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * etmp) && p > q * (a - x) &&
          p < q * (b - x)) {
        parabolic = true;
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (m > x) ? tol1 : -tol1;
      }
    }
    if (!parabolic) {
      e = (x < m) ? b - x : a - x;
      d = gold * e;
    }
    const double u = (std::abs(d) >= tol1) ? x + d : x + (d > 0 ? tol1 : -tol1);
    const double fu = f(u);
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return x;
}

}  // namespace vpt
