#include "smartpde/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "smartpde/fft.hpp"
#include "smartpde/rng.hpp"

namespace smartpde::pde {

namespace {

using fft::cplx;

void require_periodic_pow2(const Grid1D& grid, const char* who) {
  if (!grid.periodic) throw UnstableConfig(std::string(who) + " requires a periodic grid");
  if (!fft::is_power_of_two(grid.nx)) {
    throw UnstableConfig(std::string(who) + " requires power-of-two nx, got " +
                         std::to_string(grid.nx));
  }
}

void check_finite(const std::vector<double>& field, const char* who) {
  for (double v : field) {
    if (!std::isfinite(v)) throw UnstableConfig(std::string(who) + " produced non-finite values");
  }
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Godunov flux for f(u) = u^2/2.
inline double godunov_flux(double ul, double ur) {
  const double fl = 0.5 * ul * ul;
  const double fr = 0.5 * ur * ur;
  if (ul <= ur) {
    if (ul > 0.0) return fl;
    if (ur < 0.0) return fr;
    return 0.0;  // rarefaction straddles the sonic point
  }
  return std::max(fl, fr);
}

// Zero the top third of modes: standard 2/3-rule dealiasing for quadratic
// nonlinearities.
void dealias(std::vector<cplx>& spec) {
  const std::size_t n = spec.size();
  const std::size_t cut = n / 3;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = i <= n / 2 ? i : n - i;
    if (m > cut) spec[i] = cplx(0.0, 0.0);
  }
}

}  // namespace

double burgers_stable_dt(const std::vector<double>& h, double nu, const Grid1D& grid) {
  const double dx = grid.dx();
  const double umax = std::max(max_abs(h), 1e-12);
  // Explicit Euler: advective and diffusive limits combined.
  const double rate = umax / dx + 2.0 * nu / (dx * dx);
  return 0.9 / rate;
}

Trajectory1D solve_burgers_1d(const std::vector<double>& h, double nu,
                              const Grid1D& grid, const TimeAxis& times, Bc bc) {
  const std::size_t nx = grid.nx;
  if (h.size() != nx) throw ShapeMismatch("initial field size != grid nx");
  if (nu < 0.0) throw UnstableConfig("burgers requires nu >= 0");
  const double dx = grid.dx();
  const double dt = times.dt();
  if (dt > burgers_stable_dt(h, nu, grid)) {
    throw UnstableConfig("burgers dt " + std::to_string(dt) + " exceeds stable bound " +
                         std::to_string(burgers_stable_dt(h, nu, grid)));
  }

  Trajectory1D traj;
  traj.grid = grid;
  traj.times = times;
  traj.tag = PdeTag{"burgers1d", nu, 0.0};
  traj.u.resize(times.nt * nx);

  std::vector<double> u = h;
  std::vector<double> flux(nx + 1);
  std::vector<double> next(nx);
  std::copy(u.begin(), u.end(), traj.u.begin());

  const bool periodic = bc == Bc::kPeriodic;
  for (std::size_t step = 1; step < times.nt; ++step) {
    if (periodic) {
      for (std::size_t i = 0; i <= nx; ++i) {
        const double ul = u[(i + nx - 1) % nx];
        const double ur = u[i % nx];
        flux[i] = godunov_flux(ul, ur);
      }
      for (std::size_t i = 0; i < nx; ++i) {
        const double diff = u[(i + 1) % nx] - 2.0 * u[i] + u[(i + nx - 1) % nx];
        next[i] = u[i] - dt / dx * (flux[i + 1] - flux[i]) + nu * dt / (dx * dx) * diff;
      }
    } else {
      // Dirichlet: endpoints pinned to their initial values.
      next[0] = u[0];
      next[nx - 1] = u[nx - 1];
      for (std::size_t i = 1; i + 1 < nx; ++i) {
        const double fl = godunov_flux(u[i - 1], u[i]);
        const double fr = godunov_flux(u[i], u[i + 1]);
        const double diff = u[i + 1] - 2.0 * u[i] + u[i - 1];
        next[i] = u[i] - dt / dx * (fr - fl) + nu * dt / (dx * dx) * diff;
      }
    }
    u.swap(next);
    std::copy(u.begin(), u.end(), traj.u.begin() + step * nx);
  }
  check_finite(traj.u, "burgers");
  return traj;
}

Trajectory1D solve_advection_1d(const std::vector<double>& h, double c,
                                const Grid1D& grid, const TimeAxis& times) {
  require_periodic_pow2(grid, "advection");
  if (h.size() != grid.nx) throw ShapeMismatch("initial field size != grid nx");
  if (!std::isfinite(c)) throw UnstableConfig("advection speed must be finite");

  Trajectory1D traj;
  traj.grid = grid;
  traj.times = times;
  traj.tag = PdeTag{"advection1d", 0.0, c};
  traj.u.resize(times.nt * grid.nx);

  // u(x, t) = h(x - c t): phase shift in Fourier space, evaluated directly
  // at each stored time so errors do not accumulate across steps.
  const std::vector<cplx> h_hat = fft::forward_real(h);
  std::vector<cplx> shifted(grid.nx);
  for (std::size_t j = 0; j < times.nt; ++j) {
    const double t = times.t(j);
    for (std::size_t i = 0; i < grid.nx; ++i) {
      const double k = fft::wavenumber(i, grid.nx, grid.length());
      const double phase = -k * c * t;
      shifted[i] = h_hat[i] * cplx(std::cos(phase), std::sin(phase));
    }
    // Nyquist bin has no conjugate partner; keep it real to keep u real.
    if (grid.nx % 2 == 0) {
      shifted[grid.nx / 2] = cplx(shifted[grid.nx / 2].real(), 0.0);
    }
    std::vector<double> slice = fft::inverse_to_real(shifted);
    std::copy(slice.begin(), slice.end(), traj.u.begin() + j * grid.nx);
  }
  check_finite(traj.u, "advection");
  return traj;
}

double kdv_stable_dt(const std::vector<double>& h, const Grid1D& grid) {
  // Dispersion is handled exactly by the integrating factor; the explicit
  // part is the advective nonlinearity.
  const double umax = std::max(max_abs(h), 1e-12);
  const double kmax = std::numbers::pi / grid.dx();
  return 1.5 / (kmax * umax);
}

Trajectory1D solve_kdv_1d(const std::vector<double>& h, const Grid1D& grid,
                          const TimeAxis& times) {
  require_periodic_pow2(grid, "kdv");
  if (h.size() != grid.nx) throw ShapeMismatch("initial field size != grid nx");
  const double dt = times.dt();
  if (dt > kdv_stable_dt(h, grid)) {
    throw UnstableConfig("kdv dt " + std::to_string(dt) + " exceeds stable bound " +
                         std::to_string(kdv_stable_dt(h, grid)));
  }

  const std::size_t nx = grid.nx;
  const double length = grid.length();

  std::vector<double> k(nx), k3(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    k[i] = fft::wavenumber(i, nx, length);
    k3[i] = k[i] * k[i] * k[i];
  }

  // In v = exp(-i k^3 t) u_hat coordinates the dispersive term drops out:
  // dv/dt = -exp(-i k^3 t) * (i k / 2) * fft(u^2).
  auto rhs = [&](const std::vector<cplx>& v, double t, std::vector<cplx>& out) {
    std::vector<cplx> u_hat(nx);
    for (std::size_t i = 0; i < nx; ++i) {
      const double ph = k3[i] * t;
      u_hat[i] = v[i] * cplx(std::cos(ph), std::sin(ph));
    }
    std::vector<double> u = fft::inverse_to_real(u_hat);
    std::vector<double> u2(nx);
    for (std::size_t i = 0; i < nx; ++i) u2[i] = u[i] * u[i];
    std::vector<cplx> u2_hat = fft::forward_real(u2);
    dealias(u2_hat);
    for (std::size_t i = 0; i < nx; ++i) {
      const double ph = -k3[i] * t;
      const cplx e(std::cos(ph), std::sin(ph));
      out[i] = e * cplx(0.0, -0.5 * k[i]) * u2_hat[i];
    }
  };

  Trajectory1D traj;
  traj.grid = grid;
  traj.times = times;
  traj.tag = PdeTag{"kdv1d", 0.0, 0.0};
  traj.u.resize(times.nt * nx);
  std::copy(h.begin(), h.end(), traj.u.begin());

  std::vector<cplx> v = fft::forward_real(h);
  std::vector<cplx> k1(nx), k2(nx), k3v(nx), k4(nx), tmp(nx);
  for (std::size_t step = 1; step < times.nt; ++step) {
    const double t = times.t(step - 1);
    rhs(v, t, k1);
    for (std::size_t i = 0; i < nx; ++i) tmp[i] = v[i] + 0.5 * dt * k1[i];
    rhs(tmp, t + 0.5 * dt, k2);
    for (std::size_t i = 0; i < nx; ++i) tmp[i] = v[i] + 0.5 * dt * k2[i];
    rhs(tmp, t + 0.5 * dt, k3v);
    for (std::size_t i = 0; i < nx; ++i) tmp[i] = v[i] + dt * k3v[i];
    rhs(tmp, t + dt, k4);
    for (std::size_t i = 0; i < nx; ++i) {
      v[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3v[i] + k4[i]);
    }

    const double t_new = times.t(step);
    std::vector<cplx> u_hat(nx);
    for (std::size_t i = 0; i < nx; ++i) {
      const double ph = k3[i] * t_new;
      u_hat[i] = v[i] * cplx(std::cos(ph), std::sin(ph));
    }
    std::vector<double> slice = fft::inverse_to_real(u_hat);
    std::copy(slice.begin(), slice.end(), traj.u.begin() + step * nx);
  }
  check_finite(traj.u, "kdv");
  return traj;
}

std::vector<double> solve_elliptic_1d(const std::vector<double>& a,
                                      const std::vector<double>& f,
                                      const Grid1D& grid) {
  if (grid.periodic) throw SingularSystem("elliptic solver requires a bounded grid");
  const std::size_t nx = grid.nx;
  if (a.size() != nx || f.size() != nx) {
    throw ShapeMismatch("elliptic coefficient/source size != grid nx");
  }
  for (double av : a) {
    if (!(av > 0.0)) throw SingularSystem("elliptic coefficient must be positive");
  }

  const double dx = grid.dx();
  const std::size_t m = nx - 2;  // interior unknowns
  if (m == 0) return std::vector<double>(nx, 0.0);

  // Harmonic interface averages stay bounded when one node coefficient is
  // huge, which covariant remaps with a vanishing map derivative produce.
  auto iface = [&](std::size_t i) {
    return 2.0 / (1.0 / a[i] + 1.0 / a[i + 1]);
  };

  std::vector<double> lower(m), diag(m), upper(m), rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double am = iface(i);      // between node i and i+1
    const double ap = iface(i + 1);  // between node i+1 and i+2
    lower[i] = am;
    upper[i] = ap;
    diag[i] = -(am + ap);
    rhs[i] = f[i + 1] * dx * dx;
  }

  // Thomas algorithm.
  for (std::size_t i = 1; i < m; ++i) {
    const double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  std::vector<double> u(nx, 0.0);
  u[m] = rhs[m - 1] / diag[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) {
    u[i + 1] = (rhs[i] - upper[i] * u[i + 2]) / diag[i];
  }
  return u;
}

double ns_stable_dt(const std::vector<double>& omega0, double nu, const Grid2D& grid) {
  // Velocity magnitude bounded by |psi_hat| ~ |omega_hat|/k; use the blunt
  // bound max|u| <= max|omega| * L / (2 pi) and the advective CFL.
  const double wmax = std::max(max_abs(omega0), 1e-12);
  const double umax = wmax * grid.length() / (2.0 * std::numbers::pi);
  const double kmax = std::numbers::pi / grid.dx();
  (void)nu;  // viscous term is integrated exactly
  return 1.0 / (kmax * umax);
}

namespace {

struct Spec2D {
  std::size_t n;
  std::vector<double> kx, ky;  // per-index wavenumbers

  explicit Spec2D(const Grid2D& grid) : n(grid.n), kx(grid.n), ky(grid.n) {
    for (std::size_t i = 0; i < n; ++i) {
      kx[i] = fft::wavenumber(i, n, grid.length());
      ky[i] = kx[i];
    }
  }
};

void fft2_forward(std::vector<cplx>& a, std::size_t n) {
  std::vector<cplx> row(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::copy(a.begin() + y * n, a.begin() + (y + 1) * n, row.begin());
    fft::forward(row);
    std::copy(row.begin(), row.end(), a.begin() + y * n);
  }
  std::vector<cplx> col(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) col[y] = a[y * n + x];
    fft::forward(col);
    for (std::size_t y = 0; y < n; ++y) a[y * n + x] = col[y];
  }
}

void fft2_inverse(std::vector<cplx>& a, std::size_t n) {
  std::vector<cplx> row(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::copy(a.begin() + y * n, a.begin() + (y + 1) * n, row.begin());
    fft::inverse(row);
    std::copy(row.begin(), row.end(), a.begin() + y * n);
  }
  std::vector<cplx> col(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) col[y] = a[y * n + x];
    fft::inverse(col);
    for (std::size_t y = 0; y < n; ++y) a[y * n + x] = col[y];
  }
}

std::vector<cplx> to_spectral(const std::vector<double>& f, std::size_t n) {
  std::vector<cplx> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = cplx(f[i], 0.0);
  fft2_forward(a, n);
  return a;
}

std::vector<double> to_physical(std::vector<cplx> a, std::size_t n) {
  fft2_inverse(a, n);
  std::vector<double> f(n * n);
  for (std::size_t i = 0; i < n * n; ++i) f[i] = a[i].real();
  return f;
}

void dealias2(std::vector<cplx>& a, const Spec2D& sp) {
  const std::size_t n = sp.n;
  const std::size_t cut = n / 3;
  for (std::size_t y = 0; y < n; ++y) {
    const std::size_t my = y <= n / 2 ? y : n - y;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t mx = x <= n / 2 ? x : n - x;
      if (mx > cut || my > cut) a[y * n + x] = cplx(0.0, 0.0);
    }
  }
}

// Velocity from vorticity via the streamfunction: psi_hat = omega_hat/k^2,
// u = d(psi)/dy, v = -d(psi)/dx.
void velocity_from_vorticity(const std::vector<cplx>& w_hat, const Spec2D& sp,
                             std::vector<double>& u, std::vector<double>& v) {
  const std::size_t n = sp.n;
  std::vector<cplx> u_hat(n * n), v_hat(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      const double k2 = sp.kx[x] * sp.kx[x] + sp.ky[y] * sp.ky[y];
      const std::size_t id = y * n + x;
      if (k2 == 0.0) {
        u_hat[id] = v_hat[id] = cplx(0.0, 0.0);
        continue;
      }
      const cplx psi = w_hat[id] / k2;
      u_hat[id] = cplx(0.0, sp.ky[y]) * psi;
      v_hat[id] = cplx(0.0, -sp.kx[x]) * psi;
    }
  }
  u = to_physical(std::move(u_hat), n);
  v = to_physical(std::move(v_hat), n);
}

// Nonlinear term N(omega) = -(u w_x + v w_y) in spectral space, dealiased.
void ns_nonlinear(const std::vector<cplx>& w_hat, const Spec2D& sp,
                  std::vector<cplx>& out) {
  const std::size_t n = sp.n;
  std::vector<double> u, v;
  velocity_from_vorticity(w_hat, sp, u, v);

  std::vector<cplx> wx_hat(n * n), wy_hat(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t id = y * n + x;
      wx_hat[id] = cplx(0.0, sp.kx[x]) * w_hat[id];
      wy_hat[id] = cplx(0.0, sp.ky[y]) * w_hat[id];
    }
  }
  std::vector<double> wx = to_physical(std::move(wx_hat), n);
  std::vector<double> wy = to_physical(std::move(wy_hat), n);

  std::vector<cplx> adv(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    adv[i] = cplx(-(u[i] * wx[i] + v[i] * wy[i]), 0.0);
  }
  fft2_forward(adv, n);
  dealias2(adv, sp);
  out = std::move(adv);
}

// Pressure Poisson equation lap(p) = -div(u . grad u), solved spectrally
// with zero-mean pressure.
std::vector<double> pressure_from_velocity(const std::vector<double>& u,
                                           const std::vector<double>& v,
                                           const Spec2D& sp) {
  const std::size_t n = sp.n;
  std::vector<cplx> u_hat = to_spectral(u, n);
  std::vector<cplx> v_hat = to_spectral(v, n);

  auto deriv = [&](const std::vector<cplx>& f_hat, bool x_dir) {
    std::vector<cplx> d(n * n);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t id = y * n + x;
        const double kk = x_dir ? sp.kx[x] : sp.ky[y];
        d[id] = cplx(0.0, kk) * f_hat[id];
      }
    }
    return to_physical(std::move(d), n);
  };

  std::vector<double> ux = deriv(u_hat, true), uy = deriv(u_hat, false);
  std::vector<double> vx = deriv(v_hat, true), vy = deriv(v_hat, false);

  // div(u . grad u) for divergence-free u reduces to ux^2 + 2 uy vx + vy^2.
  std::vector<cplx> src(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    src[i] = cplx(-(ux[i] * ux[i] + 2.0 * uy[i] * vx[i] + vy[i] * vy[i]), 0.0);
  }
  fft2_forward(src, n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      const double k2 = sp.kx[x] * sp.kx[x] + sp.ky[y] * sp.ky[y];
      const std::size_t id = y * n + x;
      src[id] = k2 == 0.0 ? cplx(0.0, 0.0) : src[id] / (-k2);
    }
  }
  return to_physical(std::move(src), n);
}

}  // namespace

Trajectory2D solve_ns_2d(const std::vector<double>& omega0, double nu,
                         const Grid2D& grid, const TimeAxis& times) {
  if (!fft::is_power_of_two(grid.n)) {
    throw UnstableConfig("ns2d requires power-of-two grid, got " + std::to_string(grid.n));
  }
  if (omega0.size() != grid.n * grid.n) throw ShapeMismatch("omega0 size != grid n^2");
  if (nu < 0.0) throw UnstableConfig("ns2d requires nu >= 0");
  const double dt = times.dt();
  if (dt > ns_stable_dt(omega0, nu, grid)) {
    throw UnstableConfig("ns2d dt " + std::to_string(dt) + " exceeds stable bound " +
                         std::to_string(ns_stable_dt(omega0, nu, grid)));
  }

  const std::size_t n = grid.n;
  const Spec2D sp(grid);

  Trajectory2D traj;
  traj.grid = grid;
  traj.times = times;
  traj.tag = PdeTag{"ns2d", nu, 0.0};
  traj.u.resize(times.nt * n * n);
  traj.v.resize(times.nt * n * n);
  traj.p.resize(times.nt * n * n);

  // Integrating factor absorbs the viscous term exactly:
  // g = exp(nu k^2 t) w_hat, dg/dt = exp(nu k^2 t) N(w).
  std::vector<double> visc(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      visc[y * n + x] = nu * (sp.kx[x] * sp.kx[x] + sp.ky[y] * sp.ky[y]);
    }
  }

  std::vector<cplx> w_hat = to_spectral(omega0, n);

  auto store_slice = [&](std::size_t j) {
    std::vector<double> u, v;
    velocity_from_vorticity(w_hat, sp, u, v);
    std::vector<double> p = pressure_from_velocity(u, v, sp);
    std::copy(u.begin(), u.end(), traj.u.begin() + j * n * n);
    std::copy(v.begin(), v.end(), traj.v.begin() + j * n * n);
    std::copy(p.begin(), p.end(), traj.p.begin() + j * n * n);
  };
  store_slice(0);

  const std::size_t nn = n * n;
  std::vector<cplx> g = w_hat;  // at t=0 the factor is 1
  std::vector<cplx> k1(nn), k2(nn), k3(nn), k4(nn), tmp(nn), w_tmp(nn);

  auto rhs = [&](const std::vector<cplx>& g_in, double t, std::vector<cplx>& out) {
    for (std::size_t i = 0; i < nn; ++i) w_tmp[i] = g_in[i] * std::exp(-visc[i] * t);
    ns_nonlinear(w_tmp, sp, out);
    for (std::size_t i = 0; i < nn; ++i) out[i] *= std::exp(visc[i] * t);
  };

  for (std::size_t step = 1; step < times.nt; ++step) {
    const double t = times.t(step - 1);
    rhs(g, t, k1);
    for (std::size_t i = 0; i < nn; ++i) tmp[i] = g[i] + 0.5 * dt * k1[i];
    rhs(tmp, t + 0.5 * dt, k2);
    for (std::size_t i = 0; i < nn; ++i) tmp[i] = g[i] + 0.5 * dt * k2[i];
    rhs(tmp, t + 0.5 * dt, k3);
    for (std::size_t i = 0; i < nn; ++i) tmp[i] = g[i] + dt * k3[i];
    rhs(tmp, t + dt, k4);
    for (std::size_t i = 0; i < nn; ++i) {
      g[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    const double t_new = times.t(step);
    for (std::size_t i = 0; i < nn; ++i) w_hat[i] = g[i] * std::exp(-visc[i] * t_new);
    store_slice(step);
  }

  check_finite(traj.u, "ns2d");
  check_finite(traj.v, "ns2d");
  check_finite(traj.p, "ns2d");
  return traj;
}

double max_divergence(const Trajectory2D& traj) {
  const std::size_t n = traj.grid.n;
  const Spec2D sp(traj.grid);
  double worst = 0.0;
  for (std::size_t j = 0; j < traj.times.nt; ++j) {
    std::vector<double> u(traj.u.begin() + j * n * n, traj.u.begin() + (j + 1) * n * n);
    std::vector<double> v(traj.v.begin() + j * n * n, traj.v.begin() + (j + 1) * n * n);
    std::vector<cplx> u_hat = to_spectral(u, n);
    std::vector<cplx> v_hat = to_spectral(v, n);
    std::vector<cplx> div_hat(n * n);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t id = y * n + x;
        div_hat[id] = cplx(0.0, sp.kx[x]) * u_hat[id] + cplx(0.0, sp.ky[y]) * v_hat[id];
      }
    }
    std::vector<double> div = to_physical(std::move(div_hat), n);
    worst = std::max(worst, max_abs(div));
  }
  return worst;
}

double spatial_mass(const Trajectory1D& traj, std::size_t slice) {
  const std::size_t nx = traj.grid.nx;
  double acc = 0.0;
  for (std::size_t i = 0; i < nx; ++i) acc += traj.u[slice * nx + i];
  return acc * traj.grid.dx();
}

std::vector<double> truncated_fourier_ic(const Grid1D& grid, std::size_t modes,
                                         double amplitude, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> amp(modes), phase(modes);
  for (std::size_t m = 0; m < modes; ++m) {
    amp[m] = rng.uniform(-1.0, 1.0);
    phase[m] = rng.uniform(0.0, 2.0 * std::numbers::pi);
  }
  std::vector<double> h(grid.nx);
  for (std::size_t i = 0; i < grid.nx; ++i) {
    const double xi = (grid.x(i) - grid.x_min) / grid.length();
    double v = 0.0;
    for (std::size_t m = 0; m < modes; ++m) {
      v += amp[m] * std::sin(2.0 * std::numbers::pi * static_cast<double>(m + 1) * xi +
                             phase[m]);
    }
    h[i] = amplitude * v;
  }
  return h;
}

std::vector<double> kdv_soliton_ic(const Grid1D& grid, double speed, double center) {
  std::vector<double> h(grid.nx);
  for (std::size_t i = 0; i < grid.nx; ++i) {
    const double arg = 0.5 * std::sqrt(speed) * (grid.x(i) - center);
    const double s = 1.0 / std::cosh(arg);
    h[i] = 3.0 * speed * s * s;
  }
  return h;
}

std::vector<double> taylor_green_vorticity(const Grid2D& grid) {
  std::vector<double> w(grid.n * grid.n);
  for (std::size_t y = 0; y < grid.n; ++y) {
    for (std::size_t x = 0; x < grid.n; ++x) {
      w[y * grid.n + x] = 2.0 * std::sin(grid.x(x)) * std::sin(grid.x(y));
    }
  }
  return w;
}

std::vector<double> random_vorticity_ic(const Grid2D& grid, std::size_t modes,
                                        double amplitude, std::uint64_t seed) {
  Rng rng(seed);
  const double two_pi = 2.0 * std::numbers::pi;
  struct Mode {
    double ax, ay, ph, amp;
  };
  std::vector<Mode> ms(modes);
  for (auto& m : ms) {
    m.ax = 1.0 + std::floor(rng.uniform(0.0, 3.0));
    m.ay = 1.0 + std::floor(rng.uniform(0.0, 3.0));
    m.ph = rng.uniform(0.0, two_pi);
    m.amp = rng.uniform(-1.0, 1.0);
  }
  std::vector<double> w(grid.n * grid.n);
  for (std::size_t y = 0; y < grid.n; ++y) {
    for (std::size_t x = 0; x < grid.n; ++x) {
      const double sx = two_pi * (grid.x(x) - grid.x_min) / grid.length();
      const double sy = two_pi * (grid.x(y) - grid.x_min) / grid.length();
      double v = 0.0;
      for (const auto& m : ms) v += m.amp * std::sin(m.ax * sx + m.ph) * std::cos(m.ay * sy);
      w[y * grid.n + x] = amplitude * v;
    }
  }
  return w;
}

}  // namespace smartpde::pde
