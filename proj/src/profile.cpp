#include "minkhyp/profile.hpp"

#include <algorithm>
#include <cmath>

namespace minkhyp {

namespace {

double ipow(double x, int n) {
  double r = 1;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

ProfileParams ProfileParams::make(double c, int n) {
  ProfileParams p;
  p.c = c;
  p.n = n;
  p.normalization =
      (c == 1.0) ? ProfileNormalization::UnitAtZeroIncreasing : ProfileNormalization::EvenAtZero;
  p.validate();
  return p;
}

void ProfileParams::validate() const {
  if (n < 2) throw InvalidParams("profile: dimension must be >= 2");
  if (c > 1) throw InvalidParams("profile: constant must satisfy c <= 1 (profile changes sign otherwise)");
  if (normalization == ProfileNormalization::EvenAtZero && c >= 1)
    throw InvalidParams("profile: even normalization requires c < 1");
  if (normalization == ProfileNormalization::UnitAtZeroIncreasing && c != 1)
    throw InvalidParams("profile: unit-at-zero normalization requires c = 1");
}

double ProfileParams::f0() const {
  return normalization == ProfileNormalization::EvenAtZero ? std::pow(1.0 - c, 1.0 / n) : 1.0;
}

double ProfileParams::fp0() const {
  if (normalization == ProfileNormalization::EvenAtZero) return 0.0;
  // (1 - b^2)^{-n/2} = 1 + 1 = 2  =>  b = sqrt(1 - 2^{-2/n})
  return std::sqrt(-std::expm1(-2.0 * std::log(2.0) / n));
}

double first_integral(double f, double fp, int n) {
  if (std::abs(fp) >= 1) throw DomainError("first_integral: |f'| must be < 1");
  return std::exp(-0.5 * n * std::log1p(-fp * fp)) - ipow(f, n);
}

double profile_rhs(double f, double fp, int n) {
  const double q = std::max(1.0 - fp * fp, 0.0);
  return ipow(f, n - 1) * std::pow(q, 0.5 * (n + 2));
}

namespace {

// Slope magnitude on the invariant manifold: fp^2 = 1 - (c + f^n)^{-2/n},
// evaluated as -expm1(-(2/n) log(c + f^n)) for accuracy near the minimum and
// in the c = 1 decaying tail.
double manifold_slope(double f, double c, int n) {
  const double fn = ipow(f, n);
  double lp;
  if (c == 1.0)
    lp = std::log1p(fn);
  else
    lp = std::log(c + fn);
  const double s2 = -std::expm1(-2.0 * lp / n);
  return s2 > 0 ? std::sqrt(s2) : 0.0;
}

struct State {
  double f, fp;
};

// Dormand-Prince 5(4) step.
struct DP45 {
  int n;
  double deriv_f(const State& s) const { return s.fp; }
  double deriv_fp(const State& s) const { return profile_rhs(s.f, s.fp, n); }

  // Returns the 5th-order state and the embedded error estimate.
  void step(const State& y, double h, State& out, State& err) const {
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    auto eval = [&](const State& s, double& kf, double& kp) {
      kf = deriv_f(s);
      kp = deriv_fp(s);
    };
    double k1f, k1p, k2f, k2p, k3f, k3p, k4f, k4p, k5f, k5p, k6f, k6p, k7f, k7p;
    eval(y, k1f, k1p);
    eval({y.f + h * a21 * k1f, y.fp + h * a21 * k1p}, k2f, k2p);
    eval({y.f + h * (a31 * k1f + a32 * k2f), y.fp + h * (a31 * k1p + a32 * k2p)}, k3f, k3p);
    eval({y.f + h * (a41 * k1f + a42 * k2f + a43 * k3f),
          y.fp + h * (a41 * k1p + a42 * k2p + a43 * k3p)},
         k4f, k4p);
    eval({y.f + h * (a51 * k1f + a52 * k2f + a53 * k3f + a54 * k4f),
          y.fp + h * (a51 * k1p + a52 * k2p + a53 * k3p + a54 * k4p)},
         k5f, k5p);
    eval({y.f + h * (a61 * k1f + a62 * k2f + a63 * k3f + a64 * k4f + a65 * k5f),
          y.fp + h * (a61 * k1p + a62 * k2p + a63 * k3p + a64 * k4p + a65 * k5p)},
         k6f, k6p);
    out.f = y.f + h * (b1 * k1f + b3 * k3f + b4 * k4f + b5 * k5f + b6 * k6f);
    out.fp = y.fp + h * (b1 * k1p + b3 * k3p + b4 * k4p + b5 * k5p + b6 * k6p);
    eval(out, k7f, k7p);
    err.f = h * (e1 * k1f + e3 * k3f + e4 * k4f + e5 * k5f + e6 * k6f + e7 * k7f);
    err.fp = h * (e1 * k1p + e3 * k3p + e4 * k4p + e5 * k5p + e6 * k6p + e7 * k7p);
  }
};

constexpr double kRtol = 1e-13;
constexpr double kAtol = 1e-30;
constexpr double kProjectSlope = 1e-4;

// Roundoff floor of the measured first integral: representing the slope as a
// double perturbs (1 - fp^2)^{-n/2} by about n * eps * P^{(n+2)/n}, P = c + f^n.
double drift_floor(double f, double c, int n) {
  const double P = std::abs(c) + ipow(f, n) + 1.0;
  return 64.0 * 1.1e-16 * n * std::pow(P, (n + 2.0) / n);
}

// Integrate one span [t0, t1] (t1 may be below t0); the caller records endpoint
// states. The slope is re-projected onto the invariant manifold after each
// accepted step once |fp| is away from the even minimum; steps are rejected on
// first-integral drift (or on the size of the projection correction) beyond the
// requested tolerance. For c = 1 the slope is strictly positive, so the
// projection applies at every step; this also removes the e^{-t} mode that
// otherwise makes the decaying tail exponentially unstable backward in time.
void advance(State& y, double t0, double t1, double c, int n, double drift_tol,
             bool slope_always_positive) {
  if (t0 == t1) return;
  const DP45 rk{n};
  const double dir = t1 > t0 ? 1.0 : -1.0;
  double t = t0;
  double h = dir * std::min(0.01, std::abs(t1 - t0));
  int rejects_in_a_row = 0;
  while (dir * (t1 - t) > 0) {
    if (dir * (t + h - t1) > 0) h = t1 - t;
    State out, err;
    rk.step(y, h, out, err);
    const double scale_f = kAtol + kRtol * std::max(std::abs(y.f), std::abs(out.f));
    const double scale_p = kAtol + kRtol * std::max(std::abs(y.fp), std::abs(out.fp));
    double err_norm = std::max(std::abs(err.f) / scale_f, std::abs(err.fp) / scale_p);
    bool ok = err_norm <= 1.0 && std::abs(out.fp) < 1.0 && out.f > 0;
    bool projected = false;
    double fp_proj = out.fp;
    if (ok) {
      if (slope_always_positive) {
        projected = true;
        fp_proj = manifold_slope(out.f, c, n);
      } else if (std::abs(out.fp) > kProjectSlope) {
        projected = true;
        fp_proj = std::copysign(manifold_slope(out.f, c, n), out.fp);
      }
      if (projected) {
        if (std::abs(fp_proj - out.fp) > 1e-9 * (1.0 + std::abs(out.fp)) &&
            std::abs(h) > 1e-7 && !slope_always_positive)
          ok = false;
      } else {
        const double drift = std::abs(first_integral(out.f, out.fp, n) - c);
        if (drift > std::max(drift_tol, drift_floor(out.f, c, n)) && std::abs(h) > 1e-7)
          ok = false;
      }
    }
    if (ok) {
      t += h;
      y = out;
      if (projected) y.fp = fp_proj;
      rejects_in_a_row = 0;
      const double grow = err_norm > 0 ? 0.9 * std::pow(err_norm, -0.2) : 5.0;
      h *= std::clamp(grow, 0.2, 5.0);
    } else {
      h *= 0.5;
      if (++rejects_in_a_row > 80)
        throw TolUnachievable("integrate_profile: step control failed near t = " +
                              std::to_string(t));
    }
  }
}

// Sample times for one side: dense near the origin, sparse in the linear tail.
std::vector<double> side_times(double t_max) {
  std::vector<double> ts;
  const double dense_span = std::min(t_max, 25.0);
  const double dense_h = 0.02;
  for (double t = dense_h; t < dense_span + 1e-12; t += dense_h) ts.push_back(t);
  if (t_max > 25.0) {
    for (double t = 25.5; t < t_max + 1e-9; t += 0.5) ts.push_back(std::min(t, t_max));
    if (ts.back() < t_max - 1e-12) ts.push_back(t_max);
  } else if (ts.empty() || ts.back() < t_max - 1e-12) {
    ts.push_back(t_max);
  }
  return ts;
}

}  // namespace

Profile integrate_profile(const ProfileParams& params, double t_max, double tol) {
  params.validate();
  if (!(t_max > 0)) throw InvalidParams("integrate_profile: t_max must be positive");
  if (!(tol > 0)) throw InvalidParams("integrate_profile: tol must be positive");

  const int n = params.n;
  const double c = params.c;
  const State y0{params.f0(), params.fp0()};

  const std::vector<double> side = side_times(t_max);

  std::vector<double> ts, fs, fps;
  ts.reserve(2 * side.size() + 1);

  // Backward sweep collected in reverse, then the origin, then forward.
  {
    State y = y0;
    double t_prev = 0;
    std::vector<double> bt, bf, bp;
    for (double t : side) {
      advance(y, t_prev, -t, c, n, tol);
      t_prev = -t;
      bt.push_back(-t);
      bf.push_back(y.f);
      bp.push_back(y.fp);
    }
    for (size_t i = bt.size(); i-- > 0;) {
      ts.push_back(bt[i]);
      fs.push_back(bf[i]);
      fps.push_back(bp[i]);
    }
  }
  ts.push_back(0);
  fs.push_back(y0.f);
  fps.push_back(y0.fp);
  {
    State y = y0;
    double t_prev = 0;
    for (double t : side) {
      advance(y, t_prev, t, c, n, tol);
      t_prev = t;
      ts.push_back(t);
      fs.push_back(y.f);
      fps.push_back(y.fp);
    }
  }

  Profile p;
  p.params_ = params;
  p.t_ = std::move(ts);
  p.f_ = std::move(fs);
  p.fp_ = std::move(fps);
  p.fpp_.resize(p.t_.size());
  double drift = 0, floor_max = 0;
  for (size_t i = 0; i < p.t_.size(); ++i) {
    if (!(p.f_[i] > 0))
      throw TolUnachievable("integrate_profile: height lost positivity at t = " +
                            std::to_string(p.t_[i]));
    if (!(std::abs(p.fp_[i]) < 1))
      throw TolUnachievable("integrate_profile: slope reached +-1 at t = " +
                            std::to_string(p.t_[i]));
    p.fpp_[i] = profile_rhs(p.f_[i], p.fp_[i], n);
    drift = std::max(drift, std::abs(first_integral(p.f_[i], p.fp_[i], n) - c));
    floor_max = std::max(floor_max, drift_floor(p.f_[i], c, n));
  }
  p.c_drift_ = drift;
  if (drift > std::max(tol, floor_max))
    throw TolUnachievable("integrate_profile: first-integral drift " + std::to_string(drift) +
                          " exceeds tol");
  return p;
}

void Profile::check_range(double t) const {
  if (t < t_.front() - 1e-12 || t > t_.back() + 1e-12)
    throw OutOfRange("profile query t = " + std::to_string(t) + " outside [" +
                     std::to_string(t_.front()) + ", " + std::to_string(t_.back()) + "]");
}

long Profile::segment(double t) const {
  auto it = std::upper_bound(t_.begin(), t_.end(), t);
  long i = std::distance(t_.begin(), it) - 1;
  return std::clamp<long>(i, 0, static_cast<long>(t_.size()) - 2);
}

namespace {

// Cubic Hermite with exact endpoint derivatives.
double hermite(double t, double t0, double t1, double y0, double y1, double d0, double d1) {
  const double h = t1 - t0;
  const double s = (t - t0) / h;
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * h * d0 + (-2 * s3 + 3 * s2) * y1 +
         (s3 - s2) * h * d1;
}

}  // namespace

double Profile::f(double t) const {
  check_range(t);
  const long i = segment(t);
  return hermite(t, t_[i], t_[i + 1], f_[i], f_[i + 1], fp_[i], fp_[i + 1]);
}

double Profile::fp(double t) const {
  check_range(t);
  const long i = segment(t);
  return hermite(t, t_[i], t_[i + 1], fp_[i], fp_[i + 1], fpp_[i], fpp_[i + 1]);
}

double Profile::fpp(double t) const {
  const ProfileSample s = at(t);
  return s.fpp;
}

ProfileSample Profile::at(double t) const {
  check_range(t);
  const long i = segment(t);
  ProfileSample s;
  s.t = t;
  s.f = hermite(t, t_[i], t_[i + 1], f_[i], f_[i + 1], fp_[i], fp_[i + 1]);
  s.fp = hermite(t, t_[i], t_[i + 1], fp_[i], fp_[i + 1], fpp_[i], fpp_[i + 1]);
  s.fpp = profile_rhs(s.f, s.fp, params_.n);
  return s;
}

double Profile::t_of_slope(double s) const {
  if (s < fp_.front() || s > fp_.back())
    throw OutOfRange("t_of_slope: slope " + std::to_string(s) + " outside sampled range");
  auto it = std::lower_bound(fp_.begin(), fp_.end(), s);
  long i = std::clamp<long>(std::distance(fp_.begin(), it) - 1, 0, static_cast<long>(fp_.size()) - 2);
  double lo = t_[i], hi = t_[i + 1];
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (fp(mid) < s)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

ProfileCurvatures profile_curvatures(const Profile& p, double t) {
  const ProfileSample s = p.at(t);
  const double q = 1.0 - s.fp * s.fp;
  ProfileCurvatures k;
  k.kappa_normal = s.fpp / std::pow(q, 1.5);
  k.kappa_tangential = 1.0 / (s.f * std::sqrt(q));
  k.gauss = k.kappa_normal * std::pow(k.kappa_tangential, p.params().n - 1);
  return k;
}

JetPoint embed_jet(const Profile& p, const Vec& x) {
  const int n = p.params().n;
  if (x.size() != n) throw InvalidParams("embed_jet: point dimension mismatch");
  const ProfileSample s = p.at(x[0]);

  JetPoint jet;
  const double xbar2 = x.tail(n - 1).squaredNorm();
  const double u = std::sqrt(s.f * s.f + xbar2);
  jet.u = u;
  jet.du.resize(n);
  jet.du[0] = s.f * s.fp / u;
  for (int i = 1; i < n; ++i) jet.du[i] = x[i] / u;
  jet.d2u.resize(n, n);
  const double u3 = u * u * u;
  jet.d2u(0, 0) = (s.f * s.fpp + s.fp * s.fp) / u - s.f * s.f * s.fp * s.fp / u3;
  for (int j = 1; j < n; ++j) {
    jet.d2u(0, j) = jet.d2u(j, 0) = -s.f * s.fp * x[j] / u3;
    for (int i = 1; i <= j; ++i) {
      jet.d2u(i, j) = jet.d2u(j, i) = ((i == j ? 1.0 : 0.0) - x[i] * x[j] / (u * u)) / u;
    }
  }
  return jet;
}

double tau_offset(double c, int n) {
  if (c == 0) throw InvalidParams("tau_offset: undefined for c = 0");
  if (c > 1) throw InvalidParams("tau_offset: requires c <= 1");
  if (n < 2) throw InvalidParams("tau_offset: dimension must be >= 2");
  if (c < 0) {
    const double a = std::pow(1.0 - c, 1.0 / n);
    return std::sqrt(a * a - 1.0);
  }
  if (c == 1) return std::sqrt(std::pow(2.0, 2.0 / n) - 1.0);
  // 0 < c < 1: f_c(0) = (1-c)^{1/n} < 1 and f increases for t > 0; bisect f(tau) = 1.
  const Profile p = integrate_profile(ProfileParams::make(c, n), 8.0);
  double lo = 0, hi = p.t_max();
  if (p.f(hi) < 1)
    throw SearchFailed("tau_offset: profile did not reach height 1 in sampled range");
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (p.f(mid) < 1)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace minkhyp
