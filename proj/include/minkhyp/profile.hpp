#ifndef MINKHYP_PROFILE_HPP
#define MINKHYP_PROFILE_HPP

#include <vector>

#include "minkhyp/types.hpp"

namespace minkhyp {

enum class ProfileNormalization { EvenAtZero, UnitAtZeroIncreasing };

// Parameters of the profile equation f'' = f^{n-1} (1 - f'^2)^{(n+2)/2} with
// conserved constant c = (1 - f'^2)^{-n/2} - f^n <= 1. Initial data is fixed by
// the normalization: f(0) = (1-c)^{1/n}, f'(0) = 0 for c < 1 (even profile);
// f(0) = 1, f'(0) = +sqrt(1 - 2^{-2/n}) for c = 1 (increasing profile).
struct ProfileParams {
  double c = 0;
  int n = 2;
  ProfileNormalization normalization = ProfileNormalization::EvenAtZero;

  static ProfileParams make(double c, int n);
  void validate() const;
  double f0() const;   // initial height a
  double fp0() const;  // initial slope b
};

struct ProfileSample {
  double t, f, fp, fpp;
};

// Conserved quantity (1 - fp^2)^{-n/2} - f^n. Throws DomainError when |fp| >= 1.
double first_integral(double f, double fp, int n);

// Right side of the profile equation.
double profile_rhs(double f, double fp, int n);

// Sampled solution of the profile equation over [-t_max, t_max] (c < 1) or the
// requested span for c = 1. f'' is always recomputed from the equation; f and f'
// are interpolated by cubic Hermite with their exact derivative data.
class Profile {
 public:
  const ProfileParams& params() const { return params_; }
  double c_drift() const { return c_drift_; }
  double t_min() const { return t_.front(); }
  double t_max() const { return t_.back(); }
  long sample_count() const { return static_cast<long>(t_.size()); }
  ProfileSample sample(long i) const { return {t_[i], f_[i], fp_[i], fpp_[i]}; }

  double f(double t) const;
  double fp(double t) const;
  double fpp(double t) const;  // from the equation at interpolated (f, fp)
  ProfileSample at(double t) const;

  // Inverse of the (strictly increasing) slope map: t with fp(t) = s.
  double t_of_slope(double s) const;
  double min_slope() const { return fp_.front(); }
  double max_slope() const { return fp_.back(); }

  friend Profile integrate_profile(const ProfileParams&, double, double);

 private:
  void check_range(double t) const;
  long segment(double t) const;

  ProfileParams params_;
  std::vector<double> t_, f_, fp_, fpp_;
  double c_drift_ = 0;
};

// Adaptive embedded Runge-Kutta 5(4) integration of the profile equation with
// step rejection on first-integral drift. Throws TolUnachievable when the drift
// bound cannot be met, InvalidParams for c > 1 or inconsistent normalization.
Profile integrate_profile(const ProfileParams& params, double t_max, double tol = 1e-10);

struct ProfileCurvatures {
  double kappa_normal;      // curvature of the profile direction
  double kappa_tangential;  // the n-1 rotational directions
  double gauss;             // product kappa_normal * kappa_tangential^{n-1}
};

// Principal curvatures kappa_1 = f'' / (1 - f'^2)^{3/2},
// kappa_2..n = 1 / (f (1 - f'^2)^{1/2}) and their product.
ProfileCurvatures profile_curvatures(const Profile& p, double t);

// Jet of u(x) = sqrt(f(x1)^2 + |x_bar|^2) at x (dimension = params.n).
JetPoint embed_jet(const Profile& p, const Vec& x);

// Height normalizer tau_c: closed form sqrt((1-c)^{2/n} - 1) for c < 0,
// sqrt(2^{2/n} - 1) for c = 1; the root of f_c(tau) = 1 for 0 < c < 1.
// Throws InvalidParams for c = 0 or c > 1.
double tau_offset(double c, int n);

}  // namespace minkhyp

#endif
