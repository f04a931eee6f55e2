#include <doctest.h>

#include <cmath>

#include "minkhyp/core_geometry.hpp"
#include "minkhyp/profile.hpp"

using namespace minkhyp;

TEST_CASE("first integral closed-form values") {
  CHECK(first_integral(1.0, 0.0, 2) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(first_integral(1.0, std::sqrt(0.5), 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(first_integral(2.0, 0.0, 2) == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK_THROWS_AS(first_integral(1.0, 1.0, 2), DomainError);
  CHECK_THROWS_AS(first_integral(1.0, -1.2, 2), DomainError);
}

TEST_CASE("normalization fixes initial data") {
  const ProfileParams p0 = ProfileParams::make(-3.0, 2);
  CHECK(p0.f0() == doctest::Approx(2.0));
  CHECK(p0.fp0() == 0.0);
  const ProfileParams p1 = ProfileParams::make(1.0, 2);
  CHECK(p1.f0() == 1.0);
  CHECK(p1.fp0() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(ProfileParams::make(1.5, 2), InvalidParams);
  // Even normalization with c > 1 is rejected at validation.
  ProfileParams bad;
  bad.c = 1.2;
  bad.n = 2;
  bad.normalization = ProfileNormalization::EvenAtZero;
  CHECK_THROWS_AS(bad.validate(), InvalidParams);
}

TEST_CASE("c = 0 recovers the hyperboloid profile") {
  for (int n : {2, 3, 4}) {
    const Profile p = integrate_profile(ProfileParams::make(0.0, n), 10.0);
    double worst = 0;
    for (long i = 0; i < p.sample_count(); ++i) {
      const ProfileSample s = p.sample(i);
      worst = std::max(worst, std::abs(s.f - std::sqrt(1.0 + s.t * s.t)));
    }
    CHECK(worst < 1e-9);
    CHECK(p.c_drift() < 1e-9);
  }
}

TEST_CASE("sampled profiles keep the invariants of the family") {
  for (double c : {-10.0, -3.0, -1.0, -0.5, 0.0, 0.3, 0.7, 0.9, 1.0}) {
    for (int n : {2, 3, 4}) {
      const Profile p = integrate_profile(ProfileParams::make(c, n), 50.0, 1e-8);
      double worst_drift = 0;
      for (long i = 0; i < p.sample_count(); ++i) {
        const ProfileSample s = p.sample(i);
        CHECK(s.f > 0);
        CHECK(std::abs(s.fp) < 1);
        CHECK(s.fpp > 0);
        worst_drift = std::max(worst_drift, std::abs(first_integral(s.f, s.fp, n) - c));
      }
      CHECK(worst_drift < 1e-8);
      // slope -> 1 and f^2 (1 - fp^2) -> 1 on the increasing side
      const ProfileSample tail = p.at(50.0);
      CHECK(std::abs(tail.f * tail.f * (1 - tail.fp * tail.fp) - 1.0) < 1e-3);
      if (c < 1) {  // evenness
        for (double t : {0.5, 3.0, 17.0, 44.0})
          CHECK(std::abs(p.f(t) - p.f(-t)) < 1e-10 * (1 + p.f(t)));
      } else {  // decaying end
        CHECK(p.f(-50.0) < 1e-3);
        CHECK(p.fp(-50.0) < 1e-3);
      }
    }
  }
}

TEST_CASE("profile curvature identities") {
  const Profile p0 = integrate_profile(ProfileParams::make(0.0, 2), 10.0);
  const ProfileCurvatures k0 = profile_curvatures(p0, 0.0);
  CHECK(k0.kappa_normal == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(k0.kappa_tangential == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(k0.gauss == doctest::Approx(1.0).epsilon(1e-10));

  const Profile p1 = integrate_profile(ProfileParams::make(1.0, 2), 10.0);
  const ProfileCurvatures k1 = profile_curvatures(p1, 0.0);
  CHECK(k1.kappa_tangential == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(k1.kappa_normal == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));

  // unbounded curvature at the decaying end
  const ProfileCurvatures kfar = profile_curvatures(p1, -8.0);
  CHECK(kfar.kappa_tangential > 1e3);
  CHECK(kfar.kappa_normal < 1e-3);

  // K = 1 across a sweep
  for (double c : {-10.0, -3.0, -1.0, 0.0, 0.5, 0.9, 1.0}) {
    const Profile p = integrate_profile(ProfileParams::make(c, 2), 10.0);
    for (double t = -9.5; t <= 9.5; t += 0.7)
      CHECK(profile_curvatures(p, t).gauss == doctest::Approx(1.0).epsilon(1e-7));
  }
  CHECK_THROWS_AS(profile_curvatures(p0, 11.0), OutOfRange);
}

TEST_CASE("embedded jets") {
  const Profile p0 = integrate_profile(ProfileParams::make(0.0, 2), 10.0);
  Vec x(2);
  x << 0.0, 3.0;
  const JetPoint j = embed_jet(p0, x);
  CHECK(j.u == doctest::Approx(std::sqrt(10.0)).epsilon(1e-12));
  CHECK(j.du[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(j.du[1] == doctest::Approx(3.0 / std::sqrt(10.0)).epsilon(1e-12));

  const Profile pm3 = integrate_profile(ProfileParams::make(-3.0, 2), 10.0);
  Vec origin = Vec::Zero(2);
  const JetPoint j0 = embed_jet(pm3, origin);
  CHECK(j0.u == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(j0.du.norm() == doctest::Approx(0.0).epsilon(1e-12));
  // u(x1, 0) = f(x1) along the axis, so u_11 = f''(0) = f(0) (1 - 0)^2 = 2,
  // and u_22 = 1/u = 1/2.
  CHECK(j0.d2u(0, 0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(j0.d2u(1, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(j0.d2u(0, 1) == doctest::Approx(0.0).epsilon(1e-12));

  // cross-module consistency: embedded jets have Gauss curvature one
  const Profile p1 = integrate_profile(ProfileParams::make(1.0, 2), 10.0);
  Vec x55(2);
  x55 << 5.0, 5.0;
  CHECK(shape_at(embed_jet(p1, x55)).K == doctest::Approx(1.0).epsilon(1e-7));

  Vec x11(2);
  x11 << 1.0, 1.0;
  CHECK(shape_at(embed_jet(pm3, x11)).K == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("tau offsets") {
  CHECK(tau_offset(1.0, 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tau_offset(-3.0, 2) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(tau_offset(0.0, 2), InvalidParams);
  CHECK_THROWS_AS(tau_offset(1.5, 2), InvalidParams);
  // 0 < c < 1: defining property f_c(tau) = 1
  const double tau = tau_offset(0.5, 2);
  const Profile p = integrate_profile(ProfileParams::make(0.5, 2), 8.0);
  CHECK(p.f(tau) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(tau > 0);
}
