#include "pcosc/classical.hpp"

#include <cmath>

namespace pcosc {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_frame(const PhaseSamplePoint& p, Frame frame, const char* what) {
  if (p.frame != frame) {
    throw InputError(std::string(what) + ": sample is in the wrong frame");
  }
}

}  // namespace

void validate(const OscParams& params) {
  if (!(params.omega > 0.0)) {
    throw InputError("OscParams: omega must be positive");
  }
}

Mat2d MetricConstants::g() {
  Mat2d m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Mat2d MetricConstants::eps() {
  Mat2d m;
  m << 0.0, 1.0, -1.0, 0.0;
  return m;
}

Mat2d MetricConstants::sigma1() {
  Mat2d m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

PhaseSamplePoint to_hyperbolic(const PhaseSamplePoint& p) {
  require_frame(p, Frame::Cartesian, "to_hyperbolic");
  const double s = 1.0 / std::sqrt(2.0);
  PhaseSamplePoint out;
  out.frame = Frame::Hyperbolic;
  out.q << s * (p.q(0) + p.q(1)), s * (p.q(0) - p.q(1));
  out.v << s * (p.v(0) + p.v(1)), s * (p.v(0) - p.v(1));
  return out;
}

PhaseSamplePoint from_hyperbolic(const PhaseSamplePoint& p) {
  require_frame(p, Frame::Hyperbolic, "from_hyperbolic");
  const double s = 1.0 / std::sqrt(2.0);
  PhaseSamplePoint out;
  out.frame = Frame::Cartesian;
  out.q << s * (p.q(0) + p.q(1)), s * (p.q(0) - p.q(1));
  out.v << s * (p.v(0) + p.v(1)), s * (p.v(0) - p.v(1));
  return out;
}

Complex eval_lagrangian(LagrangianForm which, const PhaseSamplePoint& p,
                        const OscParams& params) {
  validate(params);
  const double w2 = params.omega * params.omega;
  switch (which) {
    case LagrangianForm::Direct: {
      require_frame(p, Frame::Cartesian, "eval_lagrangian(direct)");
      const Complex kin = p.v(0) * p.v(0) + p.v(1) * p.v(1);
      const Complex pot = p.q(0) * p.q(0) + p.q(1) * p.q(1);
      return 0.5 * kin - 0.5 * w2 * pot;
    }
    case LagrangianForm::Indirect: {
      if (p.frame == Frame::Cartesian) {
        return p.v(0) * p.v(1) - w2 * p.q(0) * p.q(1);
      }
      const Complex kin = p.v(0) * p.v(0) - p.v(1) * p.v(1);
      const Complex pot = p.q(0) * p.q(0) - p.q(1) * p.q(1);
      return 0.5 * kin - 0.5 * w2 * pot;
    }
    case LagrangianForm::Plus:
    case LagrangianForm::Minus: {
      require_frame(p, Frame::Hyperbolic, "eval_lagrangian(chiral)");
      const double sign = which == LagrangianForm::Plus ? 1.0 : -1.0;
      // eps_ij x_i v_j = x1 v2 - x2 v1; g_ij x_i x_j = x1^2 - x2^2.
      const Complex rot = p.q(0) * p.v(1) - p.q(1) * p.v(0);
      const Complex pot = p.q(0) * p.q(0) - p.q(1) * p.q(1);
      return sign * kI * params.omega * rot - w2 * pot;
    }
  }
  throw InputError("eval_lagrangian: unknown form");
}

PhaseSamplePoint apply_pt(const PhaseSamplePoint& p) {
  PhaseSamplePoint out = p;
  if (p.frame == Frame::Hyperbolic) {
    out.q << p.q(0), -p.q(1);
    out.v << -p.v(0), p.v(1);
  } else {
    out.q << p.q(1), p.q(0);
    out.v << -p.v(1), -p.v(0);
  }
  return out;
}

PhaseSamplePoint apply_boost(const PhaseSamplePoint& p, double theta) {
  require_frame(p, Frame::Hyperbolic, "apply_boost");
  Mat2d boost;
  boost << std::cosh(theta), std::sinh(theta), std::sinh(theta),
      std::cosh(theta);
  PhaseSamplePoint out = p;
  out.q = boost * p.q;
  out.v = boost * p.v;
  return out;
}

Complex noether_charge(ChiralMode which, const PhaseSamplePoint& p,
                       const OscParams& params) {
  validate(params);
  require_frame(p, Frame::Hyperbolic, "noether_charge");
  const double sign = which == ChiralMode::Plus ? 1.0 : -1.0;
  // dL/dv_i sigma1_ij x_j with dL/dv_1 = -+i w x2, dL/dv_2 = +-i w x1;
  // the raw charge +-i w (x1^2 - x2^2) is divided by i.
  const Complex raw = sign * kI * params.omega *
                      (p.q(0) * p.q(0) - p.q(1) * p.q(1));
  return raw / kI;
}

Vec2c solder_partner(const PhaseSamplePoint& p, const OscParams& params) {
  validate(params);
  require_frame(p, Frame::Hyperbolic, "solder_partner");
  const double w = params.omega;
  // Stationarity of L(y, x) in y: 4 w^2 g y = 2 i w eps v + 2 w^2 g x,
  // solved in closed form; g and eps are invertible for w > 0.
  const Mat2c g = MetricConstants::g().cast<Complex>();
  const Mat2c eps = MetricConstants::eps().cast<Complex>();
  const Vec2c rhs = 2.0 * kI * w * (eps * p.v) + 2.0 * w * w * (g * p.q);
  return (g * rhs) / (4.0 * w * w);  // g^{-1} = g
}

Complex solder_residual(const PhaseSamplePoint& p, const OscParams& params) {
  validate(params);
  require_frame(p, Frame::Hyperbolic, "solder_residual");
  const double w = params.omega;
  const Vec2c y = solder_partner(p, params);
  const Mat2c g = MetricConstants::g().cast<Complex>();
  const Mat2c eps = MetricConstants::eps().cast<Complex>();
  // L(y, x) = 2 i w eps_ij (y_i v_j - x_i v_j / 2)
  //           - 2 w^2 g_ij (y_i y_j - y_i x_j + x_i x_j / 2).
  const Complex kin =
      2.0 * kI * w *
      (y.transpose() * eps * p.v - 0.5 * p.q.transpose() * eps * p.v).value();
  const Complex pot =
      2.0 * w * w *
      (y.transpose() * g * y - y.transpose() * g * p.q +
       0.5 * p.q.transpose() * g * p.q)
          .value();
  const Complex soldered = kin - pot;
  return soldered - eval_lagrangian(LagrangianForm::Indirect, p, params);
}

Trajectory simulate(const OscParams& params, const PhaseSamplePoint& initial,
                    double duration, int nsteps) {
  validate(params);
  if (!(duration > 0.0)) {
    throw InputError("simulate: duration must be positive");
  }
  if (nsteps < 2) {
    throw InputError("simulate: nsteps must be at least 2");
  }
  const double w = params.omega;
  Trajectory traj;
  traj.frame = initial.frame;
  traj.times.reserve(nsteps);
  traj.states.reserve(nsteps);
  for (int k = 0; k < nsteps; ++k) {
    const double t = duration * k / (nsteps - 1);
    const double c = std::cos(w * t);
    const double s = std::sin(w * t);
    PhaseSamplePoint st;
    st.frame = initial.frame;
    st.q = c * initial.q + (s / w) * initial.v;
    st.v = c * initial.v - (w * s) * initial.q;
    traj.times.push_back(t);
    traj.states.push_back(std::move(st));
  }
  return traj;
}

Trajectory mode_trajectory(ChiralMode which, const OscParams& params,
                           Complex x1_0, Complex x2_0, double duration,
                           int nsteps) {
  validate(params);
  if (!(duration > 0.0)) {
    throw InputError("mode_trajectory: duration must be positive");
  }
  if (nsteps < 2) {
    throw InputError("mode_trajectory: nsteps must be at least 2");
  }
  const double w = params.omega;
  const Complex isgn = which == ChiralMode::Plus ? kI : -kI;
  const double rt2 = std::sqrt(2.0);
  // Reduced pair: X = +-i sqrt(2) x2, P = sqrt(2) w x1; evolve the
  // harmonic (X, P) and map back, so the flow satisfies v1 = -+i w x2 and
  // v2 = -+i w x1 identically.
  const Complex X0 = isgn * rt2 * x2_0;
  const Complex P0 = rt2 * w * x1_0;
  Trajectory traj;
  traj.frame = Frame::Hyperbolic;
  traj.times.reserve(nsteps);
  traj.states.reserve(nsteps);
  for (int k = 0; k < nsteps; ++k) {
    const double t = duration * k / (nsteps - 1);
    const double c = std::cos(w * t);
    const double s = std::sin(w * t);
    const Complex X = c * X0 + (s / w) * P0;
    const Complex P = c * P0 - (w * s) * X0;
    PhaseSamplePoint st;
    st.frame = Frame::Hyperbolic;
    st.q << P / (rt2 * w), X / (isgn * rt2);
    st.v << -w * X / rt2, P / (isgn * rt2);
    traj.times.push_back(t);
    traj.states.push_back(std::move(st));
  }
  return traj;
}

}  // namespace pcosc
