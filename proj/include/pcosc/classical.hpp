#pragma once

#include <vector>

#include "pcosc/types.hpp"

namespace pcosc {

struct OscParams {
  double omega = 1.0;  // angular frequency, > 0
};

void validate(const OscParams& params);

enum class Frame { Cartesian, Hyperbolic };
enum class LagrangianForm { Direct, Indirect, Plus, Minus };
enum class ChiralMode { Plus, Minus };

// Constant tensors of the planar model in hyperbolic coordinates.
// g*g = I, eps^T = -eps, sigma1*sigma1 = I.
struct MetricConstants {
  static Mat2d g();       // diag(1, -1)
  static Mat2d eps();     // antisymmetric, eps(0,1) = +1
  static Mat2d sigma1();  // off-diagonal ones
};

// One phase-space sample: positions q and velocities v, complex-valued.
// The frame tag fixes the interpretation: (x, y) or (x1, x2).
struct PhaseSamplePoint {
  Frame frame = Frame::Cartesian;
  Vec2c q = Vec2c::Zero();
  Vec2c v = Vec2c::Zero();
};

struct Trajectory {
  Frame frame = Frame::Cartesian;
  std::vector<double> times;
  std::vector<PhaseSamplePoint> states;
};

// Frame maps: x1 = (x+y)/sqrt(2), x2 = (x-y)/sqrt(2), velocities likewise.
// Round trip is the identity up to round-off.
PhaseSamplePoint to_hyperbolic(const PhaseSamplePoint& p);
PhaseSamplePoint from_hyperbolic(const PhaseSamplePoint& p);

// Evaluates one of the four Lagrangians at a sample.
//   Direct   (cartesian only):  (vx^2 - w^2 x^2)/2 + (vy^2 - w^2 y^2)/2
//   Indirect (either frame):    vx vy - w^2 x y  ==  (v1^2 - v2^2)/2
//                                                   - w^2 (x1^2 - x2^2)/2
//   Plus/Minus (hyperbolic):    +-i w eps_ij x_i v_j - w^2 g_ij x_i x_j
Complex eval_lagrangian(LagrangianForm which, const PhaseSamplePoint& p,
                        const OscParams& params);

// Discrete symmetry. Hyperbolic frame: x_i -> g_ij x_j, v_i -> -g_ij v_j.
// Cartesian frame: x <-> y with velocity sign flip. Involution; leaves the
// indirect and chiral Lagrangians invariant.
PhaseSamplePoint apply_pt(const PhaseSamplePoint& p);

// Finite hyperbolic rotation exp(theta*sigma1) applied to positions and
// velocities. Preserves g and eps, hence all chiral-form Lagrangians.
PhaseSamplePoint apply_boost(const PhaseSamplePoint& p, double theta);

// Conserved charge of the chiral modes under the sigma1 rotation,
// normalized so that C_pm = +-w (x1^2 - x2^2). The raw charge carries an
// overall factor i which is divided out (see noether tests).
Complex noether_charge(ChiralMode which, const PhaseSamplePoint& p,
                       const OscParams& params);

// Stationary value of the auxiliary variable in the soldered two-field
// Lagrangian: solve dL(y, x)/dy = 0 for y at the given sample.
Vec2c solder_partner(const PhaseSamplePoint& p, const OscParams& params);

// L(y*, x) minus the indirect Lagrangian at the same sample; identically
// zero, so the return value is a pure round-off residual.
Complex solder_residual(const PhaseSamplePoint& p, const OscParams& params);

// Closed-form propagation of q'' = -w^2 q per coordinate (identical
// dynamics in both frames), sampled on a uniform grid of nsteps points
// covering [0, duration]. No integrator drift: each state is exact.
Trajectory simulate(const OscParams& params, const PhaseSamplePoint& initial,
                    double duration, int nsteps);

// Constrained flow of a chiral mode from initial positions (x1, x2); the
// velocities are fixed by the first-order equations of motion
// v1 = -+i w x2, v2 = -+i w x1. Implemented through the reduced canonical
// oscillator (X, P) = (+-i sqrt(2) x2, sqrt(2) w x1) and mapped back.
Trajectory mode_trajectory(ChiralMode which, const OscParams& params,
                           Complex x1_0, Complex x2_0, double duration,
                           int nsteps);

}  // namespace pcosc
