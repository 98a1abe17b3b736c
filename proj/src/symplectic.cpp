#include "pcosc/symplectic.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/SVD>

namespace pcosc {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kConditionLimit = 1e12;

std::string default_label(Eigen::Index i) {
  return "xi" + std::to_string(i + 1);
}

// Inverse with a singular-value condition estimate; the elimination path
// (partial-pivot LU) only runs once the form is known to be regular.
MatXc checked_inverse(const MatXc& m, const char* what,
                      const std::vector<std::string>& labels) {
  Eigen::JacobiSVD<MatXc> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double smin = sv.size() ? sv(sv.size() - 1) : 0.0;
  if (!(smin > 0.0) || smax / smin > kConditionLimit) {
    std::ostringstream msg;
    msg << what << "; null directions:";
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
      if (smin > 0.0 && sv(k) > smax / kConditionLimit) continue;
      msg << " [";
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const Complex c = svd.matrixV()(i, k);
        if (std::abs(c) < 1e-12) continue;
        const std::string name =
            i < static_cast<Eigen::Index>(labels.size()) ? labels[i]
                                                         : default_label(i);
        msg << " " << name << "*(" << c.real() << (c.imag() < 0 ? "" : "+")
            << c.imag() << "i)";
      }
      msg << " ]";
    }
    throw NumericError(msg.str());
  }
  return Eigen::PartialPivLU<MatXc>(m).inverse();
}

}  // namespace

FirstOrderLagrangian make_mode_lagrangian(ChiralMode which,
                                          const OscParams& params) {
  validate(params);
  const double w = params.omega;
  const Complex sign = which == ChiralMode::Plus ? 1.0 : -1.0;
  FirstOrderLagrangian lagrangian;
  // Modified chiral form (total derivative discarded):
  // L = +-2i w x1 x2' - w^2 (x1^2 - x2^2).
  lagrangian.A = MatXc::Zero(2, 2);
  lagrangian.A(0, 1) = sign * 2.0 * kI * w;
  lagrangian.V = MatXc::Zero(2, 2);
  lagrangian.V(0, 0) = w * w;
  lagrangian.V(1, 1) = -w * w;
  return lagrangian;
}

FirstOrderLagrangian make_canonical_pair_lagrangian() {
  FirstOrderLagrangian lagrangian;
  lagrangian.A = MatXc::Zero(2, 2);
  lagrangian.A(1, 0) = 1.0;  // xi = (q, p), L = p q'
  lagrangian.V = MatXc::Zero(2, 2);
  return lagrangian;
}

ConstraintSet make_mode_constraints(ChiralMode which, const OscParams& params) {
  validate(params);
  const double w = params.omega;
  const Complex sign = which == ChiralMode::Plus ? 1.0 : -1.0;
  ConstraintSet cs;
  cs.n_coords = 2;
  cs.labels = {"x1", "x2", "pi1", "pi2"};
  // Primary constraints of the chiral mode: pi1 - dL/dv1 and pi2 - dL/dv2,
  // with dL/dv1 = -+i w x2 and dL/dv2 = +-i w x1.
  AffineFunction phi1;
  phi1.grad = VecXc::Zero(4);
  phi1.grad(2) = 1.0;
  phi1.grad(1) = sign * kI * w;
  AffineFunction phi2;
  phi2.grad = VecXc::Zero(4);
  phi2.grad(3) = 1.0;
  phi2.grad(0) = -sign * kI * w;
  cs.constraints = {phi1, phi2};
  return cs;
}

BracketTable fj_brackets(const FirstOrderLagrangian& lagrangian) {
  const Eigen::Index n = lagrangian.size();
  if (lagrangian.A.cols() != n || lagrangian.V.rows() != n ||
      lagrangian.V.cols() != n) {
    throw InputError("fj_brackets: coefficient matrices must be square and of equal size");
  }
  BracketTable table;
  table.labels.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i) table.labels.push_back(default_label(i));
  // Symplectic two-form of L = xi^T A xi' - xi^T V xi. The sign convention
  // (f = A - A^T rather than its negative) is pinned by the calibration
  // tests: the plus mode with A(0,1) = 2iw must produce {x1, x2} = i/(2w).
  const MatXc f = lagrangian.A - lagrangian.A.transpose();
  table.B = checked_inverse(f, "degenerate symplectic form", table.labels);
  return table;
}

BracketTable dirac_brackets(const ConstraintSet& cs) {
  if (cs.n_coords <= 0) {
    throw InputError("dirac_brackets: need at least one canonical pair");
  }
  const Eigen::Index n = cs.n_coords;
  const Eigen::Index dim = 2 * n;
  MatXc J = MatXc::Zero(dim, dim);
  J.block(0, n, n, n) = MatXc::Identity(n, n);
  J.block(n, 0, n, n) = -MatXc::Identity(n, n);

  BracketTable table;
  table.labels = cs.labels;
  if (table.labels.empty()) {
    for (Eigen::Index i = 0; i < n; ++i)
      table.labels.push_back("q" + std::to_string(i + 1));
    for (Eigen::Index i = 0; i < n; ++i)
      table.labels.push_back("p" + std::to_string(i + 1));
  }

  if (cs.constraints.empty()) {
    table.B = J;
    return table;
  }

  const Eigen::Index m = static_cast<Eigen::Index>(cs.constraints.size());
  MatXc C(m, dim);
  for (Eigen::Index a = 0; a < m; ++a) {
    if (cs.constraints[a].grad.size() != dim) {
      throw InputError("dirac_brackets: constraint gradient has wrong dimension");
    }
    C.row(a) = cs.constraints[a].grad.transpose();
  }
  const MatXc delta = C * J * C.transpose();
  MatXc delta_inv;
  try {
    delta_inv = checked_inverse(delta, "constraints not second-class", {});
  } catch (const NumericError&) {
    throw NumericError(
        "constraints not second-class: the constraint bracket matrix is singular");
  }
  table.B = J - J * C.transpose() * delta_inv * C * J;
  return table;
}

int degrees_of_freedom(const ConstraintSet& cs) {
  if (cs.n_coords <= 0) {
    throw InputError("degrees_of_freedom: need at least one coordinate");
  }
  if (!cs.constraints.empty()) {
    dirac_brackets(cs);  // validates the second-class property
  }
  const int reduced = 2 * cs.n_coords - static_cast<int>(cs.constraints.size());
  if (reduced % 2 != 0 || reduced < 0) {
    throw InputError(
        "degrees_of_freedom: odd phase-space count; constraint classification invalid");
  }
  return reduced / 2;
}

CanonicalReduction reduce_mode(ChiralMode which, const OscParams& params) {
  validate(params);
  const double w = params.omega;
  const Complex isgn = which == ChiralMode::Plus ? kI : -kI;
  CanonicalReduction red;
  red.mode = which;
  red.omega = w;
  red.x_coeff << 0.0, isgn * std::sqrt(2.0);
  red.p_coeff << std::sqrt(2.0) * w, 0.0;

  // {X, P} = sum_ij xc_i pc_j {xi_i, xi_j} must be 1 under the engine
  // bracket of the same mode.
  const BracketTable table = fj_brackets(make_mode_lagrangian(which, params));
  Complex xp = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      xp += red.x_coeff(i) * red.p_coeff(j) * table.B(i, j);
  if (std::abs(xp - 1.0) > 1e-12) {
    throw NumericError("reduce_mode: reduced pair fails {X,P} = 1");
  }

  // Substituted back, P^2/2 + w^2 X^2/2 must reproduce w^2 (x1^2 - x2^2).
  SampleRng rng(20240711u);
  for (int k = 0; k < 16; ++k) {
    const Vec2c x12 = rng.cvec2();
    const Complex lhs = red.reduced_hamiltonian(red.position(x12), red.momentum(x12));
    const Complex rhs = w * w * (x12(0) * x12(0) - x12(1) * x12(1));
    if (std::abs(lhs - rhs) > 1e-10 * (1.0 + std::abs(rhs))) {
      throw NumericError("reduce_mode: reduced Hamiltonian mismatch");
    }
  }
  return red;
}

}  // namespace pcosc
