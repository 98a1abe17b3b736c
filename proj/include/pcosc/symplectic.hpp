#pragma once

#include <string>
#include <vector>

#include "pcosc/classical.hpp"
#include "pcosc/types.hpp"

namespace pcosc {

// First-order quadratic Lagrangian L = xi^T A xi' - xi^T V xi with constant
// complex coefficient matrices. V is stored symmetrized.
struct FirstOrderLagrangian {
  MatXc A;
  MatXc V;

  Eigen::Index size() const { return A.rows(); }
};

FirstOrderLagrangian make_mode_lagrangian(ChiralMode which,
                                          const OscParams& params);

// L = p q' as a first-order system in xi = (q, p).
FirstOrderLagrangian make_canonical_pair_lagrangian();

// Affine phase-space function c + grad . z on z = (q_1..q_n, p_1..p_n).
struct AffineFunction {
  VecXc grad;
  Complex constant = 0.0;
};

// Canonical variables plus a list of affine constraints, all required to be
// second class (checked, not assumed).
struct ConstraintSet {
  int n_coords = 0;  // pairs (q_i, p_i); phase-space dimension is 2*n_coords
  std::vector<AffineFunction> constraints;
  std::vector<std::string> labels;  // variable names, size 2*n_coords
};

ConstraintSet make_mode_constraints(ChiralMode which, const OscParams& params);

// Full table of brackets between the variables: B_ij = {xi_i, xi_j}.
// Antisymmetric by construction.
struct BracketTable {
  MatXc B;
  std::vector<std::string> labels;

  Complex bracket(Eigen::Index i, Eigen::Index j) const { return B(i, j); }
};

// Brackets of a first-order Lagrangian from its symplectic two-form
// f = A - A^T, B = f^{-1}. The overall sign is a convention; this one is
// pinned by the calibration tests, which require {x1, x2} = i/(2w) for the
// plus mode with A = [[0, 2iw], [0, 0]].
BracketTable fj_brackets(const FirstOrderLagrangian& lagrangian);

// Dirac brackets from second-class affine constraints:
// {F,G}_D = {F,G} - {F,Phi_a} (Delta^{-1})_ab {Phi_b,G},
// Delta_ab = {Phi_a, Phi_b}, evaluated for all variable pairs.
BracketTable dirac_brackets(const ConstraintSet& cs);

int degrees_of_freedom(const ConstraintSet& cs);

// Reduction of a chiral mode to one canonical degree of freedom:
// X = +-i sqrt(2) x2, P = sqrt(2) w x1, H = P^2/2 + w^2 X^2 / 2.
// Construction verifies {X, P} = 1 against the bracket engine and checks
// that H(X, P) reproduces w^2 (x1^2 - x2^2) on random samples.
struct CanonicalReduction {
  ChiralMode mode = ChiralMode::Plus;
  double omega = 1.0;
  Vec2c x_coeff;  // X = x_coeff . (x1, x2), unconjugated sum
  Vec2c p_coeff;  // P = p_coeff . (x1, x2)

  Complex position(const Vec2c& x12) const {
    return (x_coeff.array() * x12.array()).sum();
  }
  Complex momentum(const Vec2c& x12) const {
    return (p_coeff.array() * x12.array()).sum();
  }
  Complex reduced_hamiltonian(Complex X, Complex P) const {
    return 0.5 * P * P + 0.5 * omega * omega * X * X;
  }
};

CanonicalReduction reduce_mode(ChiralMode which, const OscParams& params);

}  // namespace pcosc
