#include <doctest.h>

#include <cmath>
#include <string>

#include "pcosc/symplectic.hpp"

using namespace pcosc;

namespace {
constexpr Complex kI{0.0, 1.0};
}

TEST_SUITE("symplectic") {

TEST_CASE("canonical pair calibrates the sign convention") {
  // L = p q': A = [[0, 0], [1, 0]] in coordinates (q, p) gives {q, p} = 1.
  const BracketTable t = fj_brackets(make_canonical_pair_lagrangian());
  CHECK(std::abs(t.bracket(0, 1) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(t.bracket(1, 0) + Complex(1.0)) < 1e-15);
  CHECK(std::abs(t.bracket(0, 0)) < 1e-15);
}

TEST_CASE("chiral kinetic terms give the deformed bracket") {
  for (const double w : {0.5, 1.0, 3.0}) {
    const OscParams par{w};
    const Complex expected = kI / (2.0 * w);
    const BracketTable plus =
        fj_brackets(make_mode_lagrangian(ChiralMode::Plus, par));
    const BracketTable minus =
        fj_brackets(make_mode_lagrangian(ChiralMode::Minus, par));
    CHECK(std::abs(plus.bracket(0, 1) - expected) < 1e-14);
    CHECK(std::abs(minus.bracket(0, 1) + expected) < 1e-14);
    CHECK(std::abs(plus.bracket(0, 1) + plus.bracket(1, 0)) < 1e-15);
  }
}

TEST_CASE("degenerate kinetic matrix is rejected by name") {
  FirstOrderLagrangian lag;
  lag.A = MatXc::Zero(2, 2);  // symmetric A: f = A - A^T = 0
  lag.A(0, 1) = 1.0;
  lag.A(1, 0) = 1.0;
  lag.V = MatXc::Zero(2, 2);
  try {
    fj_brackets(lag);
    FAIL("expected a degeneracy error");
  } catch (const NumericError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("degenerate symplectic form") != std::string::npos);
  }
}

TEST_CASE("odd-dimensional kinetic forms cannot be inverted") {
  FirstOrderLagrangian lag;
  lag.A = MatXc::Zero(3, 3);
  lag.A(0, 1) = 1.0;
  lag.A(1, 2) = 1.0;
  lag.V = MatXc::Zero(3, 3);
  CHECK_THROWS_AS(fj_brackets(lag), NumericError);
}

TEST_CASE("constraint engine reproduces the chiral brackets") {
  for (const double w : {0.5, 1.0, 3.0}) {
    const OscParams par{w};
    for (const ChiralMode mode : {ChiralMode::Plus, ChiralMode::Minus}) {
      const ConstraintSet cs = make_mode_constraints(mode, par);
      CHECK(cs.n_coords == 2);
      CHECK(cs.constraints.size() == 2);
      const BracketTable dirac = dirac_brackets(cs);
      const BracketTable fj = fj_brackets(make_mode_lagrangian(mode, par));
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          CHECK(std::abs(dirac.bracket(i, j) - fj.bracket(i, j)) < 1e-14);
        }
      }
      // Constraints must be strongly eliminated: {xi, Phi_a} = 0 for the
      // position sector is visible as vanishing position-momentum brackets
      // against the constrained combinations.
      const Complex sgn = mode == ChiralMode::Plus ? kI : -kI;
      const Complex x1_p1 = dirac.bracket(0, 2);
      const Complex x1_x2 = dirac.bracket(0, 1);
      CHECK(std::abs(x1_p1 - sgn * (-w) * x1_x2) < 1e-13);
    }
  }
}

TEST_CASE("first-class constraints are rejected by name") {
  ConstraintSet cs;
  cs.n_coords = 2;
  AffineFunction phi1, phi2;
  phi1.grad = VecXc::Zero(4);
  phi1.grad(0) = 1.0;  // x1
  phi2.grad = VecXc::Zero(4);
  phi2.grad(1) = 1.0;  // x2: {x1, x2} = 0, singular constraint matrix
  cs.constraints = {phi1, phi2};
  try {
    dirac_brackets(cs);
    FAIL("expected a second-class failure");
  } catch (const NumericError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("constraints not second-class") != std::string::npos);
  }
}

TEST_CASE("empty constraint set returns the Poisson table") {
  ConstraintSet cs;
  cs.n_coords = 2;
  const BracketTable t = dirac_brackets(cs);
  CHECK(t.B.rows() == 4);
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(t.bracket(i, i + 2) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(t.bracket(i + 2, i) + Complex(1.0)) < 1e-15);
  }
  CHECK(std::abs(t.bracket(0, 1)) < 1e-15);
  CHECK(std::abs(t.bracket(2, 3)) < 1e-15);
}

TEST_CASE("bracket tables are antisymmetric for generic regular input") {
  SampleRng rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    FirstOrderLagrangian lag;
    lag.A = rng.cmat(6);
    lag.V = MatXc::Zero(6, 6);
    const BracketTable t = fj_brackets(lag);
    CHECK(max_abs(MatXc(t.B + t.B.transpose())) < 1e-11);
    CHECK(max_abs(MatXc(t.B * (lag.A - lag.A.transpose()) -
                        MatXc::Identity(6, 6))) < 1e-11);
  }
}

TEST_CASE("degrees of freedom counting") {
  const OscParams par{1.0};
  CHECK(degrees_of_freedom(make_mode_constraints(ChiralMode::Plus, par)) == 1);
  CHECK(degrees_of_freedom(make_mode_constraints(ChiralMode::Minus, par)) == 1);
  ConstraintSet free2;
  free2.n_coords = 2;
  CHECK(degrees_of_freedom(free2) == 2);
}

TEST_CASE("mode reduction produces a unit bracket and the right energy") {
  for (const double w : {0.5, 2.0}) {
    const OscParams par{w};
    for (const ChiralMode mode : {ChiralMode::Plus, ChiralMode::Minus}) {
      const CanonicalReduction red = reduce_mode(mode, par);
      CHECK(red.omega == doctest::Approx(w));
      const BracketTable t = fj_brackets(make_mode_lagrangian(mode, par));
      Complex xp = 0.0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          xp += red.x_coeff(i) * red.p_coeff(j) * t.B(i, j);
      CHECK(std::abs(xp - Complex(1.0)) < 1e-14);

      SampleRng rng(99);
      for (int k = 0; k < 20; ++k) {
        const Vec2c x12 = rng.cvec2();
        const Complex X = red.position(x12);
        const Complex P = red.momentum(x12);
        const Complex h = red.reduced_hamiltonian(X, P);
        const Complex expected =
            w * w * (x12(0) * x12(0) - x12(1) * x12(1));
        CHECK(std::abs(h - expected) < 1e-12);
        CHECK(std::abs(0.5 * P * P + 0.5 * w * w * X * X - h) < 1e-12);
      }
    }
  }
}

TEST_CASE("reduction coordinates are imaginary-real paired") {
  const OscParams par{1.0};
  const CanonicalReduction plus = reduce_mode(ChiralMode::Plus, par);
  Vec2c x12;
  x12 << 1.0, 1.0;
  // X = +- i sqrt2 x2 is imaginary for real x2; P = sqrt2 w x1 stays real.
  CHECK(std::abs(plus.position(x12).real()) < 1e-15);
  CHECK(std::abs(plus.momentum(x12).imag()) < 1e-15);
}

}  // TEST_SUITE
