#include <doctest.h>

#include <cmath>
#include <vector>

#include "pcosc/fock.hpp"

using namespace pcosc;

namespace {
constexpr Complex kI{0.0, 1.0};
}

TEST_SUITE("fock") {

TEST_CASE("basis indexing is row-major in the first mode") {
  const ModeBasis basis{3};
  CHECK(basis.size() == 9);
  CHECK(basis.index(0, 0) == 0);
  CHECK(basis.index(0, 2) == 2);
  CHECK(basis.index(1, 0) == 3);
  CHECK(basis.index(2, 2) == 8);
  const auto [n1, n2] = basis.occupations(5);
  CHECK(n1 == 1);
  CHECK(n2 == 2);
}

TEST_CASE("single-mode lowering matrix at small dimension") {
  const ModeBasis basis{2};
  const OperatorMatrix a1 = mode_lowering(basis, 0);
  const OperatorMatrix a2 = mode_lowering(basis, 1);
  MatXc e1 = MatXc::Zero(4, 4);
  e1(0, 2) = 1.0;
  e1(1, 3) = 1.0;
  MatXc e2 = MatXc::Zero(4, 4);
  e2(0, 1) = 1.0;
  e2(2, 3) = 1.0;
  CHECK(max_abs(a1.m - e1) == 0.0);
  CHECK(max_abs(a2.m - e2) == 0.0);
  CHECK_THROWS_AS(mode_lowering(basis, 2), InputError);
}

TEST_CASE("number operator is exact under truncation") {
  const ModeBasis basis{8};
  const OperatorMatrix a = mode_lowering(basis, 0);
  const OperatorMatrix n = a.adjoint() * a;
  for (int i = 0; i < basis.size(); ++i) {
    const auto [n1, n2] = basis.occupations(i);
    CHECK(std::abs(n.m(i, i) - Complex(n1)) < 1e-13);
  }
}

TEST_CASE("quadratures are canonically paired away from the edge") {
  const ModeBasis basis{10};
  const double w = 1.3;
  const QuadraturePair q1 = quadratures(basis, 0, w);
  const QuadraturePair q2 = quadratures(basis, 1, w);
  const InteriorProjector proj = interior(basis, 1);
  const OperatorMatrix id = OperatorMatrix::identity(basis);
  CHECK(interior_residual(commutator(q1.x, q1.p) - kI * id, proj) < 1e-13);
  CHECK(interior_residual(commutator(q2.x, q2.p) - kI * id, proj) < 1e-13);
  CHECK(max_abs(commutator(q1.x, q2.p).m) < 1e-14);
  CHECK(max_abs(commutator(q1.x, q2.x).m) < 1e-14);
  // hermiticity of the quadratures themselves
  CHECK(max_abs(q1.x.adjoint().m - q1.x.m) < 1e-15);
  CHECK(max_abs(q1.p.adjoint().m - q1.p.m) < 1e-15);
}

TEST_CASE("pseudo-chiral quadratures pair under ordinary conjugation") {
  const ModeBasis basis{12};
  const PseudoChiralQuadratures pm = build_pm(basis, 0.7);
  CHECK(max_abs(pm.x_p.adjoint().m - pm.x_m.m) == 0.0);
  CHECK(max_abs(pm.p_p.adjoint().m - pm.p_m.m) == 0.0);
  const InteriorProjector proj = interior(basis, 2);
  const OperatorMatrix id = OperatorMatrix::identity(basis);
  CHECK(interior_residual(commutator(pm.x_p, pm.p_p) - kI * id, proj) < 1e-12);
  CHECK(interior_residual(commutator(pm.x_m, pm.p_m) - kI * id, proj) < 1e-12);
  CHECK(interior_residual(commutator(pm.x_p, pm.x_m), proj) < 1e-12);
  CHECK(interior_residual(commutator(pm.p_p, pm.p_m), proj) < 1e-12);
}

TEST_CASE("pseudo-mode ladders have mode-mixing closed forms") {
  const ModeBasis basis{9};
  const double w = 2.2;
  const LadderSet set = build_ab(basis, w, Representation::R1);
  const OperatorMatrix a1 = mode_lowering(basis, 0);
  const OperatorMatrix a2 = mode_lowering(basis, 1);
  const Complex s = 1.0 / std::sqrt(2.0);
  CHECK(max_abs(set.a.m - (s * (a1 - a2.adjoint())).m) < 1e-14);
  CHECK(max_abs(set.a_tilde.m - (s * (a1.adjoint() + a2)).m) < 1e-14);
  CHECK(max_abs(set.b.m - (s * (a1 + a2.adjoint())).m) < 1e-14);
  CHECK(max_abs(set.b_tilde.m - (s * (a1.adjoint() - a2)).m) < 1e-14);
  // transposition swaps the families: a^T = b~ and b^T = a~
  CHECK(max_abs(set.a.m.transpose() - set.b_tilde.m) < 1e-14);
  CHECK(max_abs(set.b.m.transpose() - set.a_tilde.m) < 1e-14);
}

TEST_CASE("diagonal-representation ladders act on occupation labels") {
  const ModeBasis basis{5};
  const LadderSet set = build_ab(basis, 1.0, Representation::R2);
  // a removes one quantum of the first label: <n1-1,n2| a |n1,n2> = sqrt(n1)
  CHECK(std::abs(set.a.m(basis.index(1, 3), basis.index(2, 3)) -
                 std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(set.b.m(basis.index(2, 1), basis.index(2, 2)) -
                 std::sqrt(2.0)) < 1e-15);
  CHECK(max_abs(set.a_tilde.m - set.a.m.transpose()) == 0.0);
  CHECK(max_abs(set.b_tilde.m - set.b.m.transpose()) == 0.0);
}

TEST_CASE("pseudo-mode algebra closes on the interior in both representations") {
  const ModeBasis basis{12};
  const InteriorProjector proj = interior(basis, 2);
  const OperatorMatrix id = OperatorMatrix::identity(basis);
  for (const Representation rep : {Representation::R1, Representation::R2}) {
    const LadderSet set = build_ab(basis, 1.0, rep);
    CHECK(interior_residual(commutator(set.a, set.a_tilde) - id, proj) < 1e-10);
    CHECK(interior_residual(commutator(set.b, set.b_tilde) - id, proj) < 1e-10);
    CHECK(interior_residual(commutator(set.a, set.b), proj) < 1e-10);
    CHECK(interior_residual(commutator(set.a, set.b_tilde), proj) < 1e-10);
    CHECK(interior_residual(commutator(set.a_tilde, set.b_tilde), proj) < 1e-10);
  }
}

TEST_CASE("hamiltonians split exactly and pair under conjugation") {
  const ModeBasis basis{12};
  for (const double w : {0.5, 1.0, 3.0}) {
    const HamiltonianSet h =
        build_hamiltonians(basis, w, Representation::R1, false);
    CHECK(max_abs((h.H_I - (h.H_p + h.H_m)).m) < 1e-13);
    CHECK(max_abs(h.H_p.adjoint().m - h.H_m.m) < 1e-13);
  }
}

TEST_CASE("number operators assemble the hamiltonians on the interior") {
  const ModeBasis basis{12};
  const double w = 1.0;
  const InteriorProjector proj = interior(basis, 2);
  const OperatorMatrix id = OperatorMatrix::identity(basis);
  for (const Representation rep : {Representation::R1, Representation::R2}) {
    const HamiltonianSet h = build_hamiltonians(basis, w, rep, false);
    CHECK(interior_residual(h.H_p - (Complex(w) * h.N_p + Complex(0.5 * w) * id),
                            proj) < 1e-10);
    CHECK(interior_residual(h.H_m - (Complex(w) * h.N_m + Complex(0.5 * w) * id),
                            proj) < 1e-10);
  }
}

TEST_CASE("diagonal representation spectra are the oscillator ladder") {
  const ModeBasis basis{6};
  const double w = 2.0;
  const HamiltonianSet h =
      build_hamiltonians(basis, w, Representation::R2, false);
  const std::vector<Complex> evals = spectrum(h.H_p);
  std::vector<double> expected;
  for (int n = 0; n < 6; ++n)
    for (int k = 0; k < 6; ++k) expected.push_back(w * (n + 0.5));
  std::sort(expected.begin(), expected.end());
  REQUIRE(evals.size() == expected.size());
  for (std::size_t i = 0; i < evals.size(); ++i) {
    CHECK(std::abs(evals[i] - expected[i]) < 1e-10);
  }
}

TEST_CASE("quadrature-representation indirect hamiltonian is a difference ladder") {
  // Truthful truncation behavior: H_I is diagonal with entries
  // E(n1) - E(n2), E(n) = w (n + 1/2) except E(D-1) = w (D-1)/2 at the edge.
  const ModeBasis basis{12};
  const double w = 1.0;
  const HamiltonianSet h =
      build_hamiltonians(basis, w, Representation::R1, false);
  MatXc offdiag = h.H_I.m;
  offdiag.diagonal().setZero();
  CHECK(max_abs(offdiag) < 1e-13);
  auto level = [&](int n) {
    return n == basis.dim - 1 ? w * n / 2.0 : w * (n + 0.5);
  };
  for (int i = 0; i < basis.size(); ++i) {
    const auto [n1, n2] = basis.occupations(i);
    CHECK(std::abs(h.H_I.m(i, i) - Complex(level(n1) - level(n2))) < 1e-12);
  }
  // the spread of the exact difference ladder at this size
  const std::vector<Complex> evals = spectrum(h.H_I);
  CHECK(std::abs(evals.front() - Complex(-(basis.dim - 2.0))) < 1e-10);
  CHECK(std::abs(evals.back() - Complex(basis.dim - 2.0)) < 1e-10);
}

TEST_CASE("zero-point subtraction shifts all three hamiltonians") {
  const ModeBasis basis{8};
  const double w = 1.5;
  const OperatorMatrix id = OperatorMatrix::identity(basis);
  for (const Representation rep : {Representation::R1, Representation::R2}) {
    const HamiltonianSet plain = build_hamiltonians(basis, w, rep, false);
    const HamiltonianSet sub = build_hamiltonians(basis, w, rep, true);
    CHECK(max_abs((sub.H_p - (plain.H_p - Complex(0.5 * w) * id)).m) < 1e-15);
    CHECK(max_abs((sub.H_m - (plain.H_m - Complex(0.5 * w) * id)).m) < 1e-15);
    CHECK(max_abs((sub.H_I - (plain.H_I - Complex(w) * id)).m) < 1e-15);
    CHECK(max_abs((sub.N_p - plain.N_p).m) == 0.0);
  }
}

TEST_CASE("interior projector rank and commutants") {
  const ModeBasis basis{12};
  const InteriorProjector proj = interior(basis, 2);
  CHECK(proj.rank() == 100);
  const OperatorMatrix p = proj.matrix();
  CHECK(max_abs((p * p - p).m) == 0.0);
  const OperatorMatrix a1 = mode_lowering(basis, 0);
  const OperatorMatrix n1 = a1.adjoint() * a1;
  CHECK(max_abs(commutator(p, n1).m) < 1e-13);
  CHECK_THROWS_AS(interior(basis, 12), InputError);
  CHECK_THROWS_AS(interior(basis, -1), InputError);
}

TEST_CASE("interior residual measures only the projected block") {
  const ModeBasis basis{4};
  const InteriorProjector proj = interior(basis, 1);
  OperatorMatrix edge_noise = OperatorMatrix::zero(basis);
  edge_noise.m(basis.index(3, 3), basis.index(3, 3)) = 7.0;  // outside
  CHECK(interior_residual(edge_noise, proj) == 0.0);
  OperatorMatrix inside = OperatorMatrix::zero(basis);
  inside.m(basis.index(1, 1), basis.index(2, 2)) = 3.0;
  CHECK(interior_residual(inside, proj) == 3.0);
}

TEST_CASE("compress keeps interior labels in order") {
  const ModeBasis basis{3};
  const InteriorProjector proj = interior(basis, 1);
  OperatorMatrix a = OperatorMatrix::zero(basis);
  for (int i = 0; i < basis.size(); ++i) a.m(i, i) = Complex(i);
  const MatXc small = compress(a, proj);
  REQUIRE(small.rows() == 4);
  // interior labels of D=3, margin 1: (0,0), (0,1), (1,0), (1,1)
  CHECK(small(0, 0) == Complex(0.0));
  CHECK(small(1, 1) == Complex(1.0));
  CHECK(small(2, 2) == Complex(3.0));
  CHECK(small(3, 3) == Complex(4.0));
}

TEST_CASE("spectrum sorts by real part then imaginary part") {
  const ModeBasis basis{2};
  OperatorMatrix a = OperatorMatrix::zero(basis);
  a.m(0, 0) = Complex(1.0, 1.0);
  a.m(1, 1) = Complex(1.0, -1.0);
  a.m(2, 2) = Complex(-2.0, 0.0);
  a.m(3, 3) = Complex(0.5, 0.0);
  const std::vector<Complex> evals = spectrum(a);
  CHECK(std::abs(evals[0] - Complex(-2.0, 0.0)) < 1e-14);
  CHECK(std::abs(evals[1] - Complex(0.5, 0.0)) < 1e-14);
  CHECK(std::abs(evals[2] - Complex(1.0, -1.0)) < 1e-14);
  CHECK(std::abs(evals[3] - Complex(1.0, 1.0)) < 1e-14);
}

TEST_CASE("operator arithmetic requires matching bases") {
  const ModeBasis b1{3};
  const ModeBasis b2{4};
  const OperatorMatrix x = OperatorMatrix::identity(b1);
  const OperatorMatrix y = OperatorMatrix::identity(b2);
  CHECK_THROWS_AS(x + y, InputError);
  CHECK_THROWS_AS(x * y, InputError);
}

}  // TEST_SUITE
