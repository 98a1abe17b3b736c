// Acceptance gate: one line per criterion, exit 0 only if all pass.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pcosc/classical.hpp"
#include "pcosc/fock.hpp"
#include "pcosc/pseudoherm.hpp"
#include "pcosc/su11.hpp"
#include "pcosc/symplectic.hpp"

using namespace pcosc;

namespace {

constexpr Complex kI{0.0, 1.0};
int failures = 0;

void report(int number, const std::string& label, double residual,
            double tol, bool pass) {
  std::printf("%s criterion %d: %s (residual %.3g, tolerance %.3g)\n",
              pass ? "PASS" : "FAIL", number, label.c_str(), residual, tol);
  if (!pass) ++failures;
}

void report_leq(int number, const std::string& label, double residual,
                double tol) {
  report(number, label, residual, tol, residual <= tol);
}

double criterion1() {
  double r = 0.0;
  for (const double w : {0.5, 1.0, 3.0}) {
    const OscParams par{w};
    const Complex expected = kI / (2.0 * w);
    for (const ChiralMode mode : {ChiralMode::Plus, ChiralMode::Minus}) {
      const Complex sign = mode == ChiralMode::Plus ? 1.0 : -1.0;
      const MatXc fj = fj_brackets(make_mode_lagrangian(mode, par)).B;
      const MatXc dirac =
          dirac_brackets(make_mode_constraints(mode, par)).B.block(0, 0, 2, 2);
      r = std::max(r, std::abs(fj(0, 1) - sign * expected));
      r = std::max(r, std::abs(dirac(0, 1) - sign * expected));
      r = std::max(r, max_abs(MatXc(fj - dirac)));
    }
  }
  return r;
}

double criterion2() {
  const OscParams par{1.0};
  SampleRng rng(42);
  double r = 0.0;
  for (int k = 0; k < 1000; ++k) {
    PhaseSamplePoint h;
    h.frame = Frame::Hyperbolic;
    h.q = rng.cvec2();
    h.v = rng.cvec2();
    r = std::max(r, std::abs(solder_residual(h, par)));
  }
  return r;
}

void criterion3() {
  const OscParams par{1.0};
  SampleRng rng(42);
  double inv = 0.0;
  for (int k = 0; k < 100; ++k) {
    PhaseSamplePoint h;
    h.frame = Frame::Hyperbolic;
    h.q = rng.cvec2();
    h.v = rng.cvec2();
    const PhaseSamplePoint t = apply_pt(h);
    const PhaseSamplePoint b = apply_boost(h, 0.8);
    for (const auto form : {LagrangianForm::Indirect, LagrangianForm::Plus,
                            LagrangianForm::Minus}) {
      inv = std::max(inv, std::abs(eval_lagrangian(form, t, par) -
                                   eval_lagrangian(form, h, par)));
      inv = std::max(inv, std::abs(eval_lagrangian(form, b, par) -
                                   eval_lagrangian(form, h, par)));
    }
  }
  report_leq(3, "discrete and hyperbolic symmetries preserve the forms", inv,
             1e-12);

  double drift = 0.0;
  const double period = 2.0 * M_PI;
  for (const ChiralMode mode : {ChiralMode::Plus, ChiralMode::Minus}) {
    const Trajectory traj = mode_trajectory(mode, par, Complex(0.7, -0.3),
                                            Complex(-0.4, 0.55),
                                            100.0 * period, 4001);
    const Complex c0 = noether_charge(mode, traj.states.front(), par);
    for (const auto& st : traj.states) {
      drift = std::max(drift, std::abs(noether_charge(mode, st, par) - c0));
    }
  }
  report_leq(3, "charge conservation over one hundred periods", drift, 1e-10);
}

double criterion4() {
  const ModeBasis basis{12};
  const HamiltonianSet h =
      build_hamiltonians(basis, 1.0, Representation::R1, false);
  const double split = max_abs((h.H_I - (h.H_p + h.H_m)).m);
  const double pair = max_abs(h.H_p.adjoint().m - h.H_m.m);
  return std::max(split, pair);
}

void criterion5() {
  const ModeBasis basis{12};
  const double w = 1.0;
  const EtaOperator eta = EtaOperator::mode2_parity(basis);
  const QuadraturePair q1 = quadratures(basis, 0, w);
  const QuadraturePair q2 = quadratures(basis, 1, w);
  double rules = max_abs(eta_conjugate(eta, q1.x).m - q1.x.m);
  rules = std::max(rules, max_abs(eta_conjugate(eta, q2.x).m + q2.x.m));
  rules = std::max(rules, max_abs(eta_conjugate(eta, q1.p).m + q1.p.m));
  rules = std::max(rules, max_abs(eta_conjugate(eta, q2.p).m - q2.p.m));
  const LadderSet set = build_ab(basis, w, Representation::R1);
  rules = std::max(rules, max_abs(eta_adjoint(eta, set.a).m - set.a_tilde.m));
  rules = std::max(rules, max_abs(eta_adjoint(eta, set.b).m - set.b_tilde.m));
  report(5, "metric conjugation rules hold exactly", rules, 0.0, rules == 0.0);

  const HamiltonianSet h = build_hamiltonians(basis, w, Representation::R1,
                                              false);
  const double herm = std::max(is_eta_hermitian(eta, h.H_p, 1e-12).residual,
                               is_eta_hermitian(eta, h.H_m, 1e-12).residual);
  report_leq(5, "split hamiltonians are metric hermitian", herm, 1e-12);
}

double criterion6() {
  const ModeBasis basis{12};
  const InteriorProjector proj = interior(basis, 2);
  const OperatorMatrix id = OperatorMatrix::identity(basis);
  double r = 0.0;
  for (const double w : {0.5, 1.0, 3.0}) {
    for (const Representation rep : {Representation::R1, Representation::R2}) {
      const LadderSet set = build_ab(basis, w, rep);
      r = std::max(r, interior_residual(commutator(set.a, set.a_tilde) - id,
                                        proj));
      r = std::max(r, interior_residual(commutator(set.b, set.b_tilde) - id,
                                        proj));
      r = std::max(r, interior_residual(commutator(set.a, set.b), proj));
      r = std::max(r, interior_residual(commutator(set.a, set.b_tilde), proj));
      r = std::max(r, interior_residual(commutator(set.a_tilde, set.b), proj));
      r = std::max(r,
                   interior_residual(commutator(set.a_tilde, set.b_tilde), proj));
    }
  }
  return r;
}

void criterion7() {
  const ModeBasis basis{12};
  const double w = 1.0;
  const HamiltonianSet h =
      build_hamiltonians(basis, w, Representation::R2, false);
  double ladder = 0.0;
  for (const auto* ham : {&h.H_p, &h.H_m}) {
    const std::vector<Complex> evals = spectrum(*ham);
    std::vector<double> expected;
    for (int n = 0; n < basis.dim; ++n)
      for (int k = 0; k < basis.dim; ++k) expected.push_back(w * (n + 0.5));
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < evals.size(); ++i) {
      ladder = std::max(ladder, std::abs(evals[i] - expected[i]));
    }
  }
  report_leq(7, "diagonal-representation spectra are the oscillator ladder",
             ladder, 1e-10);

  const InteriorProjector proj = interior(basis, 2);
  const LadderSet r1 = build_ab(basis, w, Representation::R1);
  const LadderSet r2 = build_ab(basis, w, Representation::R2);
  const GeneratorSet eta_r2 = build_eta_generators(r2);
  const GeneratorSet herm_r1 =
      build_hermitian_generators(build_eta_generators(r1));
  const CasimirReport cas = casimir(eta_r2, proj);
  const HamiltonianSet h1 =
      build_hamiltonians(basis, w, Representation::R1, false);
  double reality = 0.0;
  for (const OperatorMatrix* op :
       {&h.H_p, &h.H_m, &h.N_p, &h.N_m, &eta_r2.Jz, &cas.J2, &h1.H_I,
        &herm_r1.Jx, &herm_r1.Jy, &herm_r1.Jz}) {
    reality = std::max(reality, reality_check(*op, proj, 1e-9).max_imag);
  }
  report_leq(7, "reality of the curated interior spectra", reality, 1e-9);
}

void criterion8() {
  const ModeBasis basis{12};
  const InteriorProjector proj = interior(basis, 2);
  const LadderSet r1 = build_ab(basis, 1.0, Representation::R1);
  const LadderSet r2 = build_ab(basis, 1.0, Representation::R2);
  const GeneratorSet eta_r1 = build_eta_generators(r1);
  const GeneratorSet eta_r2 = build_eta_generators(r2);
  const GeneratorSet herm = build_hermitian_generators(eta_r1);
  const GeneratorSet standard = build_standard_su11(basis);
  double algebra = 0.0;
  for (const GeneratorSet* gs : {&eta_r1, &eta_r2, &herm, &standard}) {
    algebra = std::max(algebra, check_algebra(*gs, proj, 1e-10).max_residual);
  }
  report_leq(8, "commutation relations close for every realization", algebra,
             1e-10);

  double herm_res = max_abs(herm.Jx.adjoint().m - herm.Jx.m);
  herm_res = std::max(herm_res, max_abs(herm.Jy.adjoint().m - herm.Jy.m));
  herm_res = std::max(herm_res, max_abs(herm.Jz.adjoint().m - herm.Jz.m));
  report_leq(8, "rotated generators are ordinarily hermitian", herm_res,
             1e-12);
}

void criterion9() {
  const ModeBasis basis{12};
  const InteriorProjector proj = interior(basis, 2);
  const ContrastReport contrast = factorizability_contrast(basis, proj);
  const double eta_r = std::max(contrast.eta_residual_r1,
                                contrast.eta_residual_r2);
  report_leq(9, "factorized casimir for the metric realization", eta_r, 1e-10);
  report_leq(9, "factorized casimir for the compact control", contrast.su2_residual,
             1e-10);
  report(9, "standard realization misses the factorized form",
         contrast.standard_residual, 0.1, contrast.standard_residual > 0.1);

  const LadderSet r1 = build_ab(basis, 1.0, Representation::R1);
  const LadderSet r2 = build_ab(basis, 1.0, Representation::R2);
  double comm = 0.0;
  for (const LadderSet* set : {&r1, &r2}) {
    const CasimirReport cas = casimir(build_eta_generators(*set), proj);
    comm = std::max({comm, cas.comm_x, cas.comm_y, cas.comm_z});
  }
  report_leq(9, "casimir commutes with the generators", comm, 1e-10);
}

void criterion10() {
  const ModeBasis basis{12};
  const InteriorProjector proj = interior(basis, 2);
  const GeneratorSet standard = build_standard_su11(basis);
  const CasimirReport cas = casimir(standard, proj);
  const OperatorMatrix quoted = standard_su11_quoted_casimir_form(basis);
  const double defining = std::abs(cas.vacuum_value - Complex(-0.25));
  const double closed = std::abs(quoted.m(0, 0) - Complex(-0.5));
  const double r = std::max(defining, closed);
  report(10,
         "dual vacuum values -1/4 and -1/2 both reproduced and flagged",
         r, 1e-12, r <= 1e-12);
}

}  // namespace

int main() {
  report_leq(1, "deformed brackets from both engines", criterion1(), 1e-14);
  report_leq(2, "soldering residual over one thousand samples", criterion2(),
             1e-12);
  criterion3();
  report_leq(4, "hamiltonian splitting and conjugation pairing", criterion4(),
             1e-13);
  criterion5();
  report_leq(6, "pseudo-mode algebra on the interior", criterion6(), 1e-10);
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion line(s) failed\n", failures);
  return 1;
}
