#pragma once

#include <string>
#include <vector>

#include "pcosc/fock.hpp"
#include "pcosc/types.hpp"

namespace pcosc {

// Which bilinear construction produced a generator set. The su11_eta set is
// built from the pseudo-mode ladders and is closed under the eta-adjoint;
// su11_hermitian is its image under the complexified rotation that makes
// every generator ordinarily hermitian in R1; su11_standard and
// su2_standard are the textbook two-boson constructions.
enum class AlgebraTag { Su11Eta, Su11Hermitian, Su11Standard, Su2Standard };

std::string to_string(AlgebraTag tag);

struct GeneratorSet {
  AlgebraTag tag = AlgebraTag::Su11Eta;
  Representation rep = Representation::R1;
  ModeBasis basis;
  OperatorMatrix Jx, Jy, Jz, Jp, Jm;
  // Total-number operator used in the factorized Casimir candidate:
  // a~a + b~b for the eta and hermitian sets, a^dag a + b b^dag for the
  // standard su(1,1) set, a^dag a + b^dag b for su(2).
  OperatorMatrix Ntot;
};

// Jz = (a~a - b~b)/2, J+ = a~b, J- = -b~a, with Jx, Jy recovered from
// J+- = Jx +- i Jy. Construction checks that recovery entrywise.
GeneratorSet build_eta_generators(const LadderSet& ladders);

// Complexified rotation of the eta set: Jx' = i Jz, Jy' = Jx, Jz' = -i Jy.
// Preserves the commutation relations; in R1 every output is hermitian in
// the ordinary sense. Requires tag Su11Eta.
GeneratorSet build_hermitian_generators(const GeneratorSet& gs);

// Textbook two-boson su(1,1): Jz = (a^dag a + b b^dag)/2, J+ = a^dag b^dag,
// J- = ab. Note b b^dag, not b^dag b: the +1/2 shift is intentional and
// kept exactly as defined.
GeneratorSet build_standard_su11(const ModeBasis& basis);

// Textbook two-boson su(2): Jz = (a^dag a - b^dag b)/2, J+ = a^dag b,
// J- = b^dag a.
GeneratorSet build_standard_su2(const ModeBasis& basis);

struct AlgebraReport {
  double raise_residual = 0.0;  // [Jz, J+] - J+
  double lower_residual = 0.0;  // [Jz, J-] + J-
  double pm_residual = 0.0;     // [J+, J-] +- 2 Jz (sign per algebra)
  double max_residual = 0.0;
  bool degenerate = false;  // all generators numerically zero
  bool pass = false;
};

// Interior residuals of the defining commutation relations. su(1,1) tags
// check [J+, J-] = -2 Jz; the su(2) tag checks [J+, J-] = +2 Jz.
AlgebraReport check_algebra(const GeneratorSet& gs,
                            const InteriorProjector& proj, double tol);

struct CasimirReport {
  OperatorMatrix J2;  // defining expression Jz^2 -+ (J+J- + J-J+)/2
  double comm_x = 0.0, comm_y = 0.0, comm_z = 0.0;  // [J2, Jk] interior
  double factorization_residual = 0.0;  // J2 - (N/2)(N/2+1), interior
  Complex vacuum_value = 0.0;           // <0,0| J2 |0,0>
  std::vector<std::pair<Complex, int>> eigenvalue_table;  // value, count
};

// Casimir from the defining quadratic expression only (never from a closed
// form): J2 = Jz^2 - (J+J- + J-J+)/2 for su(1,1) tags and
// Jz^2 + (J+J- + J-J+)/2 for su(2). The factorization candidate is
// (Ntot/2)(Ntot/2 + 1) with the set's own Ntot. The eigenvalue table is
// the clustered spectrum of the interior block.
CasimirReport casimir(const GeneratorSet& gs, const InteriorProjector& proj);

// A closed form quoted alongside the standard su(1,1) Casimir:
// (a^dag a - b^dag b)^2/4 - (a^dag a + b^dag b + 1)/2. Its constant term
// disagrees with the defining expression (vacuum -1/2 against -1/4); both
// values are surfaced in reports rather than silently reconciled.
OperatorMatrix standard_su11_quoted_casimir_form(const ModeBasis& basis);

struct ContrastReport {
  double eta_residual_r1 = 0.0;
  double eta_residual_r2 = 0.0;
  double standard_residual = 0.0;
  double su2_residual = 0.0;
  bool pass = false;
};

// Factorization dichotomy: the eta set's Casimir equals
// (Ntot/2)(Ntot/2 + 1) on the interior to 1e-10 (both representations),
// the standard su(1,1) set misses its own candidate by more than 0.1, and
// su(2) factorizes again. Residuals are interior max-norms.
ContrastReport factorizability_contrast(const ModeBasis& basis,
                                        const InteriorProjector& proj);

}  // namespace pcosc
