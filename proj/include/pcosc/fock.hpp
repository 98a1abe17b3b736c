#pragma once

#include <utility>
#include <vector>

#include "pcosc/types.hpp"

namespace pcosc {

// Two-mode truncated Fock basis, lexicographic |n1, n2> with n_i in [0, D).
struct ModeBasis {
  int dim = 12;  // states per mode

  static constexpr int modes = 2;

  int size() const { return dim * dim; }
  int index(int n1, int n2) const;
  std::pair<int, int> occupations(int idx) const;

  bool operator==(const ModeBasis&) const = default;
};

void validate(const ModeBasis& basis);

// Dense operator tagged with its basis; every binary operation checks
// compatibility.
struct OperatorMatrix {
  ModeBasis basis;
  MatXc m;

  OperatorMatrix() = default;
  OperatorMatrix(ModeBasis b, MatXc mat);

  OperatorMatrix adjoint() const { return {basis, m.adjoint()}; }

  static OperatorMatrix identity(const ModeBasis& b);
  static OperatorMatrix zero(const ModeBasis& b);
};

void require_same_basis(const OperatorMatrix& a, const OperatorMatrix& b);

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(Complex c, const OperatorMatrix& a);
OperatorMatrix operator-(const OperatorMatrix& a);

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

// Two concrete realizations of the same operator algebra.
//   R1: everything is assembled from quadrature matrices of two hermitian
//       oscillator modes; the pseudo-mode ladders come out non-hermitian.
//   R2: the pseudo-mode ladders are posited directly as standard lowering/
//       raising matrices on an abstract (n_+, n_-) occupation basis, where
//       spectra are exact.
enum class Representation { R1, R2 };

// Lowering matrix of one hermitian mode, embedded in the two-mode space:
// <n-1| a |n> = sqrt(n).
OperatorMatrix mode_lowering(const ModeBasis& basis, int mode);

struct QuadraturePair {
  OperatorMatrix x, p;
};

// x = (a + a^dag)/sqrt(2 w), p = -i sqrt(w/2) (a - a^dag).
QuadraturePair quadratures(const ModeBasis& basis, int mode, double omega);

// Complex canonical pairs mixing the two modes:
// p_pm = (p1 +- i w x2)/sqrt(2), x_pm = (x1 +- i p2/w)/sqrt(2).
// (x_+)^dag = x_- and (p_+)^dag = p_- hold exactly.
struct PseudoChiralQuadratures {
  OperatorMatrix x_p, p_p, x_m, p_m;
};

PseudoChiralQuadratures build_pm(const ModeBasis& basis, double omega);

// Pseudo-mode ladder quadruple (a, a~, b, b~). In R1 these are built from
// the pseudo-chiral quadratures and collapse to the closed forms
//   a = (a1 - a2^dag)/sqrt(2),   a~ = (a1^dag + a2)/sqrt(2),
//   b = (a1 + a2^dag)/sqrt(2),   b~ = (a1^dag - a2)/sqrt(2).
// In R2, a and b lower and a~, b~ raise on the abstract basis. The tilde
// pairs are adjoint partners only in R2; in R1 they are eta-adjoints.
struct LadderSet {
  Representation rep = Representation::R1;
  ModeBasis basis;
  OperatorMatrix a, a_tilde, b, b_tilde;
};

LadderSet build_ab(const ModeBasis& basis, double omega, Representation rep);

// H_I = g_ij (p_i p_j + w^2 x_i x_j)/2 splits exactly into
// H_pm = p_pm^2/2 + w^2 x_pm^2/2 with H_I = H_+ + H_- and H_+^dag = H_-.
// N_pm are the pseudo-mode number operators a~a and b~b. In R2 the
// Hamiltonians are diagonal, H_pm = w (N_pm + 1/2), and H_I is their sum.
// subtract_zero_point shifts H_pm by -w/2 each (and H_I by -w).
struct HamiltonianSet {
  Representation rep = Representation::R1;
  OperatorMatrix H_I, H_p, H_m, N_p, N_m;
};

HamiltonianSet build_hamiltonians(const ModeBasis& basis, double omega,
                                  Representation rep,
                                  bool subtract_zero_point = false);

// Eigenvalues with multiplicity, sorted by (real, imag).
std::vector<Complex> spectrum(const OperatorMatrix& A);

// Diagonal 0/1 projector onto states with every mode occupation < D - m.
// Identities of polynomial degree <= 2 in the ladders hold exactly inside
// margin 2; the projector removes truncation-edge artifacts.
struct InteriorProjector {
  ModeBasis basis;
  int margin = 2;
  VecXd diag;

  int rank() const;
  OperatorMatrix matrix() const;
};

InteriorProjector interior(const ModeBasis& basis, int margin);

// Max-norm of proj * A * proj.
double interior_residual(const OperatorMatrix& A, const InteriorProjector& proj);

// The interior block of A as a dense rank x rank matrix (rows and columns
// restricted to interior states), for spectral tables free of padding zeros.
MatXc compress(const OperatorMatrix& A, const InteriorProjector& proj);

}  // namespace pcosc
