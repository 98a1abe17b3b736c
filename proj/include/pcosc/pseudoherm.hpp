#pragma once

#include <vector>

#include "pcosc/fock.hpp"
#include "pcosc/types.hpp"

namespace pcosc {

// Antilinear parity-time implementation on the R1 Fock basis: a diagonal
// +-1 unitary part (mode-2 parity, entries (-1)^{n2}) composed with complex
// conjugation. eta^2 = identity. This is the unique realization consistent
// with the transformation rules eta x_i eta^{-1} = g_ij x_j,
// eta p_i eta^{-1} = -g_ij p_j for standard real quadrature matrices.
struct EtaOperator {
  ModeBasis basis;
  VecXd signs;
  bool antilinear = true;

  static EtaOperator mode2_parity(const ModeBasis& basis);
};

// eta v = signs .* conj(v).
VecXc eta_apply(const EtaOperator& eta, const VecXc& v);

// Antilinear sandwich eta A eta^{-1} = Pi2 conj(A) Pi2.
OperatorMatrix eta_conjugate(const EtaOperator& eta, const OperatorMatrix& A);

// A~ = eta^{-1} A^dag eta. Closed form in this realization:
// A~ = Pi2 A^T Pi2. Antimultiplicative: (AB)~ = B~ A~; linear in A.
OperatorMatrix eta_adjoint(const EtaOperator& eta, const OperatorMatrix& A);

// Same map evaluated column by column through eta_apply and the ordinary
// adjoint, with no closed-form shortcut; cross-check oracle for eta_adjoint.
OperatorMatrix eta_adjoint_definitional(const EtaOperator& eta,
                                        const OperatorMatrix& A);

struct EtaVerdict {
  bool pass = false;
  double residual = 0.0;
};

// residual = max-norm of A~ - A.
EtaVerdict is_eta_hermitian(const EtaOperator& eta, const OperatorMatrix& A,
                            double tol);

// <beta~|alpha> = (eta beta)^dag alpha = beta^T Pi2 alpha. Indefinite:
// basis states carry norm (-1)^{n2}; the indefiniteness is reported by the
// checks, not papered over.
Complex eta_inner(const EtaOperator& eta, const VecXc& beta, const VecXc& alpha);

struct BiorthOptions {
  double cluster_tol = 1e-8;  // eigenvalues closer than this share a cluster
  double defect_tol = 1e-8;   // relative singular-value floor of the overlap
};

// Right/left eigenvector pair with <left_n|right_k> = delta_nk after
// blockwise biorthogonalization of degenerate clusters.
struct BiorthogonalSystem {
  VecXc eigenvalues;
  MatXc right;  // columns |psi_n>
  MatXc left;   // columns |psi~_n>
  std::vector<std::vector<int>> clusters;  // index groups per eigenvalue
  double orthonormality_residual = 0.0;    // max |left^dag right - I|
  double completeness_residual = 0.0;      // max |right left^dag - I|
};

// Diagonalizes A together with A^dag and pairs the systems cluster by
// cluster. Throws NumericError("non-diagonalizable within tolerance ...")
// with Jordan-block diagnostics when a cluster overlap is singular.
BiorthogonalSystem biorthogonal_decompose(const MatXc& A,
                                          const BiorthOptions& opts = {});
BiorthogonalSystem biorthogonal_decompose(const OperatorMatrix& A,
                                          const BiorthOptions& opts = {});

// Max-norm residual of eta P_c eta^{-1} = P_c^dag over the spectral
// projectors P_c of the decomposition; the dual-basis correspondence
// |psi~> = eta |psi> at projector level, valid for eta-hermitian input.
double eta_pairing_residual(const EtaOperator& eta,
                            const BiorthogonalSystem& sys);

struct RealityReport {
  double max_imag = 0.0;
  bool pass = false;
  std::vector<Complex> eigenvalues;
};

// Largest |Im(lambda)| over the spectrum of the interior-compressed
// operator.
RealityReport reality_check(const OperatorMatrix& A,
                            const InteriorProjector& proj, double tol);

}  // namespace pcosc
